"""Protocol source parser and canonical printer.

The surface syntax is whitespace-insensitive and accepts the spelling
variants found in the wild: ``role``/``roles``, ``parameter``/``parameters``,
and both arrow forms ``->`` and ``↦``.  The canonical printer emits
``roles``, ``parameters``, ``->``, and marks keys only in the protocol
declaration; parsing its output yields a structurally equal protocol.
"""

from .errors import DuplicateNameError, ProtocolSyntaxError, UnknownRoleError
from .model import ADORNMENTS, Message, Parameter, Protocol

ARROW = "->"
_ARROW_CHARS = {"↦"}  # ↦


class Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind, value, line, column):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self):
        return "Token(%s, %r)" % (self.kind, self.value)


def _tokenize(source):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c in "{}[],:":
            tokens.append(Token(c, c, line, col))
            i += 1
            col += 1
            continue
        if c in _ARROW_CHARS:
            tokens.append(Token("arrow", ARROW, line, col))
            i += 1
            col += 1
            continue
        if c == "-":
            if i + 1 < n and source[i + 1] == ">":
                tokens.append(Token("arrow", ARROW, line, col))
                i += 2
                col += 2
                continue
            raise ProtocolSyntaxError("stray '-'", line, col)
        if c.isalpha() or c == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("ident", source[start:i], line, col))
            col += i - start
            continue
        raise ProtocolSyntaxError("unexpected character %r" % c, line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def here(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message):
        tok = self.here
        raise ProtocolSyntaxError(message, tok.line, tok.column)

    def expect(self, kind, what=None):
        tok = self.here
        if tok.kind != kind:
            self.fail("expected %s, found %r" % (what or kind, tok.value or "end of input"))
        return self.advance()

    def at_ident(self, *values):
        tok = self.here
        return tok.kind == "ident" and (not values or tok.value in values)

    # --- grammar --------------------------------------------------------

    def protocol(self):
        names = []
        while self.at_ident():
            names.append(self.advance().value)
        if not names:
            self.fail("expected protocol name")
        name = " ".join(names)
        self.expect("{", "'{'")

        roles = self.role_section()
        parameters = self.parameter_section()
        messages = []
        while self.here.kind != "}":
            if self.here.kind == "eof":
                self.fail("unterminated protocol body (missing '}')")
            messages.append(self.message(roles))
        self.advance()  # '}'
        if self.here.kind != "eof":
            self.fail("trailing input after protocol body")
        if not messages:
            self.fail("protocol declares no messages")

        spec = Protocol(name, tuple(roles), tuple(parameters), tuple(messages))
        return _promote_keys(spec)

    def role_section(self):
        if not self.at_ident("role", "roles"):
            self.fail("expected 'role' or 'roles'")
        self.advance()
        roles = [self.expect("ident", "role name").value]
        while self.here.kind == ",":
            self.advance()
            roles.append(self.expect("ident", "role name").value)
        seen = set()
        for r in roles:
            if r in seen:
                raise DuplicateNameError("role %s declared twice" % r)
            seen.add(r)
        return roles

    def parameter_section(self):
        if not self.at_ident("parameter", "parameters"):
            self.fail("expected 'parameter' or 'parameters'")
        self.advance()
        params = [self.parameter()]
        while self.here.kind == ",":
            self.advance()
            params.append(self.parameter())
        seen = set()
        for p in params:
            if p.name in seen:
                raise DuplicateNameError("parameter %s declared twice" % p.name)
            seen.add(p.name)
        return params

    def parameter(self):
        if not self.at_ident(*ADORNMENTS):
            self.fail("expected adornment ('in', 'out', or 'nil')")
        adornment = self.advance().value
        name = self.expect("ident", "parameter name").value
        key = False
        if self.at_ident("key"):
            self.advance()
            key = True
        return Parameter(name, adornment, key)

    def message(self, roles):
        sender_tok = self.expect("ident", "role name")
        if self.here.kind != "arrow":
            # distinguishes plain messages from composition/reference syntax,
            # which this toolkit does not support
            self.fail("expected '->' after role name "
                      "(protocol references/composition are unsupported)")
        self.advance()
        receiver_tok = self.expect("ident", "role name")
        self.expect(":", "':'")
        name = self.expect("ident", "message name").value
        self.expect("[", "'['")
        params = [self.parameter()]
        while self.here.kind == ",":
            self.advance()
            params.append(self.parameter())
        self.expect("]", "']'")

        for tok in (sender_tok, receiver_tok):
            if tok.value not in roles:
                raise UnknownRoleError("message %s uses undeclared role %s"
                                       % (name, tok.value))
        seen = set()
        for p in params:
            if p.name in seen:
                raise DuplicateNameError("message %s declares parameter %s twice"
                                         % (name, p.name))
            seen.add(p.name)
        return Message(name, sender_tok.value, receiver_tok.value, tuple(params))


def _promote_keys(spec):
    """Normalize key markers: a parameter marked key anywhere is a key everywhere.

    Both the public declaration and every message occurrence end up carrying
    the flag, so parse(format(spec)) is structurally equal no matter where
    the source text put its markers.
    """
    marked = {p.name for p in spec.parameters if p.key}
    for m in spec.messages:
        marked |= {p.name for p in m.parameters if p.key}

    def norm(p):
        return Parameter(p.name, p.adornment, p.name in marked)

    parameters = tuple(norm(p) for p in spec.parameters)
    messages = tuple(
        Message(m.name, m.sender, m.receiver, tuple(norm(p) for p in m.parameters))
        for m in spec.messages)
    return Protocol(spec.name, spec.roles, parameters, messages)


def parse_protocol(source):
    """Parse protocol source text into a Protocol.

    Raises ProtocolSyntaxError (with position), DuplicateNameError, or
    UnknownRoleError.  Structural soundness beyond these is the job of
    model.validate.
    """
    parser = _Parser(_tokenize(source))
    spec = parser.protocol()
    names = set()
    for m in spec.messages:
        if m.name in names:
            raise DuplicateNameError("message %s declared twice" % m.name)
        names.add(m.name)
    return spec


def parse_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_protocol(handle.read())


def format_protocol(spec):
    """Canonical pretty-printing; reparsing the result gives an equal spec."""
    keys = set(spec.keys)

    def fmt_param(p, mark_key):
        text = "%s %s" % (p.adornment, p.name)
        if mark_key and p.name in keys:
            text += " key"
        return text

    lines = ["%s {" % spec.name]
    lines.append("  roles %s" % ", ".join(spec.roles))
    lines.append("  parameters %s" % ", ".join(
        fmt_param(p, True) for p in spec.parameters))
    lines.append("")
    for m in spec.messages:
        lines.append("  %s -> %s: %s[%s]" % (
            m.sender, m.receiver, m.name,
            ", ".join(fmt_param(p, False) for p in m.parameters)))
    lines.append("}")
    return "\n".join(lines) + "\n"
