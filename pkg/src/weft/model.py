"""Protocol model: roles, adorned parameters, message schemas.

An information protocol constrains *information flow* rather than message
order: each message parameter carries an adornment telling the sender what
its local state must look like for the message to be legal.
"""

from dataclasses import dataclass, field

IN = "in"
OUT = "out"
NIL = "nil"

ADORNMENTS = (IN, OUT, NIL)


@dataclass(frozen=True)
class Parameter:
    """A parameter declaration: adornment plus an optional key marker."""

    name: str
    adornment: str
    key: bool = False

    def __post_init__(self):
        if self.adornment not in ADORNMENTS:
            raise ValueError("bad adornment: %r" % self.adornment)


@dataclass(frozen=True)
class Message:
    """One message schema: sender, receiver, and adorned parameters."""

    name: str
    sender: str
    receiver: str
    parameters: tuple = ()

    def parameter(self, name):
        for p in self.parameters:
            if p.name == name:
                return p
        return None

    def adornment(self, name):
        p = self.parameter(name)
        return p.adornment if p else None

    @property
    def ins(self):
        return {p.name for p in self.parameters if p.adornment == IN}

    @property
    def outs(self):
        return {p.name for p in self.parameters if p.adornment == OUT}

    @property
    def nils(self):
        return {p.name for p in self.parameters if p.adornment == NIL}


@dataclass(frozen=True)
class Protocol:
    """A parsed protocol: name, roles, public parameters, messages.

    A parameter is a key if it is marked ``key`` anywhere — in the public
    declaration or in any message.  The tuple of key parameters in public
    declaration order is the identity of an enactment instance.
    """

    name: str
    roles: tuple = ()
    parameters: tuple = ()
    messages: tuple = ()

    # --- derived views -------------------------------------------------

    @property
    def parameter_names(self):
        return [p.name for p in self.parameters]

    @property
    def keys(self):
        """Key parameter names, in public declaration order."""
        marked = {p.name for p in self.parameters if p.key}
        for m in self.messages:
            marked |= {p.name for p in m.parameters if p.key}
        return [p.name for p in self.parameters if p.name in marked]

    def message(self, name):
        for m in self.messages:
            if m.name == name:
                return m
        return None

    def messages_by(self, role):
        return [m for m in self.messages if m.sender == role]

    def messages_to(self, role):
        return [m for m in self.messages if m.receiver == role]

    def out_sources(self, parameter):
        """Messages in which the parameter is adorned out."""
        return [m for m in self.messages if parameter in m.outs]

    def conflicted_parameters(self):
        """Parameters adorned out in two or more messages.

        Two such emissions in one enactment would bind the parameter twice,
        so these are the only candidates for safety violations.
        """
        return [p.name for p in self.parameters
                if len(self.out_sources(p.name)) >= 2]


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding.  Severity is ``error``, ``warning``, or ``info``."""

    severity: str
    message: str

    def __str__(self):
        return "%s: %s" % (self.severity, self.message)


ERROR = "error"
WARNING = "warning"
INFO = "info"


def validate(protocol):
    """Check structural invariants; return an ordered list of diagnostics.

    Errors are hard invariant violations (the verifier refuses to run on
    them); warnings flag legal-but-suspicious declarations such as a public
    parameter no message can ever bind; info notes point at parameters with
    multiple out sources, the raw material of safety conflicts.
    """
    out = []
    keys = protocol.keys

    if len(protocol.roles) < 2:
        out.append(Diagnostic(ERROR, "protocol %s declares fewer than 2 roles"
                              % protocol.name))
    if not protocol.messages:
        out.append(Diagnostic(ERROR, "protocol %s declares no messages"
                              % protocol.name))
    if not keys:
        out.append(Diagnostic(ERROR, "protocol %s declares no key parameter"
                              % protocol.name))

    public = set(protocol.parameter_names)
    for m in protocol.messages:
        if m.sender == m.receiver:
            out.append(Diagnostic(ERROR, "message %s has sender = receiver (%s)"
                                  % (m.name, m.sender)))
        for p in m.parameters:
            if p.name not in public:
                out.append(Diagnostic(
                    ERROR,
                    "message %s parameter %s not declared in protocol "
                    "parameters (private parameters are unsupported)"
                    % (m.name, p.name)))
        for k in keys:
            if m.parameter(k) is None:
                out.append(Diagnostic(ERROR, "message %s missing key %s"
                                      % (m.name, k)))

    for p in protocol.parameters:
        if p.adornment == OUT and not protocol.out_sources(p.name):
            out.append(Diagnostic(WARNING,
                                  "%s never adorned out in any message"
                                  % p.name))

    for p in protocol.parameters:
        sources = protocol.out_sources(p.name)
        if len(sources) >= 2:
            out.append(Diagnostic(
                INFO,
                "parameter %s adorned out in %s: potential safety conflict"
                % (p.name, ", ".join(m.name for m in sources))))

    return out


def validation_errors(protocol):
    return [d for d in validate(protocol) if d.severity == ERROR]
