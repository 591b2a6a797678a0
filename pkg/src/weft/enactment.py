"""Schema-level enactment semantics: events, paths, enablement, enumeration.

One enactment instance per key tuple is considered (retransmission is
information-idempotent, so multiplicity adds nothing at this level).  A path
is a sequence of distinct events — emissions ``R!Msg`` and receptions
``R?Msg`` — each enabled at its position.

Observation follows information provenance: emitting a message makes the
sender observe its in and out parameters; receiving one makes the receiver
observe its out parameters (the bindings the message created).  Nil
parameters are never observed.  An emission is enabled when the message is
unsent, every in parameter is observed by the sender, and no out or nil
parameter is; a reception is enabled once the message is emitted and not
yet received.  Receptions impose no ordering among themselves.
"""

from dataclasses import dataclass, field

from . import engine
from .errors import InvalidPathError, NotEnabledError

EMIT = "!"
RECEIVE = "?"


@dataclass(frozen=True, order=True)
class Event:
    """One emission or reception at the schema level."""

    role: str
    kind: str  # EMIT or RECEIVE
    message: str

    def __str__(self):
        return "%s%s%s" % (self.role, self.kind, self.message)

    @classmethod
    def parse(cls, text):
        for kind in (EMIT, RECEIVE):
            if kind in text:
                role, message = text.split(kind, 1)
                return cls(role, kind, message)
        raise ValueError("not an event: %r" % text)


def emission(spec, message_name):
    return Event(spec.message(message_name).sender, EMIT, message_name)


def reception(spec, message_name):
    return Event(spec.message(message_name).receiver, RECEIVE, message_name)


@dataclass(frozen=True)
class Path:
    """An immutable event sequence."""

    events: tuple = ()

    def __str__(self):
        return format_path(self)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def append(self, event):
        return Path(self.events + (event,))


def format_path(path):
    events = path.events if isinstance(path, Path) else tuple(path)
    return "(%s)" % ", ".join(str(e) for e in events)


def parse_path(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return Path(tuple(Event.parse(p) for p in parts))


@dataclass
class ViewState:
    """Per-role observations plus emitted/received bookkeeping for a path."""

    observed: dict = field(default_factory=dict)   # role -> set of parameters
    emitted: set = field(default_factory=set)      # message names
    received: set = field(default_factory=set)     # (role, message) pairs

    @classmethod
    def of(cls, spec, path):
        view = cls({r: set() for r in spec.roles})
        for event in path:
            view.apply(spec, event)
        return view

    def apply(self, spec, event):
        schema = spec.message(event.message)
        if event.kind == EMIT:
            self.emitted.add(event.message)
            self.observed[event.role] |= schema.ins | schema.outs
        else:
            self.received.add((event.role, event.message))
            self.observed[event.role] |= schema.outs


def _check_event_shape(spec, event):
    schema = spec.message(event.message)
    if schema is None:
        raise InvalidPathError("unknown message %s" % event.message)
    expected = schema.sender if event.kind == EMIT else schema.receiver
    if event.role != expected:
        raise InvalidPathError("%s is not the %s of %s" % (
            event.role, "sender" if event.kind == EMIT else "receiver",
            event.message))


def enabled_events(spec, path):
    """The exact set of events that may extend the path.

    Raises InvalidPathError if the path itself violates the invariants
    (every event enabled at its position, receptions after emissions,
    no repeats).
    """
    view = _replay(spec, path)
    return _enabled(spec, view)


def _enabled(spec, view):
    out = set()
    for m in spec.messages:
        if m.name not in view.emitted:
            obs = view.observed[m.sender]
            if m.ins <= obs and not ((m.outs | m.nils) & obs):
                out.add(Event(m.sender, EMIT, m.name))
        elif (m.receiver, m.name) not in view.received:
            out.add(Event(m.receiver, RECEIVE, m.name))
    return out


def _replay(spec, path):
    view = ViewState({r: set() for r in spec.roles})
    for i, event in enumerate(path):
        _check_event_shape(spec, event)
        if event not in _enabled(spec, view):
            raise InvalidPathError(
                "event %s not enabled at position %d of %s"
                % (event, i, format_path(path)))
        view.apply(spec, event)
    return view


def extend(spec, path, event):
    """Append an enabled event; NotEnabledError otherwise."""
    _check_event_shape(spec, event)
    view = _replay(spec, path)
    if event not in _enabled(spec, view):
        raise NotEnabledError("%s is not enabled after %s"
                              % (event, format_path(path)))
    return path.append(event)


def replay(spec, events):
    """Build a Path from raw events, validating each step."""
    path = Path()
    for event in events:
        path = extend(spec, path, event)
    return path


def is_complete(spec, path):
    """True iff every public parameter is observed by at least one role
    (equivalently, adorned out in some emitted message)."""
    view = _replay(spec, path)
    seen = set()
    for obs in view.observed.values():
        seen |= obs
    return seen >= set(spec.parameter_names)


def is_maximal(spec, path):
    return not enabled_events(spec, path)


def decode_event(model, event_id):
    j = event_id >> 1
    if event_id & 1:
        return Event(model.role_names[model.receivers[j]], RECEIVE,
                     model.message_names[j])
    return Event(model.role_names[model.senders[j]], EMIT,
                 model.message_names[j])


def decode_path(model, event_ids):
    return Path(tuple(decode_event(model, e) for e in event_ids))


@dataclass
class PathStats:
    """Result of exhaustive enumeration."""

    paths: int                # distinct nonempty valid sequences
    longest: int
    maximal_paths: list       # Path values, in discovery order

    @property
    def n_maximal(self):
        return len(self.maximal_paths)


def enumerate_all_paths(spec):
    """Exhaustively enumerate every valid path, depth first.

    Children are explored emissions first, then receptions, each in message
    declaration order, so the output order is deterministic.  This is the
    brute-force oracle the canonical reduction is checked against.
    """
    model = engine.compile_protocol(spec)
    result = engine.enumerate_paths(model, collect_maximal=True)
    return PathStats(
        paths=result.total_paths,
        longest=result.longest,
        maximal_paths=[decode_path(model, p) for p in result.maximal],
    )
