"""Exception types shared across the toolkit."""


class WeftError(Exception):
    """Base class for all toolkit errors."""


class ProtocolSyntaxError(WeftError):
    """Malformed protocol source; carries the offending position."""

    def __init__(self, message, line, column):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


class DuplicateNameError(WeftError):
    """A role, parameter, or message name is declared twice."""


class UnknownRoleError(WeftError):
    """A message names a sender or receiver that is not a declared role."""


class UnknownMessageError(WeftError):
    """A policy or query names a message the protocol does not define."""


class InvalidProtocolError(WeftError):
    """The protocol fails structural validation; carries the diagnostics."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(d.message for d in diagnostics))
        self.diagnostics = diagnostics


class InvalidPathError(WeftError):
    """An event sequence violates the path invariants."""


class NotEnabledError(WeftError):
    """An event was appended to a path at a position where it is not enabled."""


class PolicySyntaxError(WeftError):
    """Malformed retransmission-policy file; carries the entry index."""

    def __init__(self, message, entry=None):
        if entry is not None:
            message = "entry %d: %s" % (entry, message)
        super().__init__(message)
        self.entry = entry


class TransportError(WeftError):
    """Local transport failure (unroutable address, oversized payload, unbound socket)."""
