"""weft: a toolkit for information protocols.

Parse and validate .bspl protocol files, verify them for safety and
liveness with canonical-enactment reduction, and run protocol-compliant
agents over best-effort datagram transport with enablement-based decision
makers and remind-until retransmission policies.
"""

from .enactment import (EMIT, RECEIVE, Event, Path, PathStats,
                        enabled_events, enumerate_all_paths, extend,
                        format_path, is_complete, is_maximal, parse_path,
                        replay)
from .engine import backend_name
from .errors import (DuplicateNameError, InvalidPathError,
                     InvalidProtocolError, NotEnabledError,
                     PolicySyntaxError, ProtocolSyntaxError, TransportError,
                     UnknownMessageError, UnknownRoleError, WeftError)
from .model import Diagnostic, Message, Parameter, Protocol, validate
from .parser import format_protocol, parse_file, parse_protocol
from .verifier import (Verdict, all_paths_report, canonical_explore,
                       check_liveness, check_safety)

__version__ = "0.1.0"

__all__ = [
    "EMIT", "RECEIVE", "Event", "Path", "PathStats", "Protocol", "Message",
    "Parameter", "Diagnostic", "Verdict",
    "parse_protocol", "parse_file", "format_protocol", "validate",
    "enabled_events", "extend", "replay", "is_complete", "is_maximal",
    "enumerate_all_paths", "format_path", "parse_path",
    "check_liveness", "check_safety", "canonical_explore", "all_paths_report",
    "backend_name",
    "WeftError", "ProtocolSyntaxError", "DuplicateNameError",
    "UnknownRoleError", "UnknownMessageError", "InvalidProtocolError",
    "InvalidPathError", "NotEnabledError", "PolicySyntaxError",
    "TransportError",
]
