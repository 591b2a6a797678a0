"""Search-kernel dispatch and protocol compilation.

The enumeration and canonical-search kernels exist twice: a compiled
extension (weft._engine, Cython) and a pure-Python twin (weft._engine_py).
The compiled one is used when importable; WEFT_PURE_PYTHON=1 forces the
fallback.  Both take the same integer-encoded protocol and return identical
results (tests/test_engine_parity.py holds them to that).
"""

import os
from dataclasses import dataclass

from . import _engine_py

if os.environ.get("WEFT_PURE_PYTHON"):
    _backend = _engine_py
else:
    try:
        from . import _engine as _backend
    except ImportError:
        _backend = _engine_py

MODE_FULL = _engine_py.MODE_FULL
MODE_LIVENESS = _engine_py.MODE_LIVENESS
MODE_SAFETY = _engine_py.MODE_SAFETY

# compiled kernel capacity; larger protocols go to the pure backend
_COMPILED_MAX_MSGS = 32
_COMPILED_MAX_ROLES = 32
_COMPILED_MAX_PARAMS = 64


def backend_name():
    return _backend.BACKEND


@dataclass(frozen=True)
class CompiledProtocol:
    """Integer encoding of a protocol for the kernels.

    Message j maps to events 2j (emission) and 2j+1 (reception); parameters
    map to bit positions in declaration order.
    """

    n_messages: int
    n_roles: int
    senders: tuple
    receivers: tuple
    ins: tuple
    outs: tuple
    nils: tuple
    public_mask: int
    role_names: tuple
    message_names: tuple
    parameter_names: tuple

    @property
    def fits_compiled(self):
        return (self.n_messages <= _COMPILED_MAX_MSGS
                and self.n_roles <= _COMPILED_MAX_ROLES
                and len(self.parameter_names) <= _COMPILED_MAX_PARAMS)


def compile_protocol(spec):
    params = {p.name: i for i, p in enumerate(spec.parameters)}
    roles = {r: i for i, r in enumerate(spec.roles)}

    def mask(names):
        m = 0
        for name in names:
            m |= 1 << params[name]
        return m

    return CompiledProtocol(
        n_messages=len(spec.messages),
        n_roles=len(spec.roles),
        senders=tuple(roles[m.sender] for m in spec.messages),
        receivers=tuple(roles[m.receiver] for m in spec.messages),
        ins=tuple(mask(m.ins) for m in spec.messages),
        outs=tuple(mask(m.outs) for m in spec.messages),
        nils=tuple(mask(m.nils) for m in spec.messages),
        public_mask=(1 << len(spec.parameters)) - 1,
        role_names=tuple(spec.roles),
        message_names=tuple(m.name for m in spec.messages),
        parameter_names=tuple(p.name for p in spec.parameters),
    )


@dataclass
class Enumeration:
    total_paths: int
    longest: int
    maximal: list            # event-id tuples, or None if not collected
    n_maximal: int
    n_states: int            # -1 unless requested
    unsafe_param: str        # parameter name, or None
    unsafe_path: tuple       # event-id tuple, or None
    n_incomplete_maximal: int
    first_incomplete_maximal: tuple


@dataclass
class CanonicalSearch:
    states_checked: int
    maximal: list
    n_maximal: int
    unsafe_param: str
    unsafe_path: tuple
    first_incomplete_maximal: tuple
    stopped_early: bool


def _pick(model):
    if _backend is not _engine_py and not model.fits_compiled:
        return _engine_py
    return _backend


def enumerate_paths(model, collect_maximal=True, want_state_count=False):
    kernel = _pick(model)
    (total, longest, maximal, n_maximal, n_states, unsafe_param, unsafe_path,
     n_incomplete, first_incomplete) = kernel.enumerate_paths(
        model.n_messages, model.senders, model.receivers,
        model.ins, model.outs, model.nils,
        model.n_roles, model.public_mask,
        collect_maximal, want_state_count)
    name = model.parameter_names[unsafe_param] if unsafe_param >= 0 else None
    return Enumeration(total, longest, maximal, n_maximal, n_states,
                       name, unsafe_path, n_incomplete, first_incomplete)


def canonical_search(model, visible_emit, visible_recv, mode=MODE_FULL):
    kernel = _pick(model)
    (checked, maximal, n_maximal, unsafe_param, unsafe_path,
     first_incomplete, stopped) = kernel.canonical_explore(
        model.n_messages, model.senders, model.receivers,
        model.ins, model.outs, model.nils,
        model.n_roles, model.public_mask,
        list(visible_emit), list(visible_recv), mode)
    name = model.parameter_names[unsafe_param] if unsafe_param >= 0 else None
    return CanonicalSearch(checked, maximal, n_maximal, name, unsafe_path,
                           first_incomplete, stopped)
