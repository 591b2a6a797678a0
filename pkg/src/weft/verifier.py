"""Safety and liveness checking over canonical enactments.

A protocol is safe if no enactment can bind a parameter twice, and live if
every maximal enactment reaches completion (all public parameters bound).
Checking every interleaving is wasteful: most events commute.  The checker
explores a reduced space in which, at any state where some enabled event is
*invisible* — provably unable to disable other events or contribute to a
violation — exactly that event is taken; only states whose enabled events
are all visible branch.  Verdicts over the reduced space equal verdicts
over the full space (tests enforce this against the brute-force
enumerator).

Visibility is derived statically per event:

- an emission is visible if one of its out parameters is conflicted (out in
  two or more messages), if it newly observes a parameter that is out or
  nil in another message of the same sender (it can disable), or if another
  event of the sender's role observes one of its out/nil parameters (it can
  be disabled);
- a reception is visible if it makes its role observe a parameter adorned
  out or nil in some message that role sends.
"""

import time
from dataclasses import dataclass

from . import engine
from .enactment import decode_path, enumerate_all_paths, format_path
from .errors import InvalidProtocolError
from .model import validation_errors

LIVENESS = "liveness"
SAFETY = "safety"

REASON_NOT_LIVE = "Found path that does not extend to completion"
REASON_UNSAFE = "Found parameter with multiple sources in a path"


@dataclass(frozen=True)
class ConflictRelation:
    """Conflicted parameters and the visibility classification per event."""

    conflicted: frozenset        # parameter names
    visible_emit: tuple          # bool per message, declaration order
    visible_recv: tuple

    @classmethod
    def of(cls, spec):
        conflicted = frozenset(spec.conflicted_parameters())

        sendable = {}  # role -> out|nil parameters across messages it sends
        for r in spec.roles:
            acc = set()
            for m in spec.messages_by(r):
                acc |= m.outs | m.nils
            sendable[r] = acc

        # what each event makes its role newly observe
        recv_gain = {m.name: m.outs for m in spec.messages}

        visible_emit = []
        for m in spec.messages:
            vis = bool(m.outs & conflicted)
            if not vis:
                # disabling: observing its outs can block a sibling emission
                others = set()
                for o in spec.messages_by(m.sender):
                    if o.name != m.name:
                        others |= o.outs | o.nils
                vis = bool(m.outs & others)
            if not vis:
                # disable-able: some event of the sender's role observes a
                # parameter this message needs unobserved
                need_absent = m.outs | m.nils
                for o in spec.messages:
                    if o.name == m.name:
                        continue
                    if o.sender == m.sender and o.outs & need_absent:
                        vis = True
                        break
                    if o.receiver == m.sender and recv_gain[o.name] & need_absent:
                        vis = True
                        break
            visible_emit.append(vis)

        visible_recv = [bool(recv_gain[m.name] & sendable[m.receiver])
                        for m in spec.messages]
        return cls(conflicted, tuple(visible_emit), tuple(visible_recv))


@dataclass
class ExplorationResult:
    states_checked: int
    canonical_maximal_paths: list    # Path values


@dataclass
class Verdict:
    property: str                    # LIVENESS or SAFETY
    holds: bool
    reason: str = None
    counterexample_path: object = None
    offending_parameter: str = None
    checked: int = 0
    maximal_paths: int = 0
    elapsed: float = 0.0

    def to_dict(self):
        """Machine-readable form; keys mirror the transcript line."""
        out = {("live" if self.property == LIVENESS else "safe"): self.holds}
        if self.reason:
            out["reason"] = self.reason
        if self.counterexample_path is not None:
            out["path"] = [str(e) for e in self.counterexample_path]
        if self.offending_parameter:
            out["parameter"] = self.offending_parameter
        out["checked"] = self.checked
        out["maximal paths"] = self.maximal_paths
        out["elapsed"] = self.elapsed
        return out

    def render(self):
        """Single-line transcript form, e.g.
        {'live': True, 'checked': 7, 'maximal paths': 1, 'elapsed': 0.001}"""
        parts = ["'%s': %s" % ("live" if self.property == LIVENESS else "safe",
                               self.holds)]
        if self.reason:
            parts.append("'reason': '%s'" % self.reason)
        if self.counterexample_path is not None:
            parts.append("'path': %s" % format_path(self.counterexample_path))
        if self.offending_parameter:
            parts.append("'parameter': '%s'" % self.offending_parameter)
        parts.append("'checked': %d" % self.checked)
        parts.append("'maximal paths': %d" % self.maximal_paths)
        parts.append("'elapsed': %s" % self.elapsed)
        return "{%s}" % ", ".join(parts)


def _require_valid(spec):
    errors = validation_errors(spec)
    if errors:
        raise InvalidProtocolError(errors)


def _search(spec, mode):
    model = engine.compile_protocol(spec)
    relation = ConflictRelation.of(spec)
    result = engine.canonical_search(model, relation.visible_emit,
                                     relation.visible_recv, mode)
    return model, result


def canonical_explore(spec):
    """Full reduced exploration; no property checked, no early exit."""
    _require_valid(spec)
    model, result = _search(spec, engine.MODE_FULL)
    return ExplorationResult(
        states_checked=result.states_checked,
        canonical_maximal_paths=[decode_path(model, p) for p in result.maximal],
    )


def check_liveness(spec):
    _require_valid(spec)
    started = time.perf_counter()
    model, result = _search(spec, engine.MODE_LIVENESS)
    elapsed = time.perf_counter() - started
    verdict = Verdict(LIVENESS, result.first_incomplete_maximal is None,
                      checked=result.states_checked,
                      maximal_paths=result.n_maximal,
                      elapsed=elapsed)
    if not verdict.holds:
        verdict.reason = REASON_NOT_LIVE
        verdict.counterexample_path = decode_path(
            model, result.first_incomplete_maximal)
    return verdict


def check_safety(spec, precheck=True):
    """Safety verdict over the canonical space.

    With precheck (the default), a protocol with no conflicted parameter is
    reported safe without consulting the search outcome; the search still
    runs to fill in the checked/maximal counts, and its answer necessarily
    agrees (no conflicted parameter means no state can bind twice).
    """
    _require_valid(spec)
    started = time.perf_counter()
    conflict_free = precheck and not ConflictRelation.of(spec).conflicted
    model, result = _search(spec, engine.MODE_SAFETY)
    elapsed = time.perf_counter() - started
    holds = result.unsafe_param is None or conflict_free
    verdict = Verdict(SAFETY, holds,
                      checked=result.states_checked,
                      maximal_paths=result.n_maximal,
                      elapsed=elapsed)
    if not holds:
        verdict.reason = REASON_UNSAFE
        verdict.offending_parameter = result.unsafe_param
        verdict.counterexample_path = decode_path(model, result.unsafe_path)
    return verdict


@dataclass
class AllPathsReport:
    stats: object           # PathStats
    elapsed: float

    def render(self):
        lines = ["%d paths, longest path: %d, maximal paths: %d, elapsed: %s"
                 % (self.stats.paths, self.stats.longest,
                    self.stats.n_maximal, self.elapsed)]
        lines.extend(format_path(p) for p in self.stats.maximal_paths)
        return "\n".join(lines)

    def to_dict(self):
        return {
            "paths": self.stats.paths,
            "longest path": self.stats.longest,
            "maximal paths": self.stats.n_maximal,
            "elapsed": self.elapsed,
            "paths list": [[str(e) for e in p]
                           for p in self.stats.maximal_paths],
        }


def all_paths_report(spec):
    """Unreduced enumeration, in the transcript format."""
    _require_valid(spec)
    started = time.perf_counter()
    stats = enumerate_all_paths(spec)
    return AllPathsReport(stats, time.perf_counter() - started)


# --- brute-force verdicts (the oracle side of the reduction check) --------

def brute_force_liveness(spec):
    """Liveness from the full enumeration: every maximal path complete."""
    _require_valid(spec)
    model = engine.compile_protocol(spec)
    result = engine.enumerate_paths(model, collect_maximal=False)
    return result.n_incomplete_maximal == 0


def brute_force_safety(spec):
    """Safety from the full enumeration: no path binds a parameter twice."""
    _require_valid(spec)
    model = engine.compile_protocol(spec)
    result = engine.enumerate_paths(model, collect_maximal=False)
    return result.unsafe_param is None
