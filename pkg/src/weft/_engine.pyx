# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernels; twin of weft._engine_py (same functions, same results).

Capacity: 32 messages (64 events), 64 parameters, 32 roles.  The dispatcher
in weft.engine routes anything larger to the pure-Python backend.
"""

from libc.stdint cimport uint64_t, uint32_t

BACKEND = "compiled"

MODE_FULL = 0
MODE_LIVENESS = 1
MODE_SAFETY = 2

cdef enum:
    MAX_MSGS = 32
    MAX_ROLES = 32
    MAX_EVENTS = 64


cdef class _Search:
    cdef int n_msgs, n_roles, depth, mode
    cdef uint64_t public_mask
    cdef int senders[MAX_MSGS]
    cdef int receivers[MAX_MSGS]
    cdef uint64_t ins[MAX_MSGS]
    cdef uint64_t outs[MAX_MSGS]
    cdef uint64_t block[MAX_MSGS]
    cdef uint64_t obs[MAX_ROLES]
    cdef int path[MAX_EVENTS]
    cdef int emit_step[MAX_MSGS]
    cdef bint visible_emit[MAX_MSGS]
    cdef bint visible_recv[MAX_MSGS]

    cdef long long total
    cdef int longest
    cdef long long n_maximal
    cdef long long n_incomplete
    cdef int unsafe_param
    cdef bint stopped
    cdef object maximal          # list or None
    cdef object states           # set or None
    cdef object unsafe_path      # tuple or None
    cdef object first_incomplete

    def __cinit__(self, n_msgs, senders, receivers, ins, outs, nils,
                  n_roles, public_mask):
        cdef int j
        if n_msgs > MAX_MSGS or n_roles > MAX_ROLES:
            raise ValueError("protocol too large for compiled kernel")
        self.n_msgs = n_msgs
        self.n_roles = n_roles
        self.public_mask = public_mask
        for j in range(n_msgs):
            self.senders[j] = senders[j]
            self.receivers[j] = receivers[j]
            self.ins[j] = ins[j]
            self.outs[j] = outs[j]
            self.block[j] = outs[j] | nils[j]
            self.emit_step[j] = 0
            self.visible_emit[j] = False
            self.visible_recv[j] = False
        for j in range(n_roles):
            self.obs[j] = 0
        self.depth = 0
        self.total = 0
        self.longest = 0
        self.n_maximal = 0
        self.n_incomplete = 0
        self.unsafe_param = -1
        self.stopped = False
        self.maximal = None
        self.states = None
        self.unsafe_path = None
        self.first_incomplete = None

    cdef tuple _snapshot_path(self):
        cdef int i
        return tuple([self.path[i] for i in range(self.depth)])

    cdef int _lowest_bit(self, uint64_t mask):
        cdef int i = 0
        while not (mask >> i) & 1:
            i += 1
        return i

    # ---- full enumeration -------------------------------------------------

    cdef void _enumerate(self, uint32_t emitted, uint32_t received,
                         uint64_t out_union):
        cdef int j, s, r
        cdef uint64_t saved
        cdef bint extended = False
        for j in range(self.n_msgs):
            if (emitted >> j) & 1:
                continue
            s = self.senders[j]
            if (self.ins[j] & ~self.obs[s]) or (self.block[j] & self.obs[s]):
                continue
            extended = True
            self.total += 1
            if self.depth + 1 > self.longest:
                self.longest = self.depth + 1
            self.path[self.depth] = 2 * j
            self.depth += 1
            if (self.outs[j] & out_union) and self.unsafe_param < 0:
                self.unsafe_param = self._lowest_bit(self.outs[j] & out_union)
                self.unsafe_path = self._snapshot_path()
            saved = self.obs[s]
            self.obs[s] |= self.ins[j] | self.outs[j]
            if self.states is not None:
                self.states.add(
                    (<uint64_t> (emitted | ((<uint32_t> 1) << j)) << 32) | received)
            self._enumerate(emitted | ((<uint32_t> 1) << j), received,
                            out_union | self.outs[j])
            self.obs[s] = saved
            self.depth -= 1
        for j in range(self.n_msgs):
            if not ((emitted >> j) & 1) or ((received >> j) & 1):
                continue
            extended = True
            self.total += 1
            if self.depth + 1 > self.longest:
                self.longest = self.depth + 1
            self.path[self.depth] = 2 * j + 1
            self.depth += 1
            r = self.receivers[j]
            saved = self.obs[r]
            self.obs[r] |= self.outs[j]
            if self.states is not None:
                self.states.add((<uint64_t> emitted << 32) | received | ((<uint32_t> 1) << j))
            self._enumerate(emitted, received | ((<uint32_t> 1) << j), out_union)
            self.obs[r] = saved
            self.depth -= 1
        if not extended:
            self.n_maximal += 1
            if self.maximal is not None:
                self.maximal.append(self._snapshot_path())
            if (out_union & self.public_mask) != self.public_mask:
                self.n_incomplete += 1
                if self.first_incomplete is None:
                    self.first_incomplete = self._snapshot_path()

    # ---- canonical reduction ----------------------------------------------

    cdef list _children(self, uint32_t emitted, uint32_t received):
        cdef int j, s, k, n
        cdef list emits = [], recvs = []
        for j in range(self.n_msgs):
            if not ((emitted >> j) & 1):
                s = self.senders[j]
                if not ((self.ins[j] & ~self.obs[s]) or
                        (self.block[j] & self.obs[s])):
                    emits.append(j)
            elif not ((received >> j) & 1):
                recvs.append(j)
        recvs.sort(key=self._recency)
        cdef list inv = [2 * j for j in emits if not self.visible_emit[j]]
        if not inv:
            inv = [2 * j + 1 for j in recvs if not self.visible_recv[j]]
        if inv:
            return inv[:1]
        return [2 * j for j in emits] + [2 * j + 1 for j in recvs]

    def _recency(self, j):
        return -self.emit_step[j]

    cdef void _canonical(self, uint32_t emitted, uint32_t received,
                         uint64_t out_union, object seen):
        cdef list evs = self._children(emitted, received)
        cdef int ev, j, role
        cdef uint64_t saved, key
        cdef bint fresh
        if not evs:
            self.maximal.append(self._snapshot_path())
            if (out_union & self.public_mask) != self.public_mask:
                if self.first_incomplete is None:
                    self.first_incomplete = self._snapshot_path()
                if self.mode == MODE_LIVENESS:
                    self.stopped = True
            return
        for ev in evs:
            j = ev >> 1
            if ev & 1:
                key = ((<uint64_t> emitted) << 32) | received | ((<uint32_t> 1) << j)
            else:
                key = ((<uint64_t> (emitted | ((<uint32_t> 1) << j))) << 32) | received
            fresh = key not in seen
            if fresh:
                seen.add(key)
            self.path[self.depth] = ev
            self.depth += 1
            if ev & 1:
                role = self.receivers[j]
                saved = self.obs[role]
                self.obs[role] |= self.outs[j]
                if fresh:
                    self._canonical(emitted, received | ((<uint32_t> 1) << j), out_union, seen)
                self.obs[role] = saved
            else:
                role = self.senders[j]
                if fresh and (self.outs[j] & out_union) and self.unsafe_param < 0:
                    self.unsafe_param = self._lowest_bit(self.outs[j] & out_union)
                    self.unsafe_path = self._snapshot_path()
                    if self.mode == MODE_SAFETY:
                        self.stopped = True
                        self.depth -= 1
                        return
                saved = self.obs[role]
                self.obs[role] |= self.ins[j] | self.outs[j]
                self.emit_step[j] = self.depth
                if fresh:
                    self._canonical(emitted | ((<uint32_t> 1) << j), received,
                                    out_union | self.outs[j], seen)
                self.emit_step[j] = 0
                self.obs[role] = saved
            self.depth -= 1
            if self.stopped:
                return


def enumerate_paths(n_msgs, senders, receivers, ins, outs, nils,
                    n_roles, public_mask, collect_maximal, want_state_count):
    """See weft._engine_py.enumerate_paths."""
    cdef _Search s = _Search(n_msgs, senders, receivers, ins, outs, nils,
                             n_roles, public_mask)
    if collect_maximal:
        s.maximal = []
    if want_state_count:
        s.states = {0}
    s._enumerate(0, 0, 0)
    n_states = len(s.states) if s.states is not None else -1
    return (s.total, s.longest, s.maximal, s.n_maximal, n_states,
            s.unsafe_param, s.unsafe_path, s.n_incomplete, s.first_incomplete)


def canonical_explore(n_msgs, senders, receivers, ins, outs, nils,
                      n_roles, public_mask, visible_emit, visible_recv, mode):
    """See weft._engine_py.canonical_explore."""
    cdef _Search s = _Search(n_msgs, senders, receivers, ins, outs, nils,
                             n_roles, public_mask)
    cdef int j
    for j in range(n_msgs):
        s.visible_emit[j] = bool(visible_emit[j])
        s.visible_recv[j] = bool(visible_recv[j])
    s.mode = mode
    s.maximal = []
    seen = {0}
    s._canonical(0, 0, 0, seen)
    return (len(seen), s.maximal, len(s.maximal), s.unsafe_param,
            s.unsafe_path, s.first_incomplete, s.stopped)
