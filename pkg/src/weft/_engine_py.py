"""Pure-Python search kernels.

Twin of the compiled extension (weft._engine); same functions, same results.
Event encoding: emission of message j is event 2j, reception is 2j+1.

State of a path is fully determined by its event set: a role observes the
out parameters of messages it has received plus all non-nil parameters of
messages it has emitted.  An emission is enabled when the message is
unsent, its in parameters are observed by the sender, and none of its
out/nil parameters are.  A reception is enabled once the message is emitted
and not yet received.
"""

BACKEND = "pure-python"

MODE_FULL = 0
MODE_LIVENESS = 1
MODE_SAFETY = 2


def enumerate_paths(n_msgs, senders, receivers, ins, outs, nils,
                    n_roles, public_mask, collect_maximal, want_state_count):
    """Depth-first enumeration of every valid event sequence.

    Returns (total_paths, longest, maximal, n_maximal, n_states,
             unsafe_param, unsafe_path, n_incomplete_maximal,
             first_incomplete_maximal) where `maximal` is None unless
    collect_maximal, n_states is -1 unless want_state_count, unsafe_param is
    -1 when no reachable state binds a parameter twice, and paths are tuples
    of event ids.
    """
    obs = [0] * n_roles
    path = []
    maximal = [] if collect_maximal else None
    states = {(0, 0)} if want_state_count else None

    stats = {
        "total": 0, "longest": 0, "n_maximal": 0,
        "unsafe_param": -1, "unsafe_path": None,
        "n_incomplete": 0, "first_incomplete": None,
    }

    block = [outs[j] | nils[j] for j in range(n_msgs)]

    def explore(emitted, received, out_union):
        extended = False
        # emissions in declaration order, then receptions in declaration order
        for j in range(n_msgs):
            if emitted >> j & 1:
                continue
            s = senders[j]
            if ins[j] & ~obs[s] or block[j] & obs[s]:
                continue
            extended = True
            stats["total"] += 1
            if len(path) + 1 > stats["longest"]:
                stats["longest"] = len(path) + 1
            path.append(2 * j)
            if outs[j] & out_union and stats["unsafe_param"] < 0:
                overlap = outs[j] & out_union
                stats["unsafe_param"] = (overlap & -overlap).bit_length() - 1
                stats["unsafe_path"] = tuple(path)
            saved = obs[s]
            obs[s] |= ins[j] | outs[j]
            e2 = emitted | 1 << j
            if states is not None:
                states.add((e2, received))
            explore(e2, received, out_union | outs[j])
            obs[s] = saved
            path.pop()
        for j in range(n_msgs):
            if not (emitted >> j & 1) or received >> j & 1:
                continue
            extended = True
            stats["total"] += 1
            if len(path) + 1 > stats["longest"]:
                stats["longest"] = len(path) + 1
            path.append(2 * j + 1)
            r = receivers[j]
            saved = obs[r]
            obs[r] |= outs[j]
            r2 = received | 1 << j
            if states is not None:
                states.add((emitted, r2))
            explore(emitted, r2, out_union)
            obs[r] = saved
            path.pop()
        if not extended:
            stats["n_maximal"] += 1
            if maximal is not None:
                maximal.append(tuple(path))
            if out_union & public_mask != public_mask:
                stats["n_incomplete"] += 1
                if stats["first_incomplete"] is None:
                    stats["first_incomplete"] = tuple(path)

    explore(0, 0, 0)
    n_states = len(states) if states is not None else -1
    return (stats["total"], stats["longest"], maximal, stats["n_maximal"],
            n_states, stats["unsafe_param"], stats["unsafe_path"],
            stats["n_incomplete"], stats["first_incomplete"])


def canonical_explore(n_msgs, senders, receivers, ins, outs, nils,
                      n_roles, public_mask, visible_emit, visible_recv, mode):
    """Reduced depth-first search over canonical enactments.

    At each state, if any enabled event is invisible the search takes
    exactly one of them (emissions before receptions, emissions in
    declaration order, receptions most-recently-emitted first); otherwise
    it branches over every enabled event.  States are memoized by event
    set.  mode selects early exit: MODE_LIVENESS stops at the first
    incomplete maximal path, MODE_SAFETY at the first state binding a
    parameter twice.

    Returns (states_checked, maximal, n_maximal, unsafe_param, unsafe_path,
             first_incomplete_maximal, stopped_early).
    """
    obs = [0] * n_roles
    emit_step = [0] * n_msgs  # 1-based position of each emission in the path
    path = []
    seen = {(0, 0)}
    maximal = []
    result = {"unsafe_param": -1, "unsafe_path": None,
              "incomplete": None, "stopped": False}
    block = [outs[j] | nils[j] for j in range(n_msgs)]

    def children(emitted, received):
        emits, recvs = [], []
        for j in range(n_msgs):
            if not (emitted >> j & 1):
                s = senders[j]
                if not (ins[j] & ~obs[s] or block[j] & obs[s]):
                    emits.append(j)
            elif not (received >> j & 1):
                recvs.append(j)
        recvs.sort(key=lambda j: -emit_step[j])
        inv = [2 * j for j in emits if not visible_emit[j]]
        if not inv:
            inv = [2 * j + 1 for j in recvs if not visible_recv[j]]
        if inv:
            return inv[:1]
        return [2 * j for j in emits] + [2 * j + 1 for j in recvs]

    def explore(emitted, received, out_union):
        evs = children(emitted, received)
        if not evs:
            maximal.append(tuple(path))
            if out_union & public_mask != public_mask:
                if result["incomplete"] is None:
                    result["incomplete"] = tuple(path)
                if mode == MODE_LIVENESS:
                    result["stopped"] = True
            return
        for ev in evs:
            j = ev >> 1
            if ev & 1:
                key = (emitted, received | 1 << j)
            else:
                key = (emitted | 1 << j, received)
            fresh = key not in seen
            if fresh:
                seen.add(key)
            path.append(ev)
            if ev & 1:
                r = receivers[j]
                saved = obs[r]
                obs[r] |= outs[j]
                if fresh:
                    explore(emitted, received | 1 << j, out_union)
                obs[r] = saved
            else:
                s = senders[j]
                if fresh and outs[j] & out_union and result["unsafe_param"] < 0:
                    overlap = outs[j] & out_union
                    result["unsafe_param"] = (overlap & -overlap).bit_length() - 1
                    result["unsafe_path"] = tuple(path)
                    if mode == MODE_SAFETY:
                        result["stopped"] = True
                        path.pop()
                        return
                saved = obs[s]
                obs[s] |= ins[j] | outs[j]
                emit_step[j] = len(path)
                if fresh:
                    explore(emitted | 1 << j, received, out_union | outs[j])
                emit_step[j] = 0
                obs[s] = saved
            path.pop()
            if result["stopped"]:
                return

    explore(0, 0, 0)
    return (len(seen), maximal, len(maximal), result["unsafe_param"],
            result["unsafe_path"], result["incomplete"], result["stopped"])
