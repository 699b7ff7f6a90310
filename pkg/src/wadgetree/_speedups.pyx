# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Zielonka kernel.

Same algorithm, same traversal order and hence bit-identical answers
as ``wadgetree.games.solve_parity_game_python``.
"""

from cpython cimport array
import array


cdef tuple _attract(
    int player,
    list targets_l,
    int[:] owner,
    int[:] indptr,
    int[:] targets,
    int[:] pindptr,
    int[:] ptargets,
    signed char[:] in_sub,
    signed char[:] member,
    int[:] count,
    int[:] queue,
):
    """Attractor inside the current in_sub: (removed list, strategy dict)."""
    cdef int qh = 0, qt = 0
    cdef int x, y, j, c, kk
    strat = {}
    touched = []
    for x in targets_l:
        member[x] = 1
        queue[qt] = x
        qt += 1
    while qh < qt:
        y = queue[qh]
        qh += 1
        for j in range(pindptr[y], pindptr[y + 1]):
            x = ptargets[j]
            if not in_sub[x] or member[x]:
                continue
            if owner[x] == player:
                member[x] = 1
                strat[x] = y
                queue[qt] = x
                qt += 1
            else:
                if count[x] == 0:
                    c = 0
                    for kk in range(indptr[x], indptr[x + 1]):
                        if in_sub[targets[kk]]:
                            c += 1
                    count[x] = c
                    touched.append(x)
                count[x] -= 1
                if count[x] == 0:
                    member[x] = 1
                    queue[qt] = x
                    qt += 1
    removed = []
    for j in range(qt):
        x = queue[j]
        member[x] = 0
        removed.append(x)
    for x in touched:
        count[x] = 0
    return removed, strat


def solve(owner_list, priority_list, indptr_list, targets_list):
    """Solve a min-parity game in CSR form.

    Returns (winner, strategy) as array('i'); strategy is -1 where the
    vertex owner loses.
    """
    cdef int n = len(owner_list)
    cdef array.array owner_a = array.array('i', owner_list)
    cdef array.array prio_a = array.array('i', priority_list)
    cdef array.array indptr_a = array.array('i', indptr_list)
    cdef array.array targets_a = array.array('i', targets_list if targets_list else [0])
    cdef int[:] owner = owner_a
    cdef int[:] prio = prio_a
    cdef int[:] indptr = indptr_a
    cdef int[:] targets = targets_a

    cdef int m = len(targets_list)
    cdef array.array pin_a = array.array('i', bytes(4 * (n + 1)))
    cdef array.array ptg_a = array.array('i', bytes(4 * max(m, 1)))
    cdef int[:] pindptr = pin_a
    cdef int[:] ptargets = ptg_a
    cdef int v, w, k
    for v in range(n):
        for k in range(indptr[v], indptr[v + 1]):
            pindptr[targets[k] + 1] += 1
    for v in range(n):
        pindptr[v + 1] += pindptr[v]
    cdef array.array fill_a = array.array('i', bytes(4 * max(n, 1)))
    cdef int[:] fill = fill_a
    for v in range(n):
        for k in range(indptr[v], indptr[v + 1]):
            w = targets[k]
            ptargets[pindptr[w] + fill[w]] = v
            fill[w] += 1

    cdef array.array winner_a = array.array('i', bytes(4 * max(n, 1)))
    cdef array.array strat_a = array.array('i', bytes(4 * max(n, 1)))
    cdef int[:] winner = winner_a
    cdef int[:] strategy = strat_a
    for v in range(n):
        winner[v] = -1
        strategy[v] = -1

    cdef array.array insub_a = array.array('b', bytes(max(n, 1)))
    cdef signed char[:] in_sub = insub_a
    for v in range(n):
        in_sub[v] = 1

    cdef array.array member_a = array.array('b', bytes(max(n, 1)))
    cdef array.array count_a = array.array('i', bytes(4 * max(n, 1)))
    cdef array.array queue_a = array.array('i', bytes(4 * max(n, 1)))
    cdef signed char[:] member = member_a
    cdef int[:] count = count_a
    cdef int[:] queue = queue_a

    # Frames: [verts, phase, d, sigma, A, stratA, B]
    cdef list stack = [[list(range(n)), 0, 0, 0, None, None, None]]
    cdef int d, sigma, opp, any_opp, x, kk
    cdef list frame

    while stack:
        frame = <list> stack[len(stack) - 1]
        verts = frame[0]
        if frame[1] == 0:
            if not verts:
                stack.pop()
                continue
            d = prio[<int> verts[0]]
            for x in verts:
                if prio[x] < d:
                    d = prio[x]
            sigma = d & 1
            P = [x for x in verts if prio[x] == d]
            A, stratA = _attract(
                sigma, P, owner, indptr, targets, pindptr, ptargets,
                in_sub, member, count, queue,
            )
            frame[2] = d
            frame[3] = sigma
            frame[4] = A
            frame[5] = stratA
            frame[1] = 1
            for x in A:
                in_sub[x] = 0
            stack.append([[x for x in verts if in_sub[x]], 0, 0, 0, None, None, None])
        elif frame[1] == 1:
            d = frame[2]
            sigma = frame[3]
            opp = 1 - sigma
            A = frame[4]
            stratA = frame[5]
            any_opp = 0
            for x in frame[0]:
                if in_sub[x] and winner[x] == opp:
                    any_opp = 1
                    break
            if not any_opp:
                for x in A:
                    in_sub[x] = 1
                for x in frame[0]:
                    winner[x] = sigma
                for x, y in stratA.items():
                    strategy[x] = y
                for x in A:
                    if owner[x] == sigma and prio[x] == d:
                        for kk in range(indptr[x], indptr[x + 1]):
                            if in_sub[targets[kk]]:
                                strategy[x] = targets[kk]
                                break
                stack.pop()
            else:
                Wopp = [x for x in frame[0] if in_sub[x] and winner[x] == opp]
                for x in A:
                    in_sub[x] = 1
                B, stratB = _attract(
                    opp, Wopp, owner, indptr, targets, pindptr, ptargets,
                    in_sub, member, count, queue,
                )
                for x, y in stratB.items():
                    strategy[x] = y
                frame[6] = B
                frame[1] = 2
                for x in B:
                    in_sub[x] = 0
                stack.append(
                    [[x for x in frame[0] if in_sub[x]], 0, 0, 0, None, None, None]
                )
        else:
            B = frame[6]
            opp = 1 - <int> frame[3]
            for x in B:
                winner[x] = opp
                in_sub[x] = 1
            stack.pop()

    for v in range(n):
        if winner[v] != owner[v]:
            strategy[v] = -1
    return winner_a, strat_a
