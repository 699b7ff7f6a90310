"""Finite parity games and their solver.

Games are min-parity: a play is won by Even iff the minimum priority
occurring infinitely often along it is even.  Arenas are sink-free
(every vertex has at least one successor).  The solver is Zielonka's
recursive algorithm, written iteratively so arena size is not limited
by the interpreter stack, and it returns memoryless strategies for
both players.

A compiled kernel (``wadgetree._speedups``) implementing the same
algorithm is used automatically when available; set the environment
variable ``WADGETREE_PURE=1`` to force the pure-Python path.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Optional

EVEN = 0
ODD = 1


@dataclass
class GameArena:
    """owner[v] in {0,1}; priority[v] >= 0; succ[v] a non-empty list."""

    owner: list[int]
    priority: list[int]
    succ: list[list[int]]
    labels: list = field(default_factory=list)  # optional debug payloads

    def __post_init__(self):
        n = len(self.owner)
        if not (len(self.priority) == len(self.succ) == n):
            raise ValueError("arena arrays disagree in length")
        for v, out in enumerate(self.succ):
            if not out:
                raise ValueError(f"vertex {v} has no successors")
            for w in out:
                if not 0 <= w < n:
                    raise ValueError(f"edge {v}->{w} out of range")
        if any(p < 0 for p in self.priority):
            raise ValueError("priorities must be non-negative")

    @property
    def size(self) -> int:
        return len(self.owner)

    def predecessors(self) -> list[list[int]]:
        pred: list[list[int]] = [[] for _ in range(self.size)]
        for v, out in enumerate(self.succ):
            for w in out:
                pred[w].append(v)
        return pred


@dataclass
class ParityGameSolution:
    winner: list[int]  # per vertex: EVEN or ODD
    strategy: list[Optional[int]]  # chosen successor for the owner, on winning vertices

    def region(self, player: int) -> set[int]:
        return {v for v, w in enumerate(self.winner) if w == player}


def solve_parity_game_python(arena: GameArena) -> ParityGameSolution:
    """Iterative Zielonka with strategy extraction (reference implementation)."""
    n = arena.size
    owner = arena.owner
    priority = arena.priority
    succ = arena.succ
    pred = arena.predecessors()

    winner = [-1] * n
    strategy: list[Optional[int]] = [None] * n
    in_sub = bytearray([1] * n)

    def attractor(player: int, targets: list[int], sub: bytearray):
        """Attractor of ``targets`` for ``player`` inside subgame ``sub``.

        Returns (member bytearray, strategy dict for player vertices
        attracted strictly outside the target set).
        """
        member = bytearray(n)
        strat: dict[int, int] = {}
        queue = list(targets)
        for t in targets:
            member[t] = 1
        count = [0] * n
        qi = 0
        while qi < len(queue):
            w = queue[qi]
            qi += 1
            for v in pred[w]:
                if not sub[v] or member[v]:
                    continue
                if owner[v] == player:
                    member[v] = 1
                    strat[v] = w
                    queue.append(v)
                else:
                    if count[v] == 0:
                        count[v] = sum(1 for x in succ[v] if sub[x])
                    count[v] -= 1
                    if count[v] == 0:
                        member[v] = 1
                        queue.append(v)
        return member, strat

    # Explicit-stack recursion over subgames.  Frames: (sub, phase, locals)
    def solve(sub: bytearray):
        stack = [[sub, 0, None, None, None, None]]
        results: list[tuple[bytearray, bytearray]] = []
        while stack:
            frame = stack[-1]
            S, phase = frame[0], frame[1]
            if phase == 0:
                verts = [v for v in range(n) if S[v]]
                if not verts:
                    results.append((bytearray(n), bytearray(n)))
                    stack.pop()
                    continue
                d = min(priority[v] for v in verts)
                sigma = d & 1
                P = [v for v in verts if priority[v] == d]
                A, stratA = attractor(sigma, P, S)
                frame[2] = (verts, d, sigma, P, A, stratA)
                frame[1] = 1
                S1 = bytearray(S)
                for v in range(n):
                    if A[v]:
                        S1[v] = 0
                stack.append([S1, 0, None, None, None, None])
            elif phase == 1:
                W0, W1 = results.pop()
                verts, d, sigma, P, A, stratA = frame[2]
                Wopp = W1 if sigma == EVEN else W0
                if not any(Wopp):
                    # sigma wins the whole subgame S.
                    win = bytearray(frame[0])
                    for v in range(n):
                        if not frame[0][v]:
                            continue
                        if owner[v] == sigma:
                            if v in stratA:
                                strategy[v] = stratA[v]
                            elif priority[v] == d and A[v]:
                                # stay inside S; any S-successor is winning
                                strategy[v] = next(x for x in succ[v] if frame[0][x])
                        winner[v] = sigma
                    me = (win, bytearray(n)) if sigma == EVEN else (bytearray(n), win)
                    results.append(me)
                    stack.pop()
                else:
                    opp = 1 - sigma
                    B, stratB = attractor(opp, [v for v in range(n) if Wopp[v]], frame[0])
                    for v, w in stratB.items():
                        strategy[v] = w
                    frame[3] = B
                    frame[1] = 2
                    S2 = bytearray(frame[0])
                    for v in range(n):
                        if B[v]:
                            S2[v] = 0
                    stack.append([S2, 0, None, None, None, None])
            else:
                W0, W1 = results.pop()
                verts, d, sigma, P, A, stratA = frame[2]
                B = frame[3]
                opp = 1 - sigma
                for v in range(n):
                    if B[v]:
                        if opp == EVEN:
                            W0[v] = 1
                        else:
                            W1[v] = 1
                        winner[v] = opp
                for v in range(n):
                    if (W0[v] if sigma == EVEN else W1[v]) and frame[0][v]:
                        winner[v] = sigma
                results.append((W0, W1))
                stack.pop()
        return results[0]

    solve(in_sub)
    for v in range(n):
        if winner[v] != owner[v]:
            strategy[v] = None
    return ParityGameSolution(winner=winner, strategy=strategy)


def _load_kernel():
    if os.environ.get("WADGETREE_PURE"):
        return None
    try:
        from wadgetree import _speedups  # type: ignore

        return _speedups
    except ImportError:
        return None


_KERNEL = _load_kernel()
KERNEL_AVAILABLE = _KERNEL is not None


def solve_parity_game(arena: GameArena) -> ParityGameSolution:
    """Winning regions plus memoryless strategies for both players."""
    if _KERNEL is not None:
        flat_succ = []
        indptr = [0]
        for out in arena.succ:
            flat_succ.extend(out)
            indptr.append(len(flat_succ))
        winner, strat = _KERNEL.solve(
            arena.owner, arena.priority, indptr, flat_succ
        )
        strategy = [None if s < 0 else s for s in strat]
        return ParityGameSolution(winner=list(winner), strategy=strategy)
    return solve_parity_game_python(arena)


# -- brute force oracle ------------------------------------------------------


def brute_force_solve(arena: GameArena) -> list[int]:
    """Winner per vertex by enumerating all memoryless strategy pairs.

    Exponential; only for tiny arenas in tests.
    """
    n = arena.size
    even_vs = [v for v in range(n) if arena.owner[v] == EVEN]
    odd_vs = [v for v in range(n) if arena.owner[v] == ODD]

    def outcome(choice: dict[int, int], start: int) -> int:
        seen = {}
        path = []
        v = start
        while v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = choice[v]
        cyc = path[seen[v] :]
        m = min(arena.priority[x] for x in cyc)
        return EVEN if m % 2 == 0 else ODD

    winners = []
    even_strats = list(itertools.product(*(arena.succ[v] for v in even_vs)))
    odd_strats = list(itertools.product(*(arena.succ[v] for v in odd_vs)))
    for start in range(n):
        even_wins = False
        for es in even_strats:
            all_good = True
            for os_ in odd_strats:
                choice = dict(zip(even_vs, es))
                choice.update(zip(odd_vs, os_))
                if outcome(choice, start) != EVEN:
                    all_good = False
                    break
            if all_good:
                even_wins = True
                break
        winners.append(EVEN if even_wins else ODD)
    return winners


def check_strategy(arena: GameArena, sol: ParityGameSolution, player: int) -> bool:
    """Verify the returned strategy really wins on the claimed region.

    Fixing the player's moves, no play starting in the region may leave
    it or reach a cycle whose minimum priority favours the opponent.
    """
    region = sol.region(player)
    adj: dict[int, list[int]] = {}
    for v in region:
        if arena.owner[v] == player:
            s = sol.strategy[v]
            if s is None or s not in region:
                return False
            adj[v] = [s]
        else:
            if any(w not in region for w in arena.succ[v]):
                return False
            adj[v] = list(arena.succ[v])

    from wadgetree.trees import tarjan_scc

    bad_parity = 1 - player  # parities the opponent likes
    # A cycle with minimum priority p is losing for `player` iff p%2 != player.
    # Check per candidate minimum: within vertices of priority >= p, any SCC
    # containing a priority-p vertex yields such a cycle.
    prios = sorted({arena.priority[v] for v in region})
    for p in prios:
        if p % 2 == player:
            continue
        sub = {v: [w for w in adj[v] if arena.priority[w] >= p] for v in adj if arena.priority[v] >= p}
        comps = tarjan_scc(sub)
        for comp in comps:
            has_p = any(arena.priority[v] == p for v in comp)
            if not has_p:
                continue
            if len(comp) > 1:
                return False
            (v,) = comp
            if v in sub[v]:
                return False
    return True
