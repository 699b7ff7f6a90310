"""Deterministic gadget recognizing a conjunction of two parity conditions.

Intersecting two parity tree automata needs, along every branch, a
monitor for "minimum priority seen infinitely often is even in BOTH
coordinates".  That condition is a Muller condition over pairs of
priorities; its split tree (the alternating tree of maximal subsets
with flipped acceptance) has a special rectangular structure here: the
relevant subsets are exactly the upward-closed rectangles
{p >= x} x {r >= y}, accepting iff both x and y are even.

The transition system over the split tree is the classical
last-visited-branch construction: states are the leaves, a read colour
moves to the next branch below the deepest ancestor containing it, and
the emitted priority is that ancestor's depth.  Minimum priority
emitted infinitely often is then even iff the set of colours seen
infinitely often is accepting.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class _Node:
    x: int
    y: int
    depth: int
    parent: int  # node index, -1 for root
    children: list  # node indices
    leftmost_leaf: int = -1


class ParityConjunctionGadget:
    """Monitor for pairs (p, r) with p <= d1, r <= d2 (min-parity both even)."""

    def __init__(self, d1: int, d2: int):
        self.d1 = d1
        self.d2 = d2
        self.nodes: list[_Node] = []
        self._build(0, 0, 0, -1)
        self.leaves = [i for i, nd in enumerate(self.nodes) if not nd.children]
        self._leaf_pos = {leaf: k for k, leaf in enumerate(self.leaves)}
        for i in range(len(self.nodes) - 1, -1, -1):
            nd = self.nodes[i]
            if not nd.children:
                nd.leftmost_leaf = i
            else:
                nd.leftmost_leaf = self.nodes[nd.children[0]].leftmost_leaf
        # max emitted priority = max leaf depth
        self.max_priority = max(self.nodes[l].depth for l in self.leaves)

    def _build(self, x: int, y: int, depth: int, parent: int) -> int:
        idx = len(self.nodes)
        self.nodes.append(_Node(x, y, depth, parent, []))
        accepting = x % 2 == 0 and y % 2 == 0
        kids: list[tuple[int, int]] = []
        if accepting:
            if x + 1 <= self.d1:
                kids.append((x + 1, y))
            if y + 1 <= self.d2:
                kids.append((x, y + 1))
        else:
            nx, ny = x + (x & 1), y + (y & 1)
            if nx <= self.d1 and ny <= self.d2:
                kids.append((nx, ny))
        for cx, cy in kids:
            self.nodes[idx].children.append(self._build(cx, cy, depth + 1, idx))
        return idx

    @property
    def initial_state(self) -> int:
        """Index into self.leaves."""
        return 0

    @property
    def n_states(self) -> int:
        return len(self.leaves)

    def step(self, state: int, p: int, r: int) -> tuple[int, int]:
        """From leaf-state ``state`` reading colour (p, r): (next state, priority)."""
        leaf = self.leaves[state]
        # Deepest ancestor-or-self whose rectangle contains (p, r).
        v = leaf
        child = -1
        while v != -1:
            nd = self.nodes[v]
            if p >= nd.x and r >= nd.y:
                break
            child = v
            v = nd.parent
        if v == -1:  # root contains every colour in range
            raise ValueError(f"colour ({p},{r}) outside gadget bounds")
        nd = self.nodes[v]
        if v == leaf:
            return state, nd.depth
        pos = nd.children.index(child)
        nxt = nd.children[(pos + 1) % len(nd.children)]
        return self._leaf_pos[self.nodes[nxt].leftmost_leaf], nd.depth

    def run_min_inf(self, prefix: list[tuple[int, int]], cycle: list[tuple[int, int]]) -> int:
        """Minimum priority emitted infinitely often on prefix . cycle^omega."""
        state = self.initial_state
        for p, r in prefix:
            state, _ = self.step(state, p, r)
        seen: dict[tuple[int, int], int] = {}
        emitted: list[int] = []
        pos = 0
        while (state, pos) not in seen:
            seen[(state, pos)] = len(emitted)
            p, r = cycle[pos]
            state, e = self.step(state, p, r)
            emitted.append(e)
            pos = (pos + 1) % len(cycle)
        start = seen[(state, pos)]
        return min(emitted[start:])
