"""Regular trees, prefixes and contexts.

A tree is a partial function from binary words to an alphabet whose
domain is prefix closed; nodes may have zero, one or two children.  A
*regular* tree has finitely many distinct subtrees and is presented
here as a finite rooted graph in which cycles are allowed.

The reserved label ``*`` marks a port.  A *prefix* is a finite acyclic
tree some of whose leaves are ports; a *context* is a prefix (or more
generally a regular multi-context) with exactly one port in its
unfolding.  Plugging trees into the ports of a prefix is graph
surgery: edges into a port node are redirected to the root of the
plugged tree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

PORT = "*"


class TreeFormatError(ValueError):
    """Raised when a tree document cannot be parsed."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class RegularTree:
    """A finite rooted graph presenting a (possibly infinite) tree.

    ``labels[i]`` is the symbol at node ``i``; ``lefts[i]``/``rights[i]``
    are child node indices or ``None``.  Every node is expected to be
    reachable from ``root``; use :meth:`trimmed` to enforce that.
    """

    labels: tuple[str, ...]
    lefts: tuple[Optional[int], ...]
    rights: tuple[Optional[int], ...]
    root: int = 0

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ValueError("a tree has at least one node")
        if not (len(self.lefts) == len(self.rights) == n):
            raise ValueError("label/child arrays disagree in length")
        for c in self.lefts + self.rights:
            if c is not None and not (0 <= c < n):
                raise ValueError(f"child index {c} out of range")
        if not 0 <= self.root < n:
            raise ValueError("root index out of range")

    # -- basic structure ------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    def children(self, i: int) -> tuple[Optional[int], Optional[int]]:
        return self.lefts[i], self.rights[i]

    def is_leaf(self, i: int) -> bool:
        return self.lefts[i] is None and self.rights[i] is None

    def is_port(self, i: int) -> bool:
        return self.labels[i] == PORT

    def ports(self) -> list[int]:
        return [i for i in range(self.size) if self.is_port(i)]

    def reachable(self) -> list[int]:
        seen = {self.root}
        stack = [self.root]
        while stack:
            i = stack.pop()
            for c in self.children(i):
                if c is not None and c not in seen:
                    seen.add(c)
                    stack.append(c)
        return sorted(seen)

    def trimmed(self) -> "RegularTree":
        """Drop nodes unreachable from the root and renumber by BFS."""
        order = [self.root]
        pos = {self.root: 0}
        k = 0
        while k < len(order):
            for c in self.children(order[k]):
                if c is not None and c not in pos:
                    pos[c] = len(order)
                    order.append(c)
            k += 1
        remap = lambda c: None if c is None else pos[c]
        return RegularTree(
            labels=tuple(self.labels[i] for i in order),
            lefts=tuple(remap(self.lefts[i]) for i in order),
            rights=tuple(remap(self.rights[i]) for i in order),
            root=0,
        )

    def is_acyclic(self) -> bool:
        state = [0] * self.size  # 0 unvisited, 1 on stack, 2 done
        stack = [(self.root, 0)]
        while stack:
            node, phase = stack.pop()
            if phase == 0:
                if state[node] == 2:
                    continue
                if state[node] == 1:
                    return False
                state[node] = 1
                stack.append((node, 1))
                for c in self.children(node):
                    if c is not None:
                        if state[c] == 1:
                            return False
                        if state[c] == 0:
                            stack.append((c, 0))
            else:
                state[node] = 2
        return True

    def is_prefix(self) -> bool:
        """Acyclic graph, every port a leaf: unfolds to a finite multi-context."""
        if not self.is_acyclic():
            return False
        return all(self.is_leaf(i) for i in self.reachable() if self.is_port(i))

    def port_multiplicity(self, node: int) -> Optional[int]:
        """Number of occurrences of ``node`` in the unfolding; None if infinite."""
        on_cycle = self._nodes_on_cycles()
        counts: dict[int, Optional[int]] = {}

        order = self._topo_or_none()
        if order is None:
            # General graph: a node reachable through any cycle occurs
            # infinitely often unless no path through a cycle reaches it.
            reach_from_cycle = set()
            stack = [c for c in on_cycle]
            seen = set(stack)
            while stack:
                i = stack.pop()
                reach_from_cycle.add(i)
                for c in self.children(i):
                    if c is not None and c not in seen:
                        seen.add(c)
                        stack.append(c)
            if node in reach_from_cycle:
                return None
            # Count paths in the acyclic part.
            return self._count_paths_acyclic(node)
        return self._count_paths_acyclic(node)

    def _topo_or_none(self) -> Optional[list[int]]:
        if not self.is_acyclic():
            return None
        return self.reachable()

    def _nodes_on_cycles(self) -> set[int]:
        comp = tarjan_scc(
            {i: [c for c in self.children(i) if c is not None] for i in self.reachable()}
        )
        out = set()
        for scc in comp:
            if len(scc) > 1:
                out.update(scc)
            else:
                (v,) = scc
                if v in self.children(v):
                    out.add(v)
        return out

    def _count_paths_acyclic(self, node: int) -> int:
        memo: dict[int, int] = {}

        def count(i: int) -> int:
            if i == node:
                return 1
            if i in memo:
                return memo[i]
            memo[i] = 0  # guards the (impossible here) cyclic case
            total = 0
            for c in self.children(i):
                if c is not None:
                    total += count(c)
            memo[i] = total
            return total

        return count(self.root)

    def is_context(self) -> bool:
        """Exactly one port in the unfolding (ports must be leaves)."""
        ports = [p for p in self.reachable() if self.is_port(p)]
        if len(ports) != 1 or not self.is_leaf(ports[0]):
            return False
        return self.port_multiplicity(ports[0]) == 1

    def is_finite_tree(self) -> bool:
        return self.is_acyclic()

    def depth(self) -> int:
        """Depth (edge count) of a finite tree; raises on cyclic graphs."""
        if not self.is_acyclic():
            raise ValueError("depth undefined for infinite trees")
        memo: dict[int, int] = {}

        def d(i: int) -> int:
            if i in memo:
                return memo[i]
            best = 0
            for c in self.children(i):
                if c is not None:
                    best = max(best, 1 + d(c))
            memo[i] = best
            return best

        return d(self.root)

    # -- unfolding helpers ----------------------------------------------

    def unfold_to_depth(self, depth: int):
        """Nested-tuple rendering of the unfolding, truncated below ``depth``.

        Nodes at the cut are rendered as the opaque marker ``"..."`` so
        two trees compare equal at depth d iff their unfoldings agree on
        all words of length < d.
        """
        memo: dict[tuple[int, int], object] = {}

        def go(i: int, d: int):
            if d == 0:
                return "..."
            key = (i, d)
            if key in memo:
                return memo[key]
            l, r = self.children(i)
            out = (
                self.labels[i],
                None if l is None else go(l, d - 1),
                None if r is None else go(r, d - 1),
            )
            memo[key] = out
            return out

        return go(self.root, depth)

    def node_at_word(self, word: str) -> Optional[int]:
        i = self.root
        for ch in word:
            c = self.lefts[i] if ch == "0" else self.rights[i]
            if c is None:
                return None
            i = c
        return i

    def label_at(self, word: str) -> Optional[str]:
        i = self.node_at_word(word)
        return None if i is None else self.labels[i]

    def symbols(self) -> frozenset[str]:
        return frozenset(self.labels[i] for i in self.reachable())


def subtree(t: RegularTree, node: int) -> RegularTree:
    """The tree t.w for the graph node presenting w (same graph, new root)."""
    if not 0 <= node < t.size:
        raise ValueError(f"node {node} not in tree")
    return RegularTree(t.labels, t.lefts, t.rights, node).trimmed()


def subtree_at_word(t: RegularTree, word: str) -> Optional[RegularTree]:
    n = t.node_at_word(word)
    return None if n is None else subtree(t, n)


def plug(prefix: RegularTree, assignment: Mapping[int, RegularTree]) -> RegularTree:
    """Insert a tree into every port of a prefix (the operation c[eta]).

    ``assignment`` must be total on the reachable ports.  Port nodes
    are removed; edges into them are redirected to the root of the
    assigned tree.
    """
    reach = set(prefix.reachable())
    ports = [p for p in reach if prefix.is_port(p)]
    missing = [p for p in ports if p not in assignment]
    if missing:
        raise ValueError(f"assignment misses ports {missing}")
    if prefix.is_port(prefix.root):
        return assignment[prefix.root].trimmed()

    labels: list[str] = []
    lefts: list[Optional[int]] = []
    rights: list[Optional[int]] = []
    base: dict[int, int] = {}
    for i in sorted(reach):
        if not prefix.is_port(i):
            base[i] = len(labels)
            labels.append(prefix.labels[i])
            lefts.append(prefix.lefts[i])
            rights.append(prefix.rights[i])

    plug_root: dict[int, int] = {}
    for p in ports:
        sub = assignment[p].trimmed()
        off = len(labels)
        plug_root[p] = off + sub.root
        for j in range(sub.size):
            labels.append(sub.labels[j])
            lefts.append(None if sub.lefts[j] is None else off + sub.lefts[j])
            rights.append(None if sub.rights[j] is None else off + sub.rights[j])

    def remap(c: Optional[int]) -> Optional[int]:
        if c is None:
            return None
        return plug_root[c] if c in plug_root else base[c]

    n_prefix = len(base)
    lefts = [remap(c) if k < n_prefix else c for k, c in enumerate(lefts)]
    rights = [remap(c) if k < n_prefix else c for k, c in enumerate(rights)]
    return RegularTree(tuple(labels), tuple(lefts), tuple(rights), base[prefix.root]).trimmed()


def plug_single(context: RegularTree, t: RegularTree) -> RegularTree:
    """Plug one tree into the unique port of a context."""
    ports = [p for p in context.reachable() if context.is_port(p)]
    if len(ports) != 1:
        raise ValueError("plug_single expects exactly one port")
    return plug(context, {ports[0]: t})


def compose_contexts(outer: RegularTree, inner: RegularTree) -> RegularTree:
    """The context outer[inner]: inner is inserted at outer's port."""
    return plug_single(outer, inner)


def level_prefix(t: RegularTree, depth: int) -> RegularTree:
    """Truncate ``t`` below ``depth``, with a port at every cut point.

    ``level_prefix(t, 0)`` is the single-port prefix.  Nodes shallower
    than the cut keep their labels and shape.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth == 0:
        return RegularTree((PORT,), (None,), (None,), 0)

    labels: list[str] = []
    lefts: list[Optional[int]] = []
    rights: list[Optional[int]] = []
    index: dict[tuple[int, int], int] = {}

    def build(node: int, d: int) -> int:
        key = (node, d)
        if key in index:
            return index[key]
        idx = len(labels)
        index[key] = idx
        if d == depth:
            labels.append(PORT)
            lefts.append(None)
            rights.append(None)
            return idx
        labels.append(t.labels[node])
        lefts.append(None)
        rights.append(None)
        l, r = t.children(node)
        if l is not None:
            lefts[idx] = build(l, d + 1)
        if r is not None:
            rights[idx] = build(r, d + 1)
        return idx

    # Iterative wrapper to avoid deep recursion on tall prefixes.
    import sys

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * depth + 100))
    try:
        root = build(t.root, 0)
    finally:
        sys.setrecursionlimit(old)
    return RegularTree(tuple(labels), tuple(lefts), tuple(rights), root)


def omega_power_tree(context: RegularTree) -> RegularTree:
    """The tree v^inf obtained by identifying the port with the root.

    Undefined for the identity context (port at the root): iterating it
    produces no tree.
    """
    c = context.trimmed()
    ports = [p for p in range(c.size) if c.is_port(p)]
    if len(ports) != 1:
        raise ValueError("omega power needs exactly one port")
    (p,) = ports
    if p == c.root:
        raise ValueError("omega power of the identity context is undefined")
    redirect = lambda x: c.root if x == p else x
    return RegularTree(
        labels=c.labels,
        lefts=tuple(None if x is None else redirect(x) for x in c.lefts),
        rights=tuple(None if x is None else redirect(x) for x in c.rights),
        root=c.root,
    ).trimmed()


def make_leaf(label: str) -> RegularTree:
    return RegularTree((label,), (None,), (None,), 0)


def make_node(
    label: str, left: Optional[RegularTree] = None, right: Optional[RegularTree] = None
) -> RegularTree:
    """Join subtrees under a fresh root (plain tree-shaped construction)."""
    labels = [label]
    lefts: list[Optional[int]] = [None]
    rights: list[Optional[int]] = [None]
    if left is not None:
        off = len(labels)
        lt = left.trimmed()
        labels.extend(lt.labels)
        lefts.extend(None if c is None else off + c for c in lt.lefts)
        rights.extend(None if c is None else off + c for c in lt.rights)
        lefts[0] = off + lt.root
    if right is not None:
        off = len(labels)
        rt = right.trimmed()
        labels.extend(rt.labels)
        lefts.extend(None if c is None else off + c for c in rt.lefts)
        rights.extend(None if c is None else off + c for c in rt.rights)
        rights[0] = off + rt.root
    return RegularTree(tuple(labels), tuple(lefts), tuple(rights), 0)


def from_spec(spec) -> RegularTree:
    """Build a tree from nested tuples (label, left, right) / "label" leaves.

    A bare string is a leaf; ``None`` children are absent.  The special
    string ``"@loop"`` as a child refers back to the root, which is the
    only cycle this convenience constructor supports.
    """
    labels: list[str] = []
    lefts: list[Optional[int]] = []
    rights: list[Optional[int]] = []

    def build(node) -> int:
        idx = len(labels)
        if isinstance(node, str):
            labels.append(node)
            lefts.append(None)
            rights.append(None)
            return idx
        label, l, r = node
        labels.append(label)
        lefts.append(None)
        rights.append(None)
        if l is not None:
            lefts[idx] = 0 if l == "@loop" else build(l)
        if r is not None:
            rights[idx] = 0 if r == "@loop" else build(r)
        return idx

    build(spec)
    return RegularTree(tuple(labels), tuple(lefts), tuple(rights), 0)


# -- serialization -------------------------------------------------------


def format_tree(t: RegularTree) -> str:
    """Line-oriented tree document; canonical BFS numbering."""
    c = t.trimmed()
    out = ["root 0"]
    for i in range(c.size):
        l = "-" if c.lefts[i] is None else str(c.lefts[i])
        r = "-" if c.rights[i] is None else str(c.rights[i])
        out.append(f"node {i} label {c.labels[i]} left {l} right {r}")
    return "\n".join(out) + "\n"


def parse_tree(text: str) -> RegularTree:
    root: Optional[int] = None
    nodes: dict[int, tuple[str, Optional[int], Optional[int]]] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "root":
            if len(parts) != 2:
                raise TreeFormatError("root line needs one node id", ln)
            try:
                root = int(parts[1])
            except ValueError:
                raise TreeFormatError(f"bad root id {parts[1]!r}", ln)
        elif parts[0] == "node":
            if len(parts) != 8 or parts[2] != "label" or parts[4] != "left" or parts[6] != "right":
                raise TreeFormatError(
                    "expected 'node N label A left L right R'", ln
                )
            try:
                nid = int(parts[1])
            except ValueError:
                raise TreeFormatError(f"bad node id {parts[1]!r}", ln)
            if nid in nodes:
                raise TreeFormatError(f"duplicate node {nid}", ln)

            def child(tok: str) -> Optional[int]:
                if tok == "-":
                    return None
                try:
                    return int(tok)
                except ValueError:
                    raise TreeFormatError(f"bad child id {tok!r}", ln)

            nodes[nid] = (parts[3], child(parts[5]), child(parts[7]))
        else:
            raise TreeFormatError(f"unknown directive {parts[0]!r}", ln)
    if root is None:
        raise TreeFormatError("missing 'root' line")
    if not nodes:
        raise TreeFormatError("tree has no nodes")
    ids = sorted(nodes)
    pos = {nid: k for k, nid in enumerate(ids)}
    if root not in pos:
        raise TreeFormatError(f"root {root} is not a declared node")
    for nid, (_, l, r) in nodes.items():
        for c in (l, r):
            if c is not None and c not in pos:
                raise TreeFormatError(f"node {nid} references undeclared node {c}")
    remap = lambda c: None if c is None else pos[c]
    return RegularTree(
        labels=tuple(nodes[i][0] for i in ids),
        lefts=tuple(remap(nodes[i][1]) for i in ids),
        rights=tuple(remap(nodes[i][2]) for i in ids),
        root=pos[root],
    ).trimmed()


def extends_prefix(t: RegularTree, p: RegularTree) -> bool:
    """Does ``t`` extend the prefix ``p`` (fillings only at ports)?

    Non-port nodes of ``p`` must occur in ``t`` with identical label and
    child shape; below ports ``t`` is unconstrained.
    """
    if not p.is_prefix():
        raise ValueError("second argument must be a finite prefix")

    def walk(pi: int, ti: int) -> bool:
        if p.is_port(pi):
            return True
        if p.labels[pi] != t.labels[ti]:
            return False
        pl, pr = p.children(pi)
        tl, tr = t.children(ti)
        if (pl is None) != (tl is None) or (pr is None) != (tr is None):
            return False
        if pl is not None and not walk(pl, tl):
            return False
        if pr is not None and not walk(pr, tr):
            return False
        return True

    return walk(p.root, t.root)


# -- equality up to unfolding ---------------------------------------------


def unfoldings_equal(t1: RegularTree, t2: RegularTree) -> bool:
    """Exact equality of unfoldings (bisimilarity of the presentations)."""
    seen: set[tuple[int, int]] = set()
    stack = [(t1.root, t2.root)]
    while stack:
        a, b = stack.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        if t1.labels[a] != t2.labels[b]:
            return False
        for ca, cb in zip(t1.children(a), t2.children(b)):
            if (ca is None) != (cb is None):
                return False
            if ca is not None:
                stack.append((ca, cb))
    return True


# -- random generation ----------------------------------------------------


def random_regular_tree(
    rng: random.Random, alphabet: Sequence[str], max_nodes: int = 4
) -> RegularTree:
    """A random regular tree graph with up to ``max_nodes`` nodes."""
    n = rng.randint(1, max_nodes)
    labels = tuple(rng.choice(list(alphabet)) for _ in range(n))
    lefts = []
    rights = []
    for _ in range(n):
        shape = rng.randrange(4)  # leaf, left, right, binary
        lefts.append(rng.randrange(n) if shape in (1, 3) else None)
        rights.append(rng.randrange(n) if shape in (2, 3) else None)
    return RegularTree(labels, tuple(lefts), tuple(rights), 0).trimmed()


def random_finite_tree(
    rng: random.Random, alphabet: Sequence[str], max_depth: int = 3
) -> RegularTree:
    def build(d: int) -> RegularTree:
        label = rng.choice(list(alphabet))
        if d == 0:
            return make_leaf(label)
        shape = rng.randrange(4)
        if shape == 0:
            return make_leaf(label)
        if shape == 1:
            return make_node(label, left=build(d - 1))
        if shape == 2:
            return make_node(label, right=build(d - 1))
        return make_node(label, left=build(d - 1), right=build(d - 1))

    return build(max_depth)


def random_context(
    rng: random.Random, alphabet: Sequence[str], max_depth: int = 3
) -> RegularTree:
    """A random finite context: one port among the leaves."""
    t = random_finite_tree(rng, alphabet, max_depth)
    # Re-label one random leaf as the port.
    leaves = [i for i in range(t.size) if t.is_leaf(i)]
    port = rng.choice(leaves)
    labels = list(t.labels)
    labels[port] = PORT
    return RegularTree(tuple(labels), t.lefts, t.rights, t.root)


def random_prefix(
    rng: random.Random, alphabet: Sequence[str], max_depth: int = 3
) -> RegularTree:
    """A random finite prefix: every leaf independently may become a port."""
    t = random_finite_tree(rng, alphabet, max_depth)
    labels = list(t.labels)
    for i in range(t.size):
        if t.is_leaf(i) and rng.random() < 0.5:
            labels[i] = PORT
    return RegularTree(tuple(labels), t.lefts, t.rights, t.root)


# -- small graph utility ----------------------------------------------------


def tarjan_scc(adj: Mapping[int, Iterable[int]]) -> list[list[int]]:
    """Strongly connected components, iterative Tarjan, reverse topological order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = [0]

    for start in sorted(adj):
        if start in index:
            continue
        work = [(start, iter(sorted(adj[start])))]
        index[start] = low[start] = counter[0]
        counter[0] += 1
        stack.append(start)
        on_stack.add(start)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in adj:
                    continue
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs
