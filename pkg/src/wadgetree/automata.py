"""Nondeterministic parity tree automata over partial binary trees.

Transitions come in four shapes, matching the four node shapes of
partial trees: leaf, left-only, right-only and binary.  A run assigns
states top-down; it must supply a matching transition at every node,
every leaf must be matched by a leaf transition, and on every infinite
branch the minimum priority occurring infinitely often must be even.

Membership and emptiness are decided through parity games; products
use a deterministic priority gadget along branches when both factors
carry non-trivial parity conditions.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from wadgetree.games import EVEN, ODD, GameArena, solve_parity_game
from wadgetree.parity_gadget import ParityConjunctionGadget
from wadgetree.trees import PORT, RegularTree, random_regular_tree


class AutomatonFormatError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        loc = f"line {line}" + (f", col {col}" if col else "") if line else ""
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.col = col


class AlphabetMismatch(ValueError):
    pass


class ParityTreeAutomaton:
    """States are strings; the alphabet is a set of symbol strings."""

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        priorities: dict[str, int],
        init: Iterable[str],
        leaf_trans: Iterable[tuple[str, str]] = (),
        left_trans: Iterable[tuple[str, str, str]] = (),
        right_trans: Iterable[tuple[str, str, str]] = (),
        binary_trans: Iterable[tuple[str, str, str, str]] = (),
    ):
        self.states: tuple[str, ...] = tuple(sorted(set(states)))
        self.alphabet: tuple[str, ...] = tuple(sorted(set(alphabet)))
        self.priorities: dict[str, int] = dict(priorities)
        self.init: frozenset[str] = frozenset(init)
        self.leaf_trans: frozenset = frozenset(leaf_trans)
        self.left_trans: frozenset = frozenset(left_trans)
        self.right_trans: frozenset = frozenset(right_trans)
        self.binary_trans: frozenset = frozenset(binary_trans)
        self._cache: dict = {}
        self.validate()

    # -- consistency -----------------------------------------------------

    def validate(self):
        if PORT in self.alphabet:
            raise ValueError("the port marker cannot be an alphabet symbol")
        qs = set(self.states)
        for q in qs:
            if q not in self.priorities:
                raise ValueError(f"state {q!r} has no priority")
            if self.priorities[q] < 0:
                raise ValueError("priorities must be non-negative")
        extra = set(self.priorities) - qs
        if extra:
            raise ValueError(f"priorities for undeclared states {sorted(extra)}")
        if not self.init <= qs:
            raise ValueError("initial states must be declared states")
        syms = set(self.alphabet)
        for (q, a) in self.leaf_trans:
            if q not in qs or a not in syms:
                raise ValueError(f"bad leaf transition ({q},{a})")
        for (q, a, q1) in self.left_trans | self.right_trans:
            if q not in qs or a not in syms or q1 not in qs:
                raise ValueError(f"bad unary transition ({q},{a},{q1})")
        for (q, a, q1, q2) in self.binary_trans:
            if q not in qs or a not in syms or q1 not in qs or q2 not in qs:
                raise ValueError(f"bad binary transition ({q},{a},{q1},{q2})")

    def __eq__(self, other):
        if not isinstance(other, ParityTreeAutomaton):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.priorities == other.priorities
            and self.init == other.init
            and self.leaf_trans == other.leaf_trans
            and self.left_trans == other.left_trans
            and self.right_trans == other.right_trans
            and self.binary_trans == other.binary_trans
        )

    def __hash__(self):
        return hash((self.states, self.alphabet, self.init, self.leaf_trans,
                     self.left_trans, self.right_trans, self.binary_trans,
                     tuple(sorted(self.priorities.items()))))

    def __repr__(self):
        return (
            f"ParityTreeAutomaton({len(self.states)} states, "
            f"alphabet={{{','.join(self.alphabet)}}}, |init|={len(self.init)})"
        )

    @property
    def n_states(self) -> int:
        return len(self.states)

    def max_priority(self) -> int:
        return max(self.priorities.values(), default=0)

    def all_priorities_even(self) -> bool:
        return all(p % 2 == 0 for p in self.priorities.values())

    # -- indexes ----------------------------------------------------------

    def _index(self):
        if "idx" in self._cache:
            return self._cache["idx"]
        qi = {q: i for i, q in enumerate(self.states)}
        leaf: dict[tuple[int, str], bool] = {}
        left: dict[tuple[int, str], list[int]] = {}
        right: dict[tuple[int, str], list[int]] = {}
        binary: dict[tuple[int, str], list[tuple[int, int]]] = {}
        for (q, a) in sorted(self.leaf_trans):
            leaf[(qi[q], a)] = True
        for (q, a, q1) in sorted(self.left_trans):
            left.setdefault((qi[q], a), []).append(qi[q1])
        for (q, a, q1) in sorted(self.right_trans):
            right.setdefault((qi[q], a), []).append(qi[q1])
        for (q, a, q1, q2) in sorted(self.binary_trans):
            binary.setdefault((qi[q], a), []).append((qi[q1], qi[q2]))
        prio = [self.priorities[q] for q in self.states]
        out = (qi, prio, leaf, left, right, binary)
        self._cache["idx"] = out
        return out

    # -- membership --------------------------------------------------------

    def _check_tree_alphabet(self, t: RegularTree):
        syms = t.symbols()
        if PORT in syms:
            raise ValueError("membership needs a tree without ports")
        bad = syms - set(self.alphabet)
        if bad:
            raise AlphabetMismatch(f"tree uses symbols {sorted(bad)} not in alphabet")

    def acc_sets(self, t: RegularTree) -> list[frozenset[str]]:
        """Per graph node of ``t``: the states from which t.node is accepted."""
        self._check_tree_alphabet(t)
        t = t.trimmed()
        key = ("acc", t.labels, t.lefts, t.rights, t.root)
        if key in self._cache:
            return self._cache[key]
        qi, prio, leaf, left, right, binary = self._index()
        nq = len(self.states)
        nv = t.size * nq
        owner = [EVEN] * nv
        priority = [0] * nv
        succ: list[list[int]] = [[] for _ in range(nv)]
        win_e = None
        win_o = None

        def new_vertex(own: int, pr: int) -> int:
            owner.append(own)
            priority.append(pr)
            succ.append([])
            return len(owner) - 1

        win_e = new_vertex(EVEN, 0)
        succ[win_e] = [win_e]
        win_o = new_vertex(EVEN, 1)
        succ[win_o] = [win_o]

        for ni in range(t.size):
            a = t.labels[ni]
            l, r = t.children(ni)
            for q in range(nq):
                v = ni * nq + q
                priority[v] = prio[q]
                opts: list[int] = []
                if l is None and r is None:
                    if leaf.get((q, a)):
                        opts.append(win_e)
                elif l is not None and r is None:
                    for q1 in left.get((q, a), ()):
                        opts.append(l * nq + q1)
                elif r is not None and l is None:
                    for q1 in right.get((q, a), ()):
                        opts.append(r * nq + q1)
                else:
                    for (q1, q2) in binary.get((q, a), ()):
                        w = new_vertex(ODD, prio[q])
                        succ[w] = [l * nq + q1, r * nq + q2]
                        opts.append(w)
                succ[v] = opts if opts else [win_o]

        sol = solve_parity_game(GameArena(owner, priority, succ))
        result = [
            frozenset(
                self.states[q] for q in range(nq) if sol.winner[ni * nq + q] == EVEN
            )
            for ni in range(t.size)
        ]
        self._cache[key] = result
        return result

    def accepts_from(self, t: RegularTree) -> frozenset[str]:
        return self.acc_sets(t.trimmed())[0]

    def membership(self, t: RegularTree) -> bool:
        """Does the unfolding of ``t`` belong to the language?"""
        return bool(self.accepts_from(t.trimmed()) & self.init)

    # -- emptiness ----------------------------------------------------------

    def _emptiness_solution(self):
        if "empt" in self._cache:
            return self._cache["empt"]
        qi, prio, leaf, left, right, binary = self._index()
        nq = len(self.states)
        owner = [EVEN] * nq
        priority = list(prio)
        succ: list[list[int]] = [[] for _ in range(nq)]
        tags: list[list[tuple]] = [[] for _ in range(nq)]

        def new_vertex(own: int, pr: int) -> int:
            owner.append(own)
            priority.append(pr)
            succ.append([])
            tags.append([])
            return len(owner) - 1

        win_e = new_vertex(EVEN, 0)
        succ[win_e] = [win_e]
        win_o = new_vertex(EVEN, 1)
        succ[win_o] = [win_o]

        opts_per_state: list[list[int]] = [[] for _ in range(nq)]
        for q in range(nq):
            opts: list[int] = []
            topt: list[tuple] = []
            for a in self.alphabet:
                if leaf.get((q, a)):
                    opts.append(win_e)
                    topt.append(("leaf", a))
                for q1 in left.get((q, a), ()):
                    opts.append(q1)
                    topt.append(("left", a, q1))
                for q1 in right.get((q, a), ()):
                    opts.append(q1)
                    topt.append(("right", a, q1))
                for (q1, q2) in binary.get((q, a), ()):
                    w = new_vertex(ODD, prio[q])
                    succ[w] = [q1, q2]
                    opts.append(w)
                    topt.append(("bin", a, q1, q2))
            succ[q] = opts if opts else [win_o]
            tags[q] = topt
            opts_per_state[q] = opts

        sol = solve_parity_game(GameArena(owner, priority, succ))
        out = (sol, tags, opts_per_state, nq)
        self._cache["empt"] = out
        return out

    def productive_states(self) -> frozenset[str]:
        """States accepting at least one tree."""
        if not self.states:
            return frozenset()
        sol, _, _, nq = self._emptiness_solution()
        return frozenset(self.states[q] for q in range(nq) if sol.winner[q] == EVEN)

    def emptiness(self) -> Optional[RegularTree]:
        """None when the language is empty, else a regular witness tree."""
        if not self.states or not self.init:
            return None
        sol, tags, opts_per_state, nq = self._emptiness_solution()
        qi = {q: i for i, q in enumerate(self.states)}
        starts = sorted(q for q in self.init if sol.winner[qi[q]] == EVEN)
        if not starts:
            return None
        start = qi[starts[0]]

        labels: dict[int, str] = {}
        lefts: dict[int, Optional[int]] = {}
        rights: dict[int, Optional[int]] = {}
        stack = [start]
        while stack:
            q = stack.pop()
            if q in labels:
                continue
            choice = sol.strategy[q]
            assert choice is not None, "winning state without strategy"
            k = opts_per_state[q].index(choice)
            tag = tags[q][k]
            if tag[0] == "leaf":
                labels[q], lefts[q], rights[q] = tag[1], None, None
            elif tag[0] == "left":
                labels[q], lefts[q], rights[q] = tag[1], tag[2], None
                stack.append(tag[2])
            elif tag[0] == "right":
                labels[q], lefts[q], rights[q] = tag[1], None, tag[2]
                stack.append(tag[2])
            else:
                labels[q], lefts[q], rights[q] = tag[1], tag[2], tag[3]
                stack.append(tag[2])
                stack.append(tag[3])

        ids = sorted(labels)
        pos = {q: k for k, q in enumerate(ids)}
        remap = lambda c: None if c is None else pos[c]
        return RegularTree(
            labels=tuple(labels[q] for q in ids),
            lefts=tuple(remap(lefts[q]) for q in ids),
            rights=tuple(remap(rights[q]) for q in ids),
            root=pos[start],
        ).trimmed()

    def is_empty(self) -> bool:
        return self.emptiness() is None

    # -- structural operations ----------------------------------------------

    def relabel(self, prefix: str) -> "ParityTreeAutomaton":
        f = lambda q: f"{prefix}{q}"
        return ParityTreeAutomaton(
            states=[f(q) for q in self.states],
            alphabet=self.alphabet,
            priorities={f(q): p for q, p in self.priorities.items()},
            init=[f(q) for q in self.init],
            leaf_trans=[(f(q), a) for (q, a) in self.leaf_trans],
            left_trans=[(f(q), a, f(q1)) for (q, a, q1) in self.left_trans],
            right_trans=[(f(q), a, f(q1)) for (q, a, q1) in self.right_trans],
            binary_trans=[
                (f(q), a, f(q1), f(q2)) for (q, a, q1, q2) in self.binary_trans
            ],
        )

    def with_alphabet(self, symbols: Iterable[str]) -> "ParityTreeAutomaton":
        """Declare extra symbols (no transitions on them are added)."""
        return ParityTreeAutomaton(
            states=self.states,
            alphabet=set(self.alphabet) | set(symbols),
            priorities=self.priorities,
            init=self.init,
            leaf_trans=self.leaf_trans,
            left_trans=self.left_trans,
            right_trans=self.right_trans,
            binary_trans=self.binary_trans,
        )

    def restricted_to(self, keep: Iterable[str]) -> "ParityTreeAutomaton":
        ks = set(keep)
        return ParityTreeAutomaton(
            states=[q for q in self.states if q in ks],
            alphabet=self.alphabet,
            priorities={q: p for q, p in self.priorities.items() if q in ks},
            init=[q for q in self.init if q in ks],
            leaf_trans=[(q, a) for (q, a) in self.leaf_trans if q in ks],
            left_trans=[
                (q, a, q1) for (q, a, q1) in self.left_trans if q in ks and q1 in ks
            ],
            right_trans=[
                (q, a, q1) for (q, a, q1) in self.right_trans if q in ks and q1 in ks
            ],
            binary_trans=[
                (q, a, q1, q2)
                for (q, a, q1, q2) in self.binary_trans
                if q in ks and q1 in ks and q2 in ks
            ],
        )

    def reachable_states(self) -> frozenset[str]:
        adj: dict[str, set[str]] = {q: set() for q in self.states}
        for (q, a, q1) in self.left_trans | self.right_trans:
            adj[q].add(q1)
        for (q, a, q1, q2) in self.binary_trans:
            adj[q].add(q1)
            adj[q].add(q2)
        seen = set(self.init)
        stack = sorted(self.init)
        while stack:
            q = stack.pop()
            for w in sorted(adj[q]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def trim(self) -> "ParityTreeAutomaton":
        """Keep states both reachable from init and productive."""
        keep = self.reachable_states() & self.productive_states()
        out = self.restricted_to(keep)
        # Dropping states may strand others; iterate to a fixpoint.
        while True:
            keep2 = out.reachable_states() & out.productive_states()
            if keep2 == frozenset(out.states):
                return out
            out = out.restricted_to(keep2)

    def bisim_quotient(self) -> "ParityTreeAutomaton":
        """Quotient by transition-profile bisimilarity (language preserving)."""
        if not self.states:
            return self
        cls = {q: 0 for q in self.states}
        leaf_by: dict[str, frozenset] = {q: frozenset() for q in self.states}
        for (q, a) in self.leaf_trans:
            leaf_by[q] = leaf_by[q] | {a}
        lefts: dict[str, list] = {q: [] for q in self.states}
        rights: dict[str, list] = {q: [] for q in self.states}
        bins: dict[str, list] = {q: [] for q in self.states}
        for (q, a, q1) in self.left_trans:
            lefts[q].append((a, q1))
        for (q, a, q1) in self.right_trans:
            rights[q].append((a, q1))
        for (q, a, q1, q2) in self.binary_trans:
            bins[q].append((a, q1, q2))

        while True:
            sigs = {}
            for q in self.states:
                sigs[q] = (
                    self.priorities[q],
                    leaf_by[q],
                    frozenset((a, cls[q1]) for (a, q1) in lefts[q]),
                    frozenset((a, cls[q1]) for (a, q1) in rights[q]),
                    frozenset((a, cls[q1], cls[q2]) for (a, q1, q2) in bins[q]),
                )
            order: dict = {}
            new_cls = {}
            for q in self.states:
                s = sigs[q]
                if s not in order:
                    order[s] = len(order)
                new_cls[q] = order[s]
            if new_cls == cls:
                break
            cls = new_cls

        rep: dict[int, str] = {}
        for q in self.states:  # sorted; first member is the representative
            rep.setdefault(cls[q], q)
        f = lambda q: rep[cls[q]]
        return ParityTreeAutomaton(
            states=sorted(set(rep.values())),
            alphabet=self.alphabet,
            priorities={rep[c]: self.priorities[rep[c]] for c in rep},
            init={f(q) for q in self.init},
            leaf_trans={(f(q), a) for (q, a) in self.leaf_trans},
            left_trans={(f(q), a, f(q1)) for (q, a, q1) in self.left_trans},
            right_trans={(f(q), a, f(q1)) for (q, a, q1) in self.right_trans},
            binary_trans={
                (f(q), a, f(q1), f(q2)) for (q, a, q1, q2) in self.binary_trans
            },
        )

    def compact(self) -> "ParityTreeAutomaton":
        return self.trim().bisim_quotient()


# -- derived automata ---------------------------------------------------------


def universal_automaton(alphabet: Iterable[str], state: str = "TOP") -> ParityTreeAutomaton:
    """Accepts every tree over the alphabet."""
    al = sorted(set(alphabet))
    return ParityTreeAutomaton(
        states=[state],
        alphabet=al,
        priorities={state: 0},
        init=[state],
        leaf_trans=[(state, a) for a in al],
        left_trans=[(state, a, state) for a in al],
        right_trans=[(state, a, state) for a in al],
        binary_trans=[(state, a, state, state) for a in al],
    )


def empty_automaton(alphabet: Iterable[str]) -> ParityTreeAutomaton:
    return ParityTreeAutomaton(
        states=["DEAD"],
        alphabet=sorted(set(alphabet)),
        priorities={"DEAD": 1},
        init=["DEAD"],
    )


def union(a: ParityTreeAutomaton, b: ParityTreeAutomaton) -> ParityTreeAutomaton:
    """Language union; state-name collisions are resolved by relabelling."""
    if set(a.states) & set(b.states):
        a = a.relabel("u0:")
        b = b.relabel("u1:")
    return ParityTreeAutomaton(
        states=a.states + b.states,
        alphabet=set(a.alphabet) | set(b.alphabet),
        priorities={**a.priorities, **b.priorities},
        init=a.init | b.init,
        leaf_trans=a.leaf_trans | b.leaf_trans,
        left_trans=a.left_trans | b.left_trans,
        right_trans=a.right_trans | b.right_trans,
        binary_trans=a.binary_trans | b.binary_trans,
    )


def product(
    a: ParityTreeAutomaton,
    b: ParityTreeAutomaton,
    compact: bool = True,
) -> ParityTreeAutomaton:
    """Automaton for the intersection of the two languages.

    When either factor has a trivial parity condition (all priorities
    even) the product is plain; otherwise a deterministic gadget rides
    along every branch to merge the two parity conditions into one.
    """
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatch(
            f"product needs equal alphabets ({a.alphabet} vs {b.alphabet})"
        )
    simple_a = a.all_priorities_even()
    simple_b = b.all_priorities_even()

    ai = {q: i for i, q in enumerate(a.states)}
    bi = {q: i for i, q in enumerate(b.states)}

    a_leaf: dict[str, set[str]] = {}
    b_leaf: dict[str, set[str]] = {}
    for (q, s) in a.leaf_trans:
        a_leaf.setdefault(s, set()).add(q)
    for (q, s) in b.leaf_trans:
        b_leaf.setdefault(s, set()).add(q)

    def group(trans, arity):
        out: dict[tuple[str, str], list] = {}
        for t in sorted(trans):
            out.setdefault((t[0], t[1]), []).append(t[2:])
        return out

    al, bl = group(a.left_trans, 1), group(b.left_trans, 1)
    ar, br = group(a.right_trans, 1), group(b.right_trans, 1)
    ab, bb = group(a.binary_trans, 2), group(b.binary_trans, 2)

    gadget: Optional[ParityConjunctionGadget] = None
    if not (simple_a or simple_b):
        gadget = ParityConjunctionGadget(a.max_priority(), b.max_priority())

    def mk_state(qa: str, qb: str, g: Optional[int]) -> tuple:
        return (qa, qb, g)

    def name(st: tuple) -> str:
        qa, qb, g = st
        return f"{qa}&{qb}" if g is None else f"{qa}&{qb}&{g}"

    def prio_and_next(st: tuple) -> tuple[int, Optional[int]]:
        qa, qb, g = st
        pa, pb = a.priorities[qa], b.priorities[qb]
        if gadget is None:
            return (pb if simple_a else pa), None
        nxt, emitted = gadget.step(g, pa, pb)
        return emitted, nxt

    init_states = []
    for qa in sorted(a.init):
        for qb in sorted(b.init):
            init_states.append(
                mk_state(qa, qb, gadget.initial_state if gadget else None)
            )

    seen: dict[tuple, None] = {}
    stack = list(reversed(init_states))
    leaf_trans = []
    left_trans = []
    right_trans = []
    binary_trans = []
    priorities = {}
    while stack:
        st = stack.pop()
        if st in seen:
            continue
        seen[st] = None
        qa, qb, g = st
        pr, gn = prio_and_next(st)
        priorities[name(st)] = pr
        for s in a.alphabet:
            if qa in a_leaf.get(s, ()) and qb in b_leaf.get(s, ()):
                leaf_trans.append((name(st), s))
            for (qa1,) in al.get((qa, s), ()):
                for (qb1,) in bl.get((qb, s), ()):
                    t = mk_state(qa1, qb1, gn)
                    left_trans.append((name(st), s, name(t)))
                    if t not in seen:
                        stack.append(t)
            for (qa1,) in ar.get((qa, s), ()):
                for (qb1,) in br.get((qb, s), ()):
                    t = mk_state(qa1, qb1, gn)
                    right_trans.append((name(st), s, name(t)))
                    if t not in seen:
                        stack.append(t)
            for (qa1, qa2) in ab.get((qa, s), ()):
                for (qb1, qb2) in bb.get((qb, s), ()):
                    t1 = mk_state(qa1, qb1, gn)
                    t2 = mk_state(qa2, qb2, gn)
                    binary_trans.append((name(st), s, name(t1), name(t2)))
                    for t in (t1, t2):
                        if t not in seen:
                            stack.append(t)

    out = ParityTreeAutomaton(
        states=[name(st) for st in seen],
        alphabet=a.alphabet,
        priorities=priorities,
        init=[name(st) for st in init_states],
        leaf_trans=leaf_trans,
        left_trans=left_trans,
        right_trans=right_trans,
        binary_trans=binary_trans,
    )
    return out.compact() if compact else out


def intersect_many(automata: Sequence[ParityTreeAutomaton]) -> ParityTreeAutomaton:
    if not automata:
        raise ValueError("need at least one automaton")
    acc = automata[0].compact()
    for nxt in automata[1:]:
        acc = product(acc, nxt)
    return acc


def closure_automaton(a: ParityTreeAutomaton) -> ParityTreeAutomaton:
    """Safety automaton for the topological closure of the language.

    A tree lies in the closure iff each of its finite prefixes extends
    to a member, iff (by a compactness argument over runs) it carries a
    locally consistent run through productive states only; so: restrict
    to productive states and erase the parity condition.
    """
    prod = a.productive_states()
    keep = prod & set(a.states)
    return ParityTreeAutomaton(
        states=keep,
        alphabet=a.alphabet,
        priorities={q: 0 for q in keep},
        init=a.init & keep,
        leaf_trans=[(q, s) for (q, s) in a.leaf_trans if q in keep],
        left_trans=[
            (q, s, q1) for (q, s, q1) in a.left_trans if q in keep and q1 in keep
        ],
        right_trans=[
            (q, s, q1) for (q, s, q1) in a.right_trans if q in keep and q1 in keep
        ],
        binary_trans=[
            (q, s, q1, q2)
            for (q, s, q1, q2) in a.binary_trans
            if q in keep and q1 in keep and q2 in keep
        ],
    ).compact()


def restrict_to_prefix(
    a: ParityTreeAutomaton, p: RegularTree
) -> ParityTreeAutomaton:
    """Automaton for {t in L(a) : t extends the prefix p}.

    Extension is exact outside the ports: non-port nodes of ``p`` must
    appear in ``t`` with identical label and child shape.
    """
    p = p.trimmed()
    if not p.is_prefix():
        raise ValueError("restriction needs a finite acyclic prefix")
    if p.is_port(p.root):
        return a
    bad = p.symbols() - set(a.alphabet) - {PORT}
    if bad:
        raise AlphabetMismatch(f"prefix uses symbols {sorted(bad)}")

    TOPM = -1

    def mon(c: Optional[int]) -> Optional[int]:
        if c is None:
            return None
        return TOPM if p.is_port(c) else c

    def name(q: str, m: int) -> str:
        return f"{q}@T" if m == TOPM else f"{q}@{m}"

    states = []
    priorities = {}
    leaf_trans = []
    left_trans = []
    right_trans = []
    binary_trans = []
    seen = set()
    stack = [(q, p.root) for q in sorted(a.init)]
    init = [name(q, p.root) for q in sorted(a.init)]
    while stack:
        q, m = stack.pop()
        if (q, m) in seen:
            continue
        seen.add((q, m))
        states.append(name(q, m))
        priorities[name(q, m)] = a.priorities[q]
        if m == TOPM:
            for (q0, s) in a.leaf_trans:
                if q0 == q:
                    leaf_trans.append((name(q, m), s))
            for (q0, s, q1) in a.left_trans:
                if q0 == q:
                    left_trans.append((name(q, m), s, name(q1, TOPM)))
                    stack.append((q1, TOPM))
            for (q0, s, q1) in a.right_trans:
                if q0 == q:
                    right_trans.append((name(q, m), s, name(q1, TOPM)))
                    stack.append((q1, TOPM))
            for (q0, s, q1, q2) in a.binary_trans:
                if q0 == q:
                    binary_trans.append(
                        (name(q, m), s, name(q1, TOPM), name(q2, TOPM))
                    )
                    stack.append((q1, TOPM))
                    stack.append((q2, TOPM))
            continue
        lbl = p.labels[m]
        l, r = mon(p.lefts[m]), mon(p.rights[m])
        if p.lefts[m] is None and p.rights[m] is None:
            if (q, lbl) in a.leaf_trans:
                leaf_trans.append((name(q, m), lbl))
        elif p.lefts[m] is not None and p.rights[m] is None:
            for (q0, s, q1) in a.left_trans:
                if q0 == q and s == lbl:
                    left_trans.append((name(q, m), s, name(q1, l)))
                    stack.append((q1, l))
        elif p.rights[m] is not None and p.lefts[m] is None:
            for (q0, s, q1) in a.right_trans:
                if q0 == q and s == lbl:
                    right_trans.append((name(q, m), s, name(q1, r)))
                    stack.append((q1, r))
        else:
            for (q0, s, q1, q2) in a.binary_trans:
                if q0 == q and s == lbl:
                    binary_trans.append((name(q, m), s, name(q1, l), name(q2, r)))
                    stack.append((q1, l))
                    stack.append((q2, r))

    return ParityTreeAutomaton(
        states=states,
        alphabet=a.alphabet,
        priorities=priorities,
        init=init,
        leaf_trans=leaf_trans,
        left_trans=left_trans,
        right_trans=right_trans,
        binary_trans=binary_trans,
    ).compact()


# -- automaton pairs -----------------------------------------------------------


class Soundness(enum.Enum):
    UNCHECKED = "Unchecked"
    DISJOINT = "DisjointnessVerified"
    FULL = "FullyVerified"


@dataclass
class AutomatonPair:
    """A language together with an automaton for its complement."""

    positive: ParityTreeAutomaton
    negative: ParityTreeAutomaton
    soundness: Soundness = Soundness.UNCHECKED
    name: str = ""

    def __post_init__(self):
        if set(self.positive.alphabet) != set(self.negative.alphabet):
            raise AlphabetMismatch("pair members must share the alphabet")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.positive.alphabet

    def verify_disjoint(self) -> Optional[RegularTree]:
        """None if L(pos) and L(neg) are disjoint, else a tree in both."""
        both = product(self.positive, self.negative)
        witness = both.emptiness()
        if witness is None:
            self.soundness = Soundness.DISJOINT
        return witness

    def sample_coverage(
        self, rng: random.Random, samples: int = 200, max_nodes: int = 4
    ) -> list[RegularTree]:
        """Trees accepted by neither side (should be none for a true pair)."""
        holes = []
        for _ in range(samples):
            t = random_regular_tree(rng, self.alphabet, max_nodes)
            if not self.positive.membership(t) and not self.negative.membership(t):
                holes.append(t)
        return holes

    def swapped(self) -> "AutomatonPair":
        return AutomatonPair(
            positive=self.negative,
            negative=self.positive,
            soundness=self.soundness,
            name=f"{self.name}-dual" if self.name else "",
        )


# -- parsing / serialization ---------------------------------------------------

_TRANS_RE = re.compile(
    r"^(?P<src>\S+)\s+(?P<sym>\S+)\s*->\s*(?P<rhs>leaf|\(\s*\S+\s*,\s*\S+\s*\))\s*$"
)


def parse_automaton(text: str) -> ParityTreeAutomaton:
    alphabet: Optional[list[str]] = None
    states: dict[str, int] = {}
    init: list[str] = []
    leaf_trans = []
    left_trans = []
    right_trans = []
    binary_trans = []
    pending: list[tuple[int, str, str, str]] = []

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("alphabet:"):
            if alphabet is not None:
                raise AutomatonFormatError("duplicate alphabet line", ln)
            alphabet = stripped[len("alphabet:") :].split()
            if not alphabet:
                raise AutomatonFormatError("alphabet must not be empty", ln)
            continue
        if stripped.startswith("state "):
            parts = stripped.split()
            if len(parts) < 4 or parts[2] != "priority":
                raise AutomatonFormatError(
                    "expected 'state NAME priority N [init]'"
                    + ("; missing priority" if "priority" not in parts else ""),
                    ln,
                )
            name = parts[1]
            if name in states:
                raise AutomatonFormatError(f"duplicate state {name!r}", ln)
            try:
                prio = int(parts[3])
            except ValueError:
                raise AutomatonFormatError(f"bad priority {parts[3]!r}", ln,
                                           col=line.find(parts[3]) + 1)
            if len(parts) == 5 and parts[4] == "init":
                init.append(name)
            elif len(parts) > 4:
                raise AutomatonFormatError(f"trailing tokens {parts[4:]}", ln)
            states[name] = prio
            continue
        m = _TRANS_RE.match(stripped)
        if not m:
            raise AutomatonFormatError(f"cannot parse line {stripped!r}", ln, col=1)
        pending.append((ln, m.group("src"), m.group("sym"), m.group("rhs")))

    if alphabet is None:
        raise AutomatonFormatError("missing alphabet line")
    alpha_set = set(alphabet)
    if len(alphabet) != len(alpha_set):
        raise AutomatonFormatError("alphabet symbols must be distinct")

    for (ln, src, sym, rhs) in pending:
        line_text = f"{src} {sym} -> {rhs}"
        if src not in states:
            raise AutomatonFormatError(f"undeclared state {src!r}", ln, col=1)
        if sym not in alpha_set:
            raise AutomatonFormatError(
                f"undeclared symbol {sym!r}", ln, col=len(src) + 2
            )
        if rhs == "leaf":
            leaf_trans.append((src, sym))
            continue
        inner = rhs.strip()[1:-1]
        l, r = (x.strip() for x in inner.split(","))
        for tgt in (l, r):
            if tgt != "-" and tgt not in states:
                raise AutomatonFormatError(
                    f"undeclared state {tgt!r}", ln, col=line_text.find(tgt) + 1
                )
        if l == "-" and r == "-":
            raise AutomatonFormatError("transition needs at least one child", ln)
        if r == "-":
            left_trans.append((src, sym, l))
        elif l == "-":
            right_trans.append((src, sym, r))
        else:
            binary_trans.append((src, sym, l, r))

    return ParityTreeAutomaton(
        states=states.keys(),
        alphabet=alphabet,
        priorities=states,
        init=init,
        leaf_trans=leaf_trans,
        left_trans=left_trans,
        right_trans=right_trans,
        binary_trans=binary_trans,
    )


def format_automaton(a: ParityTreeAutomaton) -> str:
    out = ["alphabet: " + " ".join(a.alphabet)]
    for q in a.states:
        suffix = " init" if q in a.init else ""
        out.append(f"state {q} priority {a.priorities[q]}{suffix}")
    lines = []
    for (q, s) in a.leaf_trans:
        lines.append(f"{q} {s} -> leaf")
    for (q, s, q1) in a.left_trans:
        lines.append(f"{q} {s} -> ({q1},-)")
    for (q, s, q1) in a.right_trans:
        lines.append(f"{q} {s} -> (-,{q1})")
    for (q, s, q1, q2) in a.binary_trans:
        lines.append(f"{q} {s} -> ({q1},{q2})")
    out.extend(sorted(lines))
    return "\n".join(out) + "\n"
