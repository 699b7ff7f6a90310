"""Constructors for the canonical corpus languages.

Each constructor emits an :class:`AutomatonPair`: the language and an
automaton for its exact complement, built dually.  Since trees are
partial, the complements spell out the degenerate cases (absent
children, truncated designated paths, out-of-place symbols) that the
defining formulas leave implicit; the positive sides implement the
formulas strictly as written.

Fresh symbols introduced by the operations use the reserved names
``@a`` (restart spine of the arrow operation), ``@b`` (choice marker of
the sup operations) and ``@l``/``@r`` (tags of the signed disjoint
union), with numeric suffixes when an operation is applied repeatedly.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Optional, Sequence

from wadgetree.automata import (
    AutomatonPair,
    ParityTreeAutomaton,
    Soundness,
    format_automaton,
    product,
    union,
)

TOP = "TT"


def _fresh(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def _universal(alphabet, state=TOP) -> ParityTreeAutomaton:
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


def _junk_finder(full_alphabet, junk, tag: str) -> ParityTreeAutomaton:
    """Trees containing at least one symbol from ``junk`` somewhere."""
    al = sorted(set(full_alphabet))
    junk = sorted(set(junk))
    pure = [a for a in al if a not in junk]
    J, T = f"{tag}J", f"{tag}T"
    left = [(J, a, J) for a in pure] + [(T, a, T) for a in al]
    right = [(J, a, J) for a in pure] + [(T, a, T) for a in al]
    binary = (
        [(J, a, J, T) for a in pure]
        + [(J, a, T, J) for a in pure]
        + [(T, a, T, T) for a in al]
    )
    leaf = [(J, y) for y in junk] + [(T, a) for a in al]
    for y in junk:
        left.append((J, y, T))
        right.append((J, y, T))
        binary.append((J, y, T, T))
    return ParityTreeAutomaton(
        states=[J, T],
        alphabet=al,
        priorities={J: 1, T: 0},
        init=[J],
        leaf_trans=leaf,
        left_trans=left,
        right_trans=right,
        binary_trans=binary,
    )


def embed_pair(pair: AutomatonPair, full_alphabet, tag: str) -> AutomatonPair:
    """Re-home a pair into a larger alphabet, exactly.

    The positive side is unchanged (it has no transitions on the new
    symbols, so it rejects any tree mentioning them).  The negative
    side additionally accepts every tree containing a new symbol, which
    keeps the two sides exact complements over the larger universe.
    """
    full = sorted(set(full_alphabet))
    extra = set(full) - set(pair.alphabet)
    pos = pair.positive.relabel(f"{tag}p:").with_alphabet(full)
    neg = pair.negative.relabel(f"{tag}n:").with_alphabet(full)
    if extra:
        neg = union(neg, _junk_finder(full, extra, f"{tag}x"))
    return AutomatonPair(pos, neg, pair.soundness, name=pair.name)


def _finish(
    pos: ParityTreeAutomaton,
    neg: ParityTreeAutomaton,
    name: str,
    verify: bool = True,
) -> AutomatonPair:
    pair = AutomatonPair(pos.compact(), neg.compact(), name=name)
    if verify:
        witness = pair.verify_disjoint()
        if witness is not None:
            raise AssertionError(
                f"constructor {name!r} produced overlapping pair; witness:\n{witness}"
            )
    return pair


# -- base languages -----------------------------------------------------------


def base_closed(verify: bool = True) -> AutomatonPair:
    """All nodes labelled a, over {a, b}: a complete closed set."""
    pos = ParityTreeAutomaton(
        states=["A"],
        alphabet=["a", "b"],
        priorities={"A": 0},
        init=["A"],
        leaf_trans=[("A", "a")],
        left_trans=[("A", "a", "A")],
        right_trans=[("A", "a", "A")],
        binary_trans=[("A", "a", "A", "A")],
    )
    neg = _junk_finder(["a", "b"], ["b"], "b")
    return _finish(pos, neg, "closed-all-a", verify)


def base_open(verify: bool = True) -> AutomatonPair:
    """Some node labelled b: a complete open set (the dual base)."""
    c = base_closed(verify=False)
    pair = AutomatonPair(c.negative, c.positive, name="open-some-b")
    if verify:
        assert pair.verify_disjoint() is None
    return pair


# -- signed disjoint union ------------------------------------------------------


def plus_minus(operand: AutomatonPair, verify: bool = True) -> AutomatonPair:
    """Root-tagged disjoint union of the language and its complement.

    Tag @l: accept iff the left subtree of the (only-left-child) root is
    in the language; tag @r: iff it is in the complement.  Everything
    else (untagged root, wrong root shape) falls to the complement.
    """
    ltag = _fresh("@l", operand.alphabet)
    rtag = _fresh("@r", operand.alphabet)
    full = sorted(set(operand.alphabet) | {ltag, rtag})
    emb = embed_pair(operand, full, "pm.")
    T = _universal(full)

    U = "pm.U"
    pos = union(emb.positive, emb.negative)
    pos = ParityTreeAutomaton(
        states=list(pos.states) + [U],
        alphabet=full,
        priorities={**pos.priorities, U: 1},
        init=[U],
        leaf_trans=pos.leaf_trans,
        left_trans=set(pos.left_trans)
        | {(U, ltag, q) for q in emb.positive.init}
        | {(U, rtag, q) for q in emb.negative.init},
        right_trans=pos.right_trans,
        binary_trans=pos.binary_trans,
    )

    NU = "pm.NU"
    neg = union(union(emb.positive, emb.negative), T)
    untagged = [a for a in full if a not in (ltag, rtag)]
    neg = ParityTreeAutomaton(
        states=list(neg.states) + [NU],
        alphabet=full,
        priorities={**neg.priorities, NU: 1},
        init=[NU],
        leaf_trans=set(neg.leaf_trans)
        | {(NU, a) for a in full},  # leaf root: wrong shape whatever the label
        left_trans=set(neg.left_trans)
        | {(NU, ltag, q) for q in emb.negative.init}
        | {(NU, rtag, q) for q in emb.positive.init}
        | {(NU, a, TOP) for a in untagged},
        right_trans=set(neg.right_trans) | {(NU, a, TOP) for a in full},
        binary_trans=set(neg.binary_trans) | {(NU, a, TOP, TOP) for a in full},
    )
    name = f"({operand.name})^pm" if operand.name else "pm"
    return _finish(pos, neg, name, verify)


# -- the arrow (restart) operation ------------------------------------------------


def arrow(left: AutomatonPair, right: AutomatonPair, verify: bool = True) -> AutomatonPair:
    """Trees where either the left subtree is in ``left`` and the spine
    1,10,100,... carries the fresh symbol forever, or the spine diverges
    at its first non-fresh node whose left subtree is then in ``right``.
    """
    f = _fresh("@a", set(left.alphabet) | set(right.alphabet))
    full = sorted(set(left.alphabet) | set(right.alphabet) | {f})
    L = embed_pair(left, full, "ar.L")
    M = embed_pair(right, full, "ar.M")
    T = _universal(full)
    others = [a for a in full if a != f]

    R1, R2, W1, W2 = "ar.R1", "ar.R2", "ar.W1", "ar.W2"
    pos_base = union(L.positive, M.positive)
    pos = ParityTreeAutomaton(
        states=list(pos_base.states) + [R1, R2, W1, W2, TOP],
        alphabet=full,
        priorities={**pos_base.priorities, R1: 1, R2: 1, W1: 0, W2: 1, TOP: 0},
        init=[R1, R2],
        leaf_trans=set(pos_base.leaf_trans) | {(TOP, a) for a in full},
        left_trans=set(pos_base.left_trans)
        | {(W1, f, W1), (W2, f, W2)}
        | {(W2, x, m0) for x in others for m0 in M.positive.init}
        | {(TOP, a, TOP) for a in full},
        right_trans=set(pos_base.right_trans)
        | {(R2, x, W2) for x in full}
        | {(TOP, a, TOP) for a in full},
        binary_trans=set(pos_base.binary_trans)
        | {(R1, x, l0, W1) for x in full for l0 in L.positive.init}
        | {(R2, x, TOP, W2) for x in full}
        | {(W1, f, W1, TOP), (W2, f, W2, TOP)}
        | {(W2, x, m0, TOP) for x in others for m0 in M.positive.init}
        | {(TOP, a, TOP, TOP) for a in full},
    )

    NR, PB0, PBT, PBD = "ar.NR", "ar.PB0", "ar.PBt", "ar.PBd"
    neg_base = union(L.negative, M.negative)
    neg = ParityTreeAutomaton(
        states=list(neg_base.states) + [NR, PB0, PBT, PBD, TOP],
        alphabet=full,
        priorities={**neg_base.priorities, NR: 1, PB0: 0, PBT: 1, PBD: 1, TOP: 0},
        init=[NR],
        leaf_trans=set(neg_base.leaf_trans)
        | {(NR, a) for a in full}
        | {(PBT, f)}
        | {(PBD, x) for x in others}
        | {(TOP, a) for a in full},
        left_trans=set(neg_base.left_trans)
        | {(NR, a, TOP) for a in full}
        | {(PB0, f, PB0), (PBT, f, PBT), (PBD, f, PBD)}
        | {(PBD, x, nm0) for x in others for nm0 in M.negative.init}
        | {(TOP, a, TOP) for a in full},
        right_trans=set(neg_base.right_trans)
        | {(NR, a, pb) for a in full for pb in (PB0, PBT, PBD)}
        | {(PBT, f, TOP)}
        | {(PBD, x, TOP) for x in others}
        | {(TOP, a, TOP) for a in full},
        binary_trans=set(neg_base.binary_trans)
        | {(NR, a, TOP, PBT) for a in full}
        | {(NR, a, TOP, PBD) for a in full}
        | {(NR, a, nl0, PB0) for a in full for nl0 in L.negative.init}
        | {(PB0, f, PB0, TOP), (PBT, f, PBT, TOP), (PBD, f, PBD, TOP)}
        | {(PBD, x, nm0, TOP) for x in others for nm0 in M.negative.init}
        | {(TOP, a, TOP, TOP) for a in full},
    )
    name = f"({left.name})->({right.name})"
    return _finish(pos, neg, name, verify)


def sum_pair(m: AutomatonPair, l: AutomatonPair, verify: bool = True) -> AutomatonPair:
    """The sum: play ``m``, with a one-shot restart into ``l`` or its dual."""
    out = arrow(l, plus_minus(m, verify=False), verify=verify)
    out.name = f"({m.name})+({l.name})"
    return out


# -- sup operations ----------------------------------------------------------------


def _sup_index(j: int, m: int) -> int:
    """Position in the operand list for the choice marker at depth j."""
    return (j - 1) % m


def sup_minus(operands: Sequence[AutomatonPair], verify: bool = True) -> AutomatonPair:
    """First @b on the leftmost path at depth k: right subtree there is in
    the k-th operand (cyclically)."""
    if not operands:
        raise ValueError("sup needs at least one operand")
    m = len(operands)
    bsym = _fresh("@b", set().union(*(set(p.alphabet) for p in operands)))
    full = sorted(set().union(*(set(p.alphabet) for p in operands)) | {bsym})
    embs = [embed_pair(p, full, f"sup{i}.") for i, p in enumerate(operands)]
    T = _universal(full)
    others = [a for a in full if a != bsym]

    def V(j):
        return f"sup.V{j}"

    def NV(j):
        return f"sup.NV{j}"

    pos_base = embs[0].positive
    for e in embs[1:]:
        pos_base = union(pos_base, e.positive)
    pos = ParityTreeAutomaton(
        states=list(pos_base.states) + [V(j) for j in range(m)] + [TOP],
        alphabet=full,
        priorities={
            **pos_base.priorities,
            **{V(j): 1 for j in range(m)},
            TOP: 0,
        },
        init=[V(0)],
        leaf_trans=set(pos_base.leaf_trans) | {(TOP, a) for a in full},
        left_trans=set(pos_base.left_trans)
        | {(V(j), x, V((j + 1) % m)) for j in range(m) for x in others}
        | {(TOP, a, TOP) for a in full},
        right_trans=set(pos_base.right_trans)
        | {
            (V(j), bsym, q)
            for j in range(m)
            for q in embs[_sup_index(j, m)].positive.init
        }
        | {(TOP, a, TOP) for a in full},
        binary_trans=set(pos_base.binary_trans)
        | {(V(j), x, V((j + 1) % m), TOP) for j in range(m) for x in others}
        | {
            (V(j), bsym, TOP, q)
            for j in range(m)
            for q in embs[_sup_index(j, m)].positive.init
        }
        | {(TOP, a, TOP, TOP) for a in full},
    )

    neg_base = embs[0].negative
    for e in embs[1:]:
        neg_base = union(neg_base, e.negative)
    VINF = "sup.NVinf"
    neg = ParityTreeAutomaton(
        states=list(neg_base.states) + [NV(j) for j in range(m)] + [VINF, TOP],
        alphabet=full,
        priorities={
            **neg_base.priorities,
            **{NV(j): 1 for j in range(m)},
            VINF: 0,
            TOP: 0,
        },
        init=[NV(0), VINF],
        leaf_trans=set(neg_base.leaf_trans)
        | {(NV(j), x) for j in range(m) for x in full}  # path ends: leaf or @b-no-right
        | {(TOP, a) for a in full},
        left_trans=set(neg_base.left_trans)
        | {(NV(j), x, NV((j + 1) % m)) for j in range(m) for x in others}
        | {(NV(j), bsym, TOP) for j in range(m)}  # @b found, right absent
        | {(VINF, x, VINF) for x in others}
        | {(TOP, a, TOP) for a in full},
        right_trans=set(neg_base.right_trans)
        | {(NV(j), x, TOP) for j in range(m) for x in others}  # truncation
        | {
            (NV(j), bsym, q)
            for j in range(m)
            for q in embs[_sup_index(j, m)].negative.init
        }
        | {(TOP, a, TOP) for a in full},
        binary_trans=set(neg_base.binary_trans)
        | {(NV(j), x, NV((j + 1) % m), TOP) for j in range(m) for x in others}
        | {
            (NV(j), bsym, TOP, q)
            for j in range(m)
            for q in embs[_sup_index(j, m)].negative.init
        }
        | {(VINF, x, VINF, TOP) for x in others}
        | {(TOP, a, TOP, TOP) for a in full},
    )
    name = "sup-(" + ",".join(p.name for p in operands) + ")"
    return _finish(pos, neg, name, verify)


def sup_plus(operands: Sequence[AutomatonPair], verify: bool = True) -> AutomatonPair:
    """sup_minus plus all trees never playing @b on the rightmost path.

    The defining formula constrains the path 1^n (the rightmost branch)
    and is implemented exactly as written.
    """
    minus = sup_minus(operands, verify=False)
    bsym = next(a for a in minus.alphabet if a.startswith("@b"))
    full = minus.alphabet
    others = [a for a in full if a != bsym]
    U = "supp.U"
    clause = ParityTreeAutomaton(
        states=[U, TOP],
        alphabet=full,
        priorities={U: 0, TOP: 0},
        init=[U],
        leaf_trans=[(U, x) for x in others] + [(TOP, a) for a in full],
        left_trans=[(U, x, TOP) for x in others] + [(TOP, a, TOP) for a in full],
        right_trans=[(U, x, U) for x in others] + [(TOP, a, TOP) for a in full],
        binary_trans=[(U, x, TOP, U) for x in others]
        + [(TOP, a, TOP, TOP) for a in full],
    )
    pos = union(minus.positive, clause)

    F = "supp.F"
    finder = ParityTreeAutomaton(
        states=[F, TOP],
        alphabet=full,
        priorities={F: 1, TOP: 0},
        init=[F],
        leaf_trans=[(F, bsym)] + [(TOP, a) for a in full],
        left_trans=[(F, bsym, TOP)] + [(TOP, a, TOP) for a in full],
        right_trans=[(F, x, F) for x in others]
        + [(F, bsym, TOP)]
        + [(TOP, a, TOP) for a in full],
        binary_trans=[(F, x, TOP, F) for x in others]
        + [(F, bsym, TOP, TOP)]
        + [(TOP, a, TOP, TOP) for a in full],
    )
    neg = product(minus.negative, finder)
    name = "sup+(" + ",".join(p.name for p in operands) + ")"
    return _finish(pos, neg, name, verify)


# -- countable multiplication --------------------------------------------------------


def bullet(operand: AutomatonPair, alpha, verify: bool = True) -> AutomatonPair:
    """Iterated sum: bullet(L,1)=L, bullet(L,n+1)=sum(bullet(L,n),L); the
    limit stage is instantiated finitely through sup_plus."""
    if alpha == "omega":
        stages = [bullet(operand, k, verify=False) for k in (1, 2, 3)]
        out = sup_plus(stages, verify=verify)
        out.name = f"({operand.name})*omega"
        return out
    if not isinstance(alpha, int) or not 1 <= alpha <= 8:
        raise ValueError("bullet supports alpha in 1..8 or 'omega'")
    if alpha == 1:
        out = AutomatonPair(
            operand.positive, operand.negative, operand.soundness,
            name=f"({operand.name})*1",
        )
        return out
    prev = bullet(operand, alpha - 1, verify=False)
    out = sum_pair(prev, operand, verify=verify)
    out.name = f"({operand.name})*{alpha}"
    return out


# -- the countable-degree example ------------------------------------------------------


def omega_example(verify: bool = True) -> AutomatonPair:
    """Left spine of a's ending in a leaf; the right subtree hanging at
    every spine node below the root is finite or avoids b."""
    al = ["a", "b"]
    W0, W1, FIN, NOB = "oe.W0", "oe.W1", "oe.FIN", "oe.NOB"
    pos = ParityTreeAutomaton(
        states=[W0, W1, FIN, NOB, TOP],
        alphabet=al,
        priorities={W0: 1, W1: 1, FIN: 1, NOB: 0, TOP: 0},
        init=[W0],
        leaf_trans=[(W0, "a"), (W1, "a"), (FIN, "a"), (FIN, "b"), (NOB, "a")]
        + [(TOP, a) for a in al],
        left_trans=[(W0, "a", W1), (W1, "a", W1)]
        + [(FIN, x, FIN) for x in al]
        + [(NOB, "a", NOB)]
        + [(TOP, a, TOP) for a in al],
        right_trans=[(FIN, x, FIN) for x in al]
        + [(NOB, "a", NOB)]
        + [(TOP, a, TOP) for a in al],
        binary_trans=[(W0, "a", W1, TOP)]
        + [(W1, "a", W1, FIN), (W1, "a", W1, NOB)]
        + [(FIN, x, FIN, FIN) for x in al]
        + [(NOB, "a", NOB, NOB)]
        + [(TOP, a, TOP, TOP) for a in al],
    )

    N0, NW, PINF, PT, PB = "oe.N0", "oe.NW", "oe.Pinf", "oe.Pt", "oe.Pb"
    IBI, IBT = "oe.I", "oe.J"
    # infinite-and-contains-b checker: product of the two simple automata
    inf_aut = ParityTreeAutomaton(
        states=[IBI, IBT],
        alphabet=al,
        priorities={IBI: 0, IBT: 0},
        init=[IBI],
        leaf_trans=[(IBT, x) for x in al],
        left_trans=[(IBI, x, IBI) for x in al] + [(IBT, x, IBT) for x in al],
        right_trans=[(IBI, x, IBI) for x in al] + [(IBT, x, IBT) for x in al],
        binary_trans=[(IBI, x, IBI, IBT) for x in al]
        + [(IBI, x, IBT, IBI) for x in al]
        + [(IBT, x, IBT, IBT) for x in al],
    )
    hasb_aut = _junk_finder(al, ["b"], "hb")
    infb = product(inf_aut, hasb_aut).relabel("oe.ib:")

    neg = ParityTreeAutomaton(
        states=[N0, NW, PINF, PT, PB, TOP] + list(infb.states),
        alphabet=al,
        priorities={
            N0: 1, NW: 1, PINF: 0, PT: 1, PB: 1, TOP: 0,
            **infb.priorities,
        },
        init=[N0],
        leaf_trans=[(N0, "b"), (PB, "b")]
        + [(TOP, a) for a in al]
        + list(infb.leaf_trans),
        left_trans=[(N0, "a", x) for x in (PINF, PT, PB, NW)]
        + [(N0, "b", TOP)]
        + [(PINF, "a", PINF), (PT, "a", PT), (PB, "a", PB), (NW, "a", NW)]
        + [(PB, "b", TOP)]
        + [(TOP, a, TOP) for a in al]
        + list(infb.left_trans),
        right_trans=[(N0, x, TOP) for x in al]
        + [(PT, "a", TOP), (PB, "b", TOP)]
        + [(NW, "a", q) for q in infb.init]
        + [(TOP, a, TOP) for a in al]
        + list(infb.right_trans),
        binary_trans=[(N0, "a", x, TOP) for x in (PINF, PT, PB, NW)]
        + [(N0, "b", TOP, TOP)]
        + [
            (PINF, "a", PINF, TOP),
            (PT, "a", PT, TOP),
            (PB, "a", PB, TOP),
            (NW, "a", NW, TOP),
        ]
        + [(PB, "b", TOP, TOP)]
        + [(NW, "a", TOP, q) for q in infb.init]
        + [(TOP, a, TOP, TOP) for a in al]
        + list(infb.binary_trans),
    )
    return _finish(pos, neg, "omega-example", verify)


# -- the uncountable-degree pair --------------------------------------------------------


def three_minus(verify: bool = True) -> AutomatonPair:
    """The canonical degree-3 negatively-signed language."""
    out = bullet(base_open(verify=False), 3, verify=verify)
    out.name = "three-minus"
    return out


def sigma2_complete(verify: bool = True) -> AutomatonPair:
    """Some right subtree along the leftmost path lies in three_minus."""
    inner = three_minus(verify=False)
    full = inner.alphabet
    E, AW = "s2.E", "s2.A"
    pos = ParityTreeAutomaton(
        states=list(inner.positive.states) + [E, TOP],
        alphabet=full,
        priorities={**inner.positive.priorities, E: 1, TOP: 0},
        init=[E],
        leaf_trans=set(inner.positive.leaf_trans) | {(TOP, a) for a in full},
        left_trans=set(inner.positive.left_trans)
        | {(E, x, E) for x in full}
        | {(TOP, a, TOP) for a in full},
        right_trans=set(inner.positive.right_trans)
        | {(E, x, q) for x in full for q in inner.positive.init}
        | {(TOP, a, TOP) for a in full},
        binary_trans=set(inner.positive.binary_trans)
        | {(E, x, E, TOP) for x in full}
        | {(E, x, TOP, q) for x in full for q in inner.positive.init}
        | {(TOP, a, TOP, TOP) for a in full},
    )
    neg = ParityTreeAutomaton(
        states=list(inner.negative.states) + [AW],
        alphabet=full,
        priorities={**inner.negative.priorities, AW: 0},
        init=[AW],
        leaf_trans=set(inner.negative.leaf_trans) | {(AW, x) for x in full},
        left_trans=set(inner.negative.left_trans) | {(AW, x, AW) for x in full},
        right_trans=set(inner.negative.right_trans)
        | {(AW, x, q) for x in full for q in inner.negative.init},
        binary_trans=set(inner.negative.binary_trans)
        | {(AW, x, AW, q) for x in full for q in inner.negative.init},
    )
    return _finish(pos, neg, "sigma2", verify)


def pi2_complete(verify: bool = True) -> AutomatonPair:
    """Every right subtree along the leftmost path lies in the dual of
    three_minus (the exact complement of sigma2_complete)."""
    s2 = sigma2_complete(verify=verify)
    return AutomatonPair(s2.negative, s2.positive, s2.soundness, name="pi2")


# -- corpus ------------------------------------------------------------------------------


CORPUS_BUILDERS = {
    "closed-all-a": base_closed,
    "open-some-b": base_open,
    "omega-example": omega_example,
    "sigma2": sigma2_complete,
    "pi2": pi2_complete,
}

EXPECTED_VERDICTS = {
    "closed-all-a": "InDelta02",
    "open-some-b": "InDelta02",
    "omega-example": "InDelta02",
    "sigma2": "NotInDelta02",
    "pi2": "NotInDelta02",
}

# Per-entry bounded game evidence expected at the default cap (6):
# survives = Alternator wins every tested alternating game.
EXPECTED_SURVIVES_CAP = {
    "closed-all-a": False,
    "open-some-b": False,
    "omega-example": True,
    "sigma2": True,
    "pi2": True,
}


def build_corpus(names: Optional[Sequence[str]] = None, verify: bool = True):
    names = list(names) if names else sorted(CORPUS_BUILDERS)
    out = {}
    for n in names:
        if n not in CORPUS_BUILDERS:
            raise KeyError(f"unknown corpus entry {n!r}")
        out[n] = CORPUS_BUILDERS[n](verify=verify)
    return out


def emit_corpus(outdir: str, names: Optional[Sequence[str]] = None) -> dict:
    """Write automaton files plus a manifest with the expected verdicts."""
    os.makedirs(outdir, exist_ok=True)
    entries = {}
    for name, pair in build_corpus(names).items():
        posfile = f"{name}.pos.aut"
        negfile = f"{name}.neg.aut"
        with open(os.path.join(outdir, posfile), "w") as fh:
            fh.write(format_automaton(pair.positive))
        with open(os.path.join(outdir, negfile), "w") as fh:
            fh.write(format_automaton(pair.negative))
        entries[name] = {
            "positive": posfile,
            "negative": negfile,
            "soundness": pair.soundness.value,
            "expected_verdict": EXPECTED_VERDICTS[name],
            "expected_survives_cap": EXPECTED_SURVIVES_CAP[name],
            "game_cap": 6,
        }
    manifest = {"entries": entries}
    with open(os.path.join(outdir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest
