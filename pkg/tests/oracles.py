"""Independent semantic evaluators for the canonical languages.

These walk regular-tree graphs directly (cycle-aware) and implement the
defining formulas of the constructors, with no automata involved; the
tests cross-check the constructed automaton pairs against them.
"""

from wadgetree.trees import RegularTree, subtree


def pure(t: RegularTree, alphabet) -> bool:
    return t.symbols() <= set(alphabet)


def in_all_a(t: RegularTree) -> bool:
    return t.symbols() == {"a"}


def in_some_b(t: RegularTree) -> bool:
    """Complete-open base: contains a b, over the pure alphabet {a,b}."""
    return pure(t, "ab") and "b" in t.symbols()


def is_finite(t: RegularTree) -> bool:
    return t.trimmed().is_acyclic()


def _walk(t: RegularTree, step):
    """Follow a path given by ``step``; yields (depth, node).

    Ends when the path leaves the tree; if the path is infinite (the
    graph walk revisits a node) a final (-1, first_repeated) is yielded.
    """
    seen = set()
    node = t.root
    depth = 0
    while node is not None:
        if node in seen:
            yield (-1, node)
            return
        seen.add(node)
        yield (depth, node)
        node = step(node)
        depth += 1


def left_path(t: RegularTree):
    return _walk(t, lambda n: t.lefts[n])


def right_path(t: RegularTree):
    return _walk(t, lambda n: t.rights[n])


def spine_path(t: RegularTree):
    """The path 1, 10, 100, ...: right child of the root, then lefts."""
    first = t.rights[t.root]
    if first is None:
        return iter(())

    def gen():
        seen = set()
        node = first
        depth = 0
        while node is not None:
            if node in seen:
                yield (-1, node)
                return
            seen.add(node)
            yield (depth, node)
            node = t.lefts[node]
            depth += 1

    return gen()


def in_arrow(t: RegularTree, in_l, in_m, fresh: str) -> bool:
    """Either branch of the restart operation, evaluated directly."""
    steps = list(spine_path(t))
    infinite = bool(steps) and steps[-1][0] == -1
    if infinite:
        steps = steps[:-1]
    # first divergence: first spine node not labelled with the fresh symbol
    div = next((i for i, (_, n) in enumerate(steps) if t.labels[n] != fresh), None)
    if div is None:
        if infinite:  # spine all-fresh forever: the "continue" branch
            l = t.lefts[t.root]
            return l is not None and in_l(subtree(t, l))
        return False  # spine truncated while still fresh
    node = steps[div][1]
    m_root = t.lefts[node]
    return m_root is not None and in_m(subtree(t, m_root))


def in_plus_minus(t: RegularTree, in_l, ltag="@l", rtag="@r") -> bool:
    lab = t.labels[t.root]
    if lab not in (ltag, rtag) or t.rights[t.root] is not None:
        return False
    l = t.lefts[t.root]
    if l is None:
        return False
    sub = subtree(t, l)
    return in_l(sub) if lab == ltag else not in_l(sub)


def in_sum(t: RegularTree, in_m, in_l, fresh: str, ltag="@l", rtag="@r") -> bool:
    return in_arrow(t, in_l, lambda s: in_plus_minus(s, in_m, ltag, rtag), fresh)


def in_sup_minus(t: RegularTree, preds, bsym: str = "@b") -> bool:
    m = len(preds)
    for depth, node in left_path(t):
        if depth == -1:
            return False  # no @b on the leftmost path, ever
        if t.labels[node] == bsym:
            r = t.rights[node]
            if r is None:
                return False
            return preds[(depth - 1) % m](subtree(t, r))
    return False  # path truncated before any @b


def no_b_on_rightmost(t: RegularTree, bsym: str = "@b") -> bool:
    for depth, node in right_path(t):
        if depth == -1:
            return True
        if t.labels[node] == bsym:
            return False
    return True


def in_sup_plus(t: RegularTree, preds, bsym: str = "@b") -> bool:
    return in_sup_minus(t, preds, bsym) or no_b_on_rightmost(t, bsym)


def in_bullet(t: RegularTree, in_l, alpha: int, stage_syms) -> bool:
    """stage_syms[k] = (restart, ltag, rtag) introduced at stage k+2."""
    if alpha == 1:
        return in_l(t)
    inner = lambda s: in_bullet(s, in_l, alpha - 1, stage_syms)
    fresh, ltag, rtag = stage_syms[alpha - 2]
    return in_sum(t, inner, in_l, fresh, ltag, rtag)


BULLET_STAGES = [("@a", "@l", "@r"), ("@a1", "@l1", "@r1")]


def in_omega_example(t: RegularTree) -> bool:
    if not pure(t, "ab"):
        return False
    steps = list(left_path(t))
    if steps and steps[-1][0] == -1:
        return False  # infinite leftmost path: no leaf
    # path must consist of a-labelled nodes and end in a leaf
    for depth, node in steps:
        if t.labels[node] != "a":
            return False
    last = steps[-1][1]
    if t.lefts[last] is not None or t.rights[last] is not None:
        return False  # ended because left child was missing, but not a leaf
    for depth, node in steps[1:]:  # k = 1..n; the leaf has no right child
        r = t.rights[node]
        if r is None:
            continue
        sub = subtree(t, r)
        if not (is_finite(sub) or "b" not in sub.symbols()):
            return False
    return True


def in_three_minus(t: RegularTree) -> bool:
    # bullet(open base, 3); stage symbols as generated by the constructor
    return in_bullet(t, in_some_b, 3, BULLET_STAGES)


def in_sigma2(t: RegularTree) -> bool:
    for depth, node in left_path(t):
        if depth == -1:
            break
        r = t.rights[node]
        if r is not None and in_three_minus(subtree(t, r)):
            return True
    # on a cycle the same right subtrees repeat, so the scan above is complete
    return False


def in_pi2(t: RegularTree) -> bool:
    return not in_sigma2(t)
