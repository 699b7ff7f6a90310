import random

import pytest

from helpers import (
    all_a_automaton,
    finite_tree_automaton,
    infinite_branch_automaton,
    some_b_automaton,
)
from wadgetree.automata import (
    AlphabetMismatch,
    AutomatonFormatError,
    AutomatonPair,
    ParityTreeAutomaton,
    closure_automaton,
    format_automaton,
    parse_automaton,
    product,
    restrict_to_prefix,
    union,
    universal_automaton,
)
from wadgetree.trees import (
    extends_prefix,
    from_spec,
    make_leaf,
    random_prefix,
    random_regular_tree,
)

ALL_A_INF = from_spec(("a", "@loop", "@loop"))  # full binary all-a tree
A_LEAF = make_leaf("a")
B_LEAF = make_leaf("b")


# -- parsing ---------------------------------------------------------------


MINIMAL_DOC = """\
# one state, everything a
alphabet: a b
state q0 priority 0 init
q0 a -> leaf
q0 a -> (q0,q0)
q0 a -> (q0,-)
q0 a -> (-,q0)
"""


def test_parse_minimal_roundtrip():
    a = parse_automaton(MINIMAL_DOC)
    assert a.n_states == 1 and a.init == {"q0"}
    assert parse_automaton(format_automaton(a)) == a
    assert format_automaton(parse_automaton(format_automaton(a))) == format_automaton(a)


def test_parse_undeclared_state():
    doc = MINIMAL_DOC + "q0 a -> (q1,-)\n"
    with pytest.raises(AutomatonFormatError) as err:
        parse_automaton(doc)
    assert "q1" in str(err.value) and "line" in str(err.value)


def test_parse_undeclared_symbol():
    doc = MINIMAL_DOC + "q0 c -> leaf\n"
    with pytest.raises(AutomatonFormatError):
        parse_automaton(doc)


def test_parse_missing_priority():
    with pytest.raises(AutomatonFormatError):
        parse_automaton("alphabet: a\nstate q0 init\n")


def test_roundtrip_random_style_automata():
    for builder in (all_a_automaton, some_b_automaton, finite_tree_automaton):
        a = builder()
        assert parse_automaton(format_automaton(a)) == a


# -- membership --------------------------------------------------------------


def test_membership_trivial():
    aut = all_a_automaton()
    assert aut.membership(ALL_A_INF)
    assert aut.membership(A_LEAF)
    assert not aut.membership(B_LEAF)
    assert not aut.membership(from_spec(("a", "b", None)))


def test_membership_requires_matching_leaf():
    # a finite tree with an unmatched leaf label is rejected
    aut = ParityTreeAutomaton(
        states=["q"],
        alphabet=["a", "b"],
        priorities={"q": 0},
        init=["q"],
        leaf_trans=[("q", "a")],
        left_trans=[("q", "b", "q")],
    )
    assert aut.membership(from_spec(("b", "a", None)))
    assert not aut.membership(B_LEAF)


def test_membership_alphabet_mismatch():
    aut = all_a_automaton(alphabet=("a",))
    with pytest.raises(AlphabetMismatch):
        aut.membership(B_LEAF)


def test_finite_vs_infinite():
    fin = finite_tree_automaton()
    inf = infinite_branch_automaton()
    left_spine = from_spec(("a", "@loop", "b"))
    assert not fin.membership(left_spine)
    assert inf.membership(left_spine)
    assert fin.membership(from_spec(("a", ("b", "a", "b"), "a")))


# -- emptiness ----------------------------------------------------------------


def test_emptiness_no_transitions():
    aut = ParityTreeAutomaton(
        states=["q"], alphabet=["a"], priorities={"q": 1}, init=["q"]
    )
    assert aut.is_empty()


def test_emptiness_all_a_witness():
    aut = all_a_automaton()
    w = aut.emptiness()
    assert w is not None
    assert aut.membership(w)
    assert w.symbols() == {"a"}


def test_emptiness_witness_reverifies():
    rng = random.Random(5)
    for builder in (some_b_automaton, finite_tree_automaton, infinite_branch_automaton):
        aut = builder()
        w = aut.emptiness()
        assert w is not None and aut.membership(w)


def test_odd_self_loop_only_is_empty():
    aut = ParityTreeAutomaton(
        states=["q"],
        alphabet=["a"],
        priorities={"q": 1},
        init=["q"],
        left_trans=[("q", "a", "q")],
    )
    assert aut.is_empty()


# -- product -------------------------------------------------------------------


def test_product_identity_element():
    rng = random.Random(11)
    a = some_b_automaton()
    top = universal_automaton(a.alphabet)
    prod = product(a, top)
    for _ in range(50):
        t = random_regular_tree(rng, a.alphabet, 4)
        assert prod.membership(t) == a.membership(t)


def test_product_membership_conjunction():
    rng = random.Random(12)
    pairs = [
        (some_b_automaton(), finite_tree_automaton()),
        (some_b_automaton(), infinite_branch_automaton()),
        (finite_tree_automaton(), all_a_automaton()),
    ]
    for a, b in pairs:
        prod = product(a, b)
        for _ in range(50):
            t = random_regular_tree(rng, a.alphabet, 4)
            assert prod.membership(t) == (a.membership(t) and b.membership(t)), (
                a,
                b,
                t,
            )


def test_product_disjoint_pair_empty():
    prod = product(all_a_automaton(), some_b_automaton())
    assert prod.is_empty()


def test_union_membership():
    rng = random.Random(13)
    a, b = all_a_automaton(), some_b_automaton()
    u = union(a, b)
    for _ in range(50):
        t = random_regular_tree(rng, a.alphabet, 4)
        assert u.membership(t) == (a.membership(t) or b.membership(t))


# -- closure --------------------------------------------------------------------


def test_closure_of_closed_language():
    aut = all_a_automaton()
    cl = closure_automaton(aut)
    rng = random.Random(14)
    for _ in range(60):
        t = random_regular_tree(rng, aut.alphabet, 4)
        assert cl.membership(t) == aut.membership(t)


def test_closure_of_some_b():
    # Finite trees are isolated points (a complete finite tree is its own
    # port-free prefix), so the closure of "some b" is: trees containing a
    # b, plus all trees with an infinite branch.
    some_b = some_b_automaton()
    cl = closure_automaton(some_b)
    rng = random.Random(15)
    for _ in range(60):
        t = random_regular_tree(rng, "ab", 4)
        expect = some_b.membership(t) or not t.trimmed().is_acyclic()
        assert cl.membership(t) == expect, t
    assert cl.membership(ALL_A_INF)
    assert not cl.membership(A_LEAF)


def test_closure_extensive_and_idempotent_sampled():
    rng = random.Random(16)
    for builder in (all_a_automaton, some_b_automaton, finite_tree_automaton):
        aut = builder()
        cl = closure_automaton(aut)
        cl2 = closure_automaton(cl)
        for _ in range(60):
            t = random_regular_tree(rng, aut.alphabet, 4)
            if aut.membership(t):
                assert cl.membership(t)  # extensive
            assert cl.membership(t) == cl2.membership(t)  # idempotent


def test_closure_of_empty_is_empty():
    aut = ParityTreeAutomaton(
        states=["q"], alphabet=["a"], priorities={"q": 1}, init=["q"]
    )
    assert closure_automaton(aut).is_empty()


def test_closure_finite_trees():
    # every prefix of any tree extends to a finite tree, so cl = all trees
    cl = closure_automaton(finite_tree_automaton())
    assert cl.membership(ALL_A_INF)


# -- prefix restriction -----------------------------------------------------------


def test_restrict_to_prefix_agrees_with_semantics():
    rng = random.Random(17)
    for builder in (all_a_automaton, some_b_automaton, infinite_branch_automaton):
        aut = builder()
        for _ in range(12):
            p = random_prefix(rng, "ab", 2)
            restricted = restrict_to_prefix(aut, p)
            for _ in range(12):
                t = random_regular_tree(rng, "ab", 4)
                expect = aut.membership(t) and extends_prefix(t, p)
                assert restricted.membership(t) == expect, (p, t)


# -- trim / quotient ---------------------------------------------------------------


def test_compact_preserves_language():
    rng = random.Random(18)
    for builder in (some_b_automaton, finite_tree_automaton, infinite_branch_automaton):
        aut = builder()
        bloated = union(aut, aut)  # duplicate states collapse again
        compacted = bloated.compact()
        assert compacted.n_states <= aut.n_states
        for _ in range(60):
            t = random_regular_tree(rng, aut.alphabet, 4)
            assert compacted.membership(t) == aut.membership(t)


# -- pairs --------------------------------------------------------------------------


def test_pair_disjointness_and_coverage():
    pair = AutomatonPair(all_a_automaton(), some_b_automaton(), name="closed-all-a")
    assert pair.verify_disjoint() is None
    holes = pair.sample_coverage(random.Random(19), samples=200)
    assert holes == []


def test_broken_pair_yields_witness():
    pair = AutomatonPair(all_a_automaton(), all_a_automaton())
    w = pair.verify_disjoint()
    assert w is not None
    assert pair.positive.membership(w) and pair.negative.membership(w)
