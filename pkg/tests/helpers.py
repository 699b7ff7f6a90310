"""Shared builders for small reference automata used across the tests."""

from wadgetree.automata import ParityTreeAutomaton


def all_a_automaton(alphabet=("a", "b")) -> ParityTreeAutomaton:
    """Every node labelled a (any shape)."""
    return ParityTreeAutomaton(
        states=["A"],
        alphabet=alphabet,
        priorities={"A": 0},
        init=["A"],
        leaf_trans=[("A", "a")],
        left_trans=[("A", "a", "A")],
        right_trans=[("A", "a", "A")],
        binary_trans=[("A", "a", "A", "A")],
    )


def some_b_automaton(alphabet=("a", "b")) -> ParityTreeAutomaton:
    """At least one node labelled b."""
    return ParityTreeAutomaton(
        states=["S", "T"],
        alphabet=alphabet,
        priorities={"S": 1, "T": 0},
        init=["S"],
        leaf_trans=[("S", "b")] + [("T", x) for x in alphabet],
        left_trans=[("S", "a", "S"), ("S", "b", "T")]
        + [("T", x, "T") for x in alphabet],
        right_trans=[("S", "a", "S"), ("S", "b", "T")]
        + [("T", x, "T") for x in alphabet],
        binary_trans=[
            ("S", "a", "S", "T"),
            ("S", "a", "T", "S"),
            ("S", "b", "T", "T"),
        ]
        + [("T", x, "T", "T") for x in alphabet],
    )


def finite_tree_automaton(alphabet=("a", "b")) -> ParityTreeAutomaton:
    """All branches finite (the tree is well-founded)."""
    return ParityTreeAutomaton(
        states=["F"],
        alphabet=alphabet,
        priorities={"F": 1},
        init=["F"],
        leaf_trans=[("F", x) for x in alphabet],
        left_trans=[("F", x, "F") for x in alphabet],
        right_trans=[("F", x, "F") for x in alphabet],
        binary_trans=[("F", x, "F", "F") for x in alphabet],
    )


def infinite_branch_automaton(alphabet=("a", "b")) -> ParityTreeAutomaton:
    """Some branch is infinite."""
    al = list(alphabet)
    return ParityTreeAutomaton(
        states=["I", "T"],
        alphabet=al,
        priorities={"I": 0, "T": 0},
        init=["I"],
        leaf_trans=[("T", x) for x in al],
        left_trans=[("I", x, "I") for x in al] + [("T", x, "T") for x in al],
        right_trans=[("I", x, "I") for x in al] + [("T", x, "T") for x in al],
        binary_trans=[("I", x, "I", "T") for x in al]
        + [("I", x, "T", "I") for x in al]
        + [("T", x, "T", "T") for x in al],
    )
