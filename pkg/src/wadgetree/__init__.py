"""Borel-complexity analysis for regular languages of infinite trees.

The package decides whether the language of a nondeterministic parity
tree automaton sits inside the second level of the Borel hierarchy
(equivalently, whether its topological complexity is countable).  The
pipeline: parse an automaton pair, compute the finite algebra of tree
and context types, build the strategy graph over behaviour/type pairs,
and read the verdict off its strongly connected components.  Finite
cutting games provide independent bounded evidence for every verdict.

Acceptance convention used throughout: a run of a parity automaton is
accepting iff on every infinite branch the *minimum* priority occurring
infinitely often is even, and every leaf of the input is matched by a
leaf transition.
"""

from wadgetree.trees import PORT, RegularTree, parse_tree, format_tree
from wadgetree.automata import (
    ParityTreeAutomaton,
    AutomatonPair,
    Soundness,
    parse_automaton,
    format_automaton,
)

__version__ = "0.1.0"

__all__ = [
    "PORT",
    "RegularTree",
    "parse_tree",
    "format_tree",
    "ParityTreeAutomaton",
    "AutomatonPair",
    "Soundness",
    "parse_automaton",
    "format_automaton",
    "__version__",
]
