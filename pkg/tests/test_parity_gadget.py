import random

from hypothesis import given, settings
from hypothesis import strategies as st

from wadgetree.parity_gadget import ParityConjunctionGadget


def _expected_min_inf(cycle, coord):
    return min(c[coord] for c in cycle)


def _both_even(cycle):
    return _expected_min_inf(cycle, 0) % 2 == 0 and _expected_min_inf(cycle, 1) % 2 == 0


def test_tiny_cases():
    g = ParityConjunctionGadget(1, 1)
    assert g.run_min_inf([], [(0, 0)]) % 2 == 0
    assert g.run_min_inf([], [(1, 0)]) % 2 == 1
    assert g.run_min_inf([], [(0, 1)]) % 2 == 1
    assert g.run_min_inf([], [(1, 1)]) % 2 == 1
    # alternating colours: both coordinates hit their minimum 0 infinitely often
    assert g.run_min_inf([], [(0, 1), (1, 0)]) % 2 == 0


def test_prefix_is_ignored():
    g = ParityConjunctionGadget(2, 2)
    for prefix in ([], [(1, 1)], [(1, 1), (2, 0), (0, 1)]):
        assert g.run_min_inf(prefix, [(0, 0)]) % 2 == 0
        assert g.run_min_inf(prefix, [(1, 2)]) % 2 == 1


@settings(max_examples=300, deadline=None)
@given(
    d1=st.integers(min_value=0, max_value=4),
    d2=st.integers(min_value=0, max_value=4),
    data=st.data(),
)
def test_gadget_recognizes_conjunction(d1, d2, data):
    g = ParityConjunctionGadget(d1, d2)
    pairs = st.tuples(
        st.integers(min_value=0, max_value=d1),
        st.integers(min_value=0, max_value=d2),
    )
    prefix = data.draw(st.lists(pairs, max_size=5))
    cycle = data.draw(st.lists(pairs, min_size=1, max_size=6))
    got = g.run_min_inf(prefix, cycle)
    assert (got % 2 == 0) == _both_even(cycle)


def test_random_soak():
    rng = random.Random(0)
    for _ in range(500):
        d1, d2 = rng.randint(0, 5), rng.randint(0, 5)
        g = ParityConjunctionGadget(d1, d2)
        cycle = [
            (rng.randint(0, d1), rng.randint(0, d2))
            for _ in range(rng.randint(1, 7))
        ]
        prefix = [
            (rng.randint(0, d1), rng.randint(0, d2))
            for _ in range(rng.randint(0, 4))
        ]
        got = g.run_min_inf(prefix, cycle)
        assert (got % 2 == 0) == _both_even(cycle), (d1, d2, prefix, cycle)
