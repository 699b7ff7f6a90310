import itertools
import random

import pytest

from wadgetree.games import (
    EVEN,
    ODD,
    GameArena,
    KERNEL_AVAILABLE,
    brute_force_solve,
    check_strategy,
    solve_parity_game,
    solve_parity_game_python,
)


def test_single_even_loop():
    a = GameArena(owner=[EVEN], priority=[0], succ=[[0]])
    assert solve_parity_game(a).winner == [EVEN]


def test_single_odd_loop():
    a = GameArena(owner=[EVEN], priority=[1], succ=[[0]])
    assert solve_parity_game(a).winner == [ODD]


def _enumerate_small_arenas(n, max_prio):
    """All arenas with n vertices, priorities <= max_prio, modest edge sets."""
    vertices = list(range(n))
    edge_choices = []
    for v in vertices:
        outs = []
        for k in (1, 2):
            outs.extend(itertools.combinations(vertices, k))
        edge_choices.append(outs)
    for owners in itertools.product((EVEN, ODD), repeat=n):
        for prios in itertools.product(range(max_prio + 1), repeat=n):
            yield owners, prios, edge_choices


def test_exhaustive_oracle_two_vertices():
    # all arenas with 2 vertices, priorities <= 2, up to 2 successors each
    count = 0
    for owners, prios, edge_choices in _enumerate_small_arenas(2, 2):
        for succs in itertools.product(*edge_choices):
            arena = GameArena(list(owners), list(prios), [list(s) for s in succs])
            got = solve_parity_game_python(arena)
            assert got.winner == brute_force_solve(arena)
            assert check_strategy(arena, got, EVEN)
            assert check_strategy(arena, got, ODD)
            count += 1
    assert count > 100


def test_random_three_vertex_arenas_match_oracle():
    rng = random.Random(0)
    for _ in range(400):
        n = 3
        owner = [rng.randrange(2) for _ in range(n)]
        prio = [rng.randrange(3) for _ in range(n)]
        succ = [
            sorted(rng.sample(range(n), rng.randint(1, n))) for _ in range(n)
        ]
        arena = GameArena(owner, prio, succ)
        sol = solve_parity_game_python(arena)
        assert sol.winner == brute_force_solve(arena)
        assert check_strategy(arena, sol, EVEN)
        assert check_strategy(arena, sol, ODD)


def test_random_larger_arenas_strategies_consistent():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(4, 40)
        owner = [rng.randrange(2) for _ in range(n)]
        prio = [rng.randrange(5) for _ in range(n)]
        succ = [sorted(rng.sample(range(n), rng.randint(1, min(4, n)))) for _ in range(n)]
        arena = GameArena(owner, prio, succ)
        sol = solve_parity_game_python(arena)
        assert check_strategy(arena, sol, EVEN)
        assert check_strategy(arena, sol, ODD)


@pytest.mark.skipif(not KERNEL_AVAILABLE, reason="compiled kernel not built")
def test_kernel_matches_pure_python():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 30)
        owner = [rng.randrange(2) for _ in range(n)]
        prio = [rng.randrange(6) for _ in range(n)]
        succ = [sorted(rng.sample(range(n), rng.randint(1, min(5, n)))) for _ in range(n)]
        arena = GameArena(owner, prio, succ)
        fast = solve_parity_game(arena)
        slow = solve_parity_game_python(arena)
        assert fast.winner == slow.winner
        assert fast.strategy == slow.strategy


def test_deterministic_output():
    rng = random.Random(3)
    n = 25
    owner = [rng.randrange(2) for _ in range(n)]
    prio = [rng.randrange(4) for _ in range(n)]
    succ = [sorted(rng.sample(range(n), rng.randint(1, 4))) for _ in range(n)]
    arena = GameArena(owner, prio, succ)
    first = solve_parity_game(arena)
    second = solve_parity_game(arena)
    assert first.winner == second.winner and first.strategy == second.strategy
