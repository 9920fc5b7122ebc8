import pytest

from gridkpath.errors import BoundExceeded
from gridkpath.grid import RectGrid
from gridkpath.oracle import (
    instance_bound,
    oracle_exists_cycle,
    oracle_exists_path,
    oracle_length_table,
    oracle_longest_cycle_len,
    oracle_longest_path_len,
)

from walks import all_cycles, all_paths, rect


def test_examples():
    assert oracle_exists_cycle(RectGrid(2, 2), 4)
    assert not oracle_exists_cycle(RectGrid(3, 3), 9)
    assert oracle_exists_cycle(RectGrid(2, 3), 6)
    assert oracle_exists_path(RectGrid(2, 2), (1, 1), (2, 2), 3)
    assert oracle_longest_path_len(RectGrid(2, 2), (1, 1), (2, 2)) == 3
    assert oracle_longest_path_len(RectGrid(3, 3), (1, 1), (3, 3)) == 9
    assert oracle_longest_path_len(RectGrid(3, 3), (1, 1), (2, 1)) == 8


def test_bound_and_env_override(monkeypatch):
    with pytest.raises(BoundExceeded):
        oracle_exists_cycle(RectGrid(5, 5), 4)
    monkeypatch.setenv("GRIDKPATH_ORACLE_BOUND", "30")
    assert instance_bound() == 30
    assert oracle_exists_cycle(RectGrid(5, 5), 4)
    assert oracle_exists_cycle(RectGrid(5, 5), 4, bound=25)


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (3, 4), (2, 6), (4, 3)])
def test_cycle_search_matches_enumeration(m, n):
    lengths = {len(c) for c in all_cycles(rect(m, n))}
    for k in range(0, m * n + 2):
        assert oracle_exists_cycle(rect(m, n), k) == (k in lengths)


@pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (2, 5), (3, 4)])
def test_path_search_matches_enumeration(m, n):
    seen = {}
    for p in all_paths(rect(m, n)):
        seen.setdefault((p[0], p[-1]), set()).add(len(p))
    table = oracle_length_table(frozenset(rect(m, n)))
    for s in rect(m, n):
        for t in rect(m, n):
            assert table[s][t] == frozenset(seen.get((s, t), set()))
    for (s, t), lengths in seen.items():
        for k in range(1, m * n + 1):
            assert oracle_exists_path(rect(m, n), s, t, k) == (k in lengths)


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 6), (4, 3)])
def test_pruning_never_changes_answers(m, n):
    G = rect(m, n)
    for k in range(0, m * n + 2):
        assert oracle_exists_cycle(G, k, prune=True) == oracle_exists_cycle(G, k, prune=False)
    for s in G:
        for t in G:
            for k in range(1, m * n + 1):
                assert oracle_exists_path(G, s, t, k, prune=True) == oracle_exists_path(G, s, t, k, prune=False)


def test_order_independent():
    G = rect(3, 4)
    assert oracle_longest_cycle_len(G) == oracle_longest_cycle_len(list(reversed(G))) == 12
    assert oracle_longest_path_len(G, (1, 1), (3, 4)) == oracle_longest_path_len(sorted(G, key=lambda v: -v[1]), (1, 1), (3, 4))


def test_three_dimensional_vertex_sets():
    cube = [(x, y, z) for x in (1, 2) for y in (1, 2) for z in (1, 2)]
    assert oracle_exists_cycle(cube, 8) and oracle_exists_cycle(cube, 6)
    assert not oracle_exists_cycle(cube, 7)
    assert oracle_longest_path_len(cube, (1, 1, 1), (2, 2, 2)) == 8


def test_degenerate_path_queries():
    assert oracle_exists_path(rect(2, 2), (1, 1), (1, 1), 1)
    assert not oracle_exists_path(rect(2, 2), (1, 1), (9, 9), 2)
    assert not oracle_exists_path(rect(2, 2), (1, 1), (2, 1), 5)
