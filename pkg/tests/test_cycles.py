import pytest
from hypothesis import given, settings, strategies as st

from gridkpath.cycles import (
    ShrinkBudget,
    cycle_exists,
    find_cycle,
    longest_cycle,
    shrink_cycle,
    shrink_cycle_solid,
    staircase_solid_grid,
    subgrid_for_k,
)
from gridkpath.errors import BudgetInvalid, EdgeNotInCycle, NoCycle, NoSuchCycle, NotHamiltonian, NotSolid
from gridkpath.grid import CycleSeq, RectGrid, SolidGrid, is_solid, validate_cycle
from gridkpath.oracle import oracle_exists_cycle, oracle_longest_cycle_len

from walks import interior_points


def test_longest_cycle_examples():
    assert len(longest_cycle(RectGrid(2, 2))) == 4
    C = longest_cycle(RectGrid(3, 3))
    assert len(C) == 8 and validate_cycle(C, RectGrid(3, 3))
    with pytest.raises(NoCycle):
        longest_cycle(RectGrid(1, 5))


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3), (3, 4), (4, 3), (3, 5), (5, 3), (4, 4)])
def test_longest_cycle_matches_oracle(m, n):
    R = RectGrid(m, n)
    C = longest_cycle(R)
    assert validate_cycle(C, R)
    assert len(C) == oracle_longest_cycle_len(R)


@given(st.integers(2, 60), st.integers(2, 60), st.integers(-5, 5), st.integers(-5, 5))
def test_longest_cycle_is_canonical(m, n, ox, oy):
    R = RectGrid(m, n, ox, oy)
    C = longest_cycle(R)
    assert validate_cycle(C, R)
    assert len(C) == m * n - (m * n) % 2
    assert C.is_clockwise() and C[0] == min(C.vertices)


def test_cycle_exists_examples():
    assert cycle_exists(RectGrid(4, 5), 14)
    assert not cycle_exists(RectGrid(4, 5), 15)
    assert not cycle_exists(RectGrid(3, 3), 9)
    assert not cycle_exists(RectGrid(1, 9), 4)


def test_shrink_budget():
    assert ShrinkBudget(4, 8) == 4
    for bad in (3, -2, 6):
        with pytest.raises(BudgetInvalid):
            ShrinkBudget(bad, 8)


def test_shrink_zero_budget_is_identity():
    C = longest_cycle(RectGrid(4, 4))
    assert shrink_cycle(C, (C[0], C[1]), 0) == C


def test_shrink_16_to_12_keeps_edge():
    R = RectGrid(4, 4)
    C = longest_cycle(R)
    e = (C[0], C[1])
    D = shrink_cycle(C, e, 4)
    assert len(D) == 12 and validate_cycle(D, R) and D.has_edge(*e)
    assert oracle_exists_cycle(R, 12)


def test_shrink_errors():
    C = longest_cycle(RectGrid(2, 4))
    with pytest.raises(BudgetInvalid):
        shrink_cycle(C, (C[0], C[1]), 6)
    with pytest.raises(EdgeNotInCycle):
        shrink_cycle(C, ((1, 1), (2, 2)), 2)
    with pytest.raises(EdgeNotInCycle):
        shrink_cycle(C, ((9, 9), (9, 8)), 2)


@pytest.mark.parametrize(
    "R, k, dims",
    [
        (RectGrid(100, 100), 8, (3, 3)),
        (RectGrid(100, 2), 8, (5, 2)),
        (RectGrid(2, 100), 8, (2, 5)),
        (RectGrid(3, 3), 8, (3, 3)),
    ],
)
def test_subgrid_for_k(R, k, dims):
    sub = subgrid_for_k(R, k)
    assert (sub.m, sub.n) == dims
    assert (sub.ox, sub.oy) == (R.ox, R.oy)
    assert all(v in R for v in sub)


@given(st.integers(2, 300), st.integers(2, 300), st.data())
def test_subgrid_size_bounds(m, n, data):
    R = RectGrid(m, n)
    k = data.draw(st.integers(2, m * n // 2)) * 2
    sub = subgrid_for_k(R, k)
    assert sub.size > k or sub == R
    assert sub.size <= k + 2 * (k + 1) ** 0.5 + 3 or min(m, n) < (k + 1) ** 0.5
    assert sub.x_max <= R.x_max and sub.y_max <= R.y_max
    assert len(longest_cycle(sub)) >= k


def test_subgrid_rejects_impossible_k():
    with pytest.raises(NoCycle):
        subgrid_for_k(RectGrid(3, 3), 10)


def test_find_cycle_examples():
    C = find_cycle(RectGrid(2, 2), 4)
    assert C.vertices == ((1, 1), (1, 2), (2, 2), (2, 1))
    C = find_cycle(RectGrid(6, 6), 10)
    assert len(C) == 10 and validate_cycle(C, RectGrid(6, 6))
    with pytest.raises(NoSuchCycle) as err:
        find_cycle(RectGrid(5, 3), 16)
    assert err.value.reason == "range"
    with pytest.raises(NoSuchCycle) as err:
        find_cycle(RectGrid(5, 3), 7)
    assert err.value.reason == "parity"
    with pytest.raises(NoSuchCycle) as err:
        find_cycle(RectGrid(1, 8), 4)
    assert err.value.reason == "dimensions"


def test_find_cycle_is_deterministic():
    R = RectGrid(50, 40)
    assert find_cycle(R, 600) == find_cycle(R, 600)


@settings(max_examples=80)
@given(st.integers(2, 80), st.integers(2, 80), st.data())
def test_find_cycle_inside_subgrid(m, n, data):
    R = RectGrid(m, n, 3, -2)
    k = 2 * data.draw(st.integers(2, m * n // 2))
    C = find_cycle(R, k)
    sub = subgrid_for_k(R, k)
    assert len(C) == k
    assert validate_cycle(C, sub)


def _cycles_with_edge(draw_m, draw_n, data):
    R = RectGrid(draw_m, draw_n)
    C = longest_cycle(R)
    j = data.draw(st.integers(0, len(C) - 1))
    k = 2 * data.draw(st.integers(2, len(C) // 2))
    return R, C, (C[j], C[j + 1]), k


@settings(max_examples=150)
@given(st.integers(2, 12), st.integers(2, 12), st.data())
def test_shrink_invariants(m, n, data):
    R, C, e, k = _cycles_with_edge(m, n, data)
    events = []
    D = shrink_cycle(C, e, len(C) - k, trace=lambda ev, vs, edge: events.append((ev, list(vs), edge)))
    assert len(D) == k and validate_cycle(D, R) and D.has_edge(*e)
    area = interior_points(list(C.vertices))
    prev_len = len(C)
    for ev, vs, edge in events:
        assert validate_cycle(vs, R)
        assert CycleSeq(vs).has_edge(*edge)
        if ev == "contract":
            assert len(vs) == prev_len - 2
        inner = interior_points(vs)
        assert inner <= area
        area = inner
        prev_len = len(vs)


@settings(max_examples=60)
@given(st.integers(2, 9), st.integers(2, 9), st.data())
def test_shrink_on_solid_grids_cut_from_shrunk_cycles(m, n, data):
    # a shrunk cycle whose vertex set is hole-free is itself a Hamiltonian
    # cycle of a solid grid, often with deep pockets that force recursion
    R, C, e, k = _cycles_with_edge(m, n, data)
    D = shrink_cycle(C, e, len(C) - k)
    G = SolidGrid(D.vertices)
    if not is_solid(G) or len(D) == 4:
        return
    j = data.draw(st.integers(0, len(D) - 1))
    f = (D[j], D[j + 1])
    k2 = 2 * data.draw(st.integers(2, len(D) // 2))
    E = shrink_cycle(D, f, len(D) - k2)
    assert len(E) == k2 and validate_cycle(E, G) and E.has_edge(*f)


def test_recursion_branch_is_exercised():
    seen = set()
    for m in range(3, 9):
        for n in range(3, 9):
            C = longest_cycle(RectGrid(m, n))
            for j in range(0, len(C), 3):
                shrink_cycle(C, (C[j], C[j + 1]), len(C) - 6, trace=lambda ev, vs, e: seen.add(ev))
    assert seen == {"contract", "remove", "recurse"}


def test_solid_examples():
    R = RectGrid(4, 4)
    G = SolidGrid(R)
    H = longest_cycle(R)
    C = shrink_cycle_solid(G, H, 8)
    assert len(C) == 8 and validate_cycle(C, G)
    with pytest.raises(NoSuchCycle) as err:
        shrink_cycle_solid(G, H, 7)
    assert err.value.reason == "parity"
    with pytest.raises(NoSuchCycle):
        shrink_cycle_solid(G, H, 18)


def test_solid_rejects_holes_and_non_hamiltonian_cycles():
    ring = SolidGrid(v for v in RectGrid(3, 3) if v != (2, 2))
    with pytest.raises(NotSolid):
        shrink_cycle_solid(ring, longest_cycle(RectGrid(3, 3)), 4)
    with pytest.raises(NotHamiltonian):
        shrink_cycle_solid(SolidGrid(RectGrid(4, 4)), longest_cycle(RectGrid(2, 2)), 4)


@st.composite
def staircases(draw, max_cols=10, max_half=6):
    cols = draw(st.integers(2, max_cols))
    hs = sorted((2 * draw(st.integers(1, max_half)) for _ in range(cols)), reverse=True)
    hs[1] = hs[0]
    return hs


@settings(max_examples=40)
@given(staircases(), st.data())
def test_staircase_generator_and_shrink(hs, data):
    G, H = staircase_solid_grid(hs)
    assert is_solid(G) and validate_cycle(H, G) and len(H) == len(G) == sum(hs)
    k = 2 * data.draw(st.integers(2, len(G) // 2))
    C = shrink_cycle_solid(G, H, k)
    assert len(C) == k and validate_cycle(C, G) and C.has_edge(H[0], H[1])


def test_staircase_generator_rejects_bad_heights():
    for hs in ([4], [4, 2], [3, 3], [2, 4, 4], [4, 4, 0]):
        with pytest.raises(ValueError):
            staircase_solid_grid(hs)


def test_large_cycle():
    C = find_cycle(RectGrid(10**6, 10**6), 10**5)
    assert len(C) == 10**5
    assert len(set(C.vertices)) == 10**5
