import json

import pytest
from hypothesis import given, strategies as st

from gridkpath.errors import VertexOutOfGrid
from gridkpath.grid import (
    Color,
    CycleSeq,
    PathSeq,
    RectGrid,
    SolidGrid,
    color,
    edge_dir,
    EdgeDir,
    from_json,
    is_monotone,
    is_solid,
    monotone_shortest_path,
    shortest_len,
    signed_area2,
    validate_cycle,
    validate_path,
)
from gridkpath.cycles import longest_cycle

from walks import all_paths, rect


@pytest.mark.parametrize("v, expected", [((1, 1), Color.WHITE), ((1, 2), Color.BLACK), ((3, 3), Color.WHITE)])
def test_color(v, expected):
    assert color(v) == expected


def test_color_3d():
    assert color((1, 1, 1)) == Color.BLACK
    assert color((2, 2, 2)) == Color.WHITE


@pytest.mark.parametrize("s, t, expected", [((1, 1), (1, 1), 1), ((1, 1), (2, 2), 3), ((1, 1), (3, 3), 5)])
def test_shortest_len(s, t, expected):
    assert shortest_len(s, t) == expected


def test_rect_grid_membership_and_origin():
    R = RectGrid(3, 2, ox=5, oy=-1)
    assert (5, -1) in R and (7, 0) in R
    assert (8, 0) not in R and (5, 1) not in R
    assert len(list(R)) == R.size == 6
    with pytest.raises(VertexOutOfGrid):
        R.require((0, 0))
    with pytest.raises(ValueError):
        RectGrid(0, 3)


def test_edge_dir_opposites():
    assert edge_dir((1, 1), (1, 2)) is EdgeDir.UP
    assert EdgeDir.LEFT.opposite is EdgeDir.RIGHT


@pytest.mark.parametrize(
    "t, expected",
    [
        ((1, 1), [(1, 1)]),
        ((3, 1), [(1, 1), (2, 1), (3, 1)]),
        ((2, 2), [(1, 1), (2, 1), (2, 2)]),
    ],
)
def test_monotone_shortest_path_examples(t, expected):
    assert list(monotone_shortest_path(RectGrid(3, 3), (1, 1), t)) == expected


@given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
def test_monotone_shortest_path_is_monotone_and_shortest(sx, sy, tx, ty):
    R = RectGrid(9, 9)
    P = monotone_shortest_path(R, (sx, sy), (tx, ty))
    assert validate_path(P, R)
    assert is_monotone(P)
    assert len(P) == shortest_len((sx, sy), (tx, ty))


def test_is_monotone_examples():
    assert is_monotone([(1, 1), (2, 1), (2, 2)])
    assert not is_monotone([(1, 1), (2, 1), (2, 2), (1, 2)])
    assert is_monotone([(4, 4)])


def test_validate_examples():
    assert validate_cycle(longest_cycle(RectGrid(2, 3)), RectGrid(2, 3))
    bad = validate_path([(1, 1), (3, 1)])
    assert not bad and "non-unit" in bad.violation
    assert validate_cycle([(1, 1), (2, 1), (2, 2), (1, 2)], RectGrid(2, 2))


def test_validate_reports_first_violation():
    d = validate_path([(1, 1), (2, 1), (2, 2), (2, 1)])
    assert not d and d.index == 3 and "duplicate" in d.violation
    d = validate_path([(1, 1), (2, 1), (9, 9)], RectGrid(3, 3))
    assert d.index == 2 and "outside" in d.violation
    assert "closing" in validate_cycle([(1, 1), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3)]).violation
    assert "odd" in validate_cycle([(1, 1)] * 5).violation
    assert not validate_cycle([(1, 1), (2, 1)])
    assert not validate_path([])


def test_is_solid_examples():
    assert is_solid(SolidGrid(RectGrid(3, 3)))
    ring = SolidGrid(v for v in RectGrid(3, 3) if v != (2, 2))
    assert not is_solid(ring)
    assert is_solid(SolidGrid([]))


def test_cycle_canonical_form():
    ccw = [(1, 1), (2, 1), (2, 2), (1, 2)]
    C = CycleSeq.canonical(ccw[2:] + ccw[:2])
    assert C.vertices == ((1, 1), (1, 2), (2, 2), (2, 1))
    assert C.is_clockwise()
    assert signed_area2(C.vertices) < 0
    assert CycleSeq.canonical(C.vertices) == C
    assert C.has_edge((2, 1), (1, 1)) and not C.has_edge((1, 1), (2, 2))


def test_cycle_canonical_3d_is_idempotent():
    cube = [(1, 1, 1), (2, 1, 1), (2, 1, 2), (1, 1, 2)]
    C = CycleSeq.canonical(cube)
    assert C[0] == (1, 1, 1)
    assert CycleSeq.canonical(list(reversed(cube))) == C


def test_json_round_trip():
    P = PathSeq([(1, 1), (1, 2)])
    C = longest_cycle(RectGrid(2, 2))
    assert from_json(json.loads(json.dumps(P.to_json()))) == P
    assert from_json(C.to_json()) == C
    with pytest.raises(ValueError):
        from_json({"kind": "tree", "vertices": []})


_paths_3x3 = [p for p in all_paths(rect(3, 3))]


@given(st.sampled_from(_paths_3x3))
def test_path_parity_matches_endpoint_colours(p):
    # a walk alternates colours, so an even vertex count means different ends
    assert validate_path(p, RectGrid(3, 3))
    assert (len(p) % 2 == 0) == (color(p[0]) != color(p[-1]))


@given(st.sampled_from([p for p in _paths_3x3 if len(p) >= 3]), st.data())
def test_single_mutations_are_rejected(p, data):
    R = RectGrid(3, 3)
    i = data.draw(st.integers(1, len(p) - 1))
    kind = data.draw(st.sampled_from(["dup", "diag", "out"]))
    q = list(p)
    if kind == "dup":
        q[i] = q[i - 1]
    elif kind == "diag":
        q[i] = (q[i - 1][0] + 1, q[i - 1][1] + 1)
    else:
        q[i] = (q[i][0] + 10, q[i][1])
    assert not validate_path(q, R)
