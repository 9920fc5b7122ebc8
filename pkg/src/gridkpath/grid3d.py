"""Three-dimensional rectangular grids, handled by flattening.

The map ``F`` lays the ``o`` layers of an ``m x n x o`` grid side by side
along y, reversing every other layer, so that ``F`` is a bijection onto the
vertices of the planar grid ``R(m, n*o)`` and every planar edge comes from a
3D edge.  Cycles therefore transfer directly.  Paths transfer after
descending from ``t`` along z until the flattened distance to ``s`` fits the
remaining budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from . import cycles, paths
from .errors import NoSuchCycle, NoSuchPath, ParityMismatch, BelowShortest, SameVertex, VertexOutOfGrid
from .grid import CycleSeq, PathSeq, RectGrid, shortest_len, validate_path

Vertex3 = Tuple[int, int, int]


@dataclass(frozen=True)
class Grid3D:
    m: int
    n: int
    o: int

    def __post_init__(self):
        if min(self.m, self.n, self.o) < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.dims}")

    @property
    def dims(self) -> Tuple[int, int, int]:
        return (self.m, self.n, self.o)

    @property
    def size(self) -> int:
        return self.m * self.n * self.o

    def __len__(self) -> int:
        return self.size

    def __contains__(self, v) -> bool:
        return len(v) == 3 and all(1 <= c <= d for c, d in zip(v, self.dims))

    def __iter__(self) -> Iterator[Vertex3]:
        return iter(product(range(1, self.m + 1), range(1, self.n + 1), range(1, self.o + 1)))

    def require(self, *vs) -> None:
        for v in vs:
            if v not in self:
                raise VertexOutOfGrid(f"{v} is not a vertex of {self}")


def map_F(v: Sequence[int], n: int) -> Tuple[int, int]:
    x, y, z = v
    if z % 2:
        return (x, n * (z - 1) + y)
    return (x, n * z - y + 1)


def map_F_inv(w: Sequence[int], n: int) -> Vertex3:
    x, yy = w
    z = (yy - 1) // n + 1
    if z % 2:
        return (x, yy - n * (z - 1), z)
    return (x, n * z - yy + 1, z)


# --- axis relabelling ---------------------------------------------------------


@dataclass(frozen=True)
class _Frame:
    """Coordinates in a permuted and possibly reflected copy of the grid."""

    perm: Tuple[int, int, int]
    flip: Tuple[bool, bool, bool]
    dims: Tuple[int, int, int]  # original dimensions

    @property
    def local_dims(self) -> Tuple[int, int, int]:
        return tuple(self.dims[a] for a in self.perm)

    def to_local(self, v: Sequence[int]) -> Vertex3:
        out = []
        for axis, f in zip(self.perm, self.flip):
            c = v[axis]
            out.append(self.dims[axis] + 1 - c if f else c)
        return tuple(out)

    def to_global(self, v: Sequence[int]) -> Vertex3:
        out = [0, 0, 0]
        for c, axis, f in zip(v, self.perm, self.flip):
            out[axis] = self.dims[axis] + 1 - c if f else c
        return tuple(out)


def _frames(G: Grid3D) -> Iterator[_Frame]:
    # identity first, so the plain construction is preferred
    for perm in permutations(range(3)):
        for flip in product((False, True), repeat=3):
            yield _Frame(perm, flip, G.dims)


# --- cycles -----------------------------------------------------------------


def cycle_exists_3d(G: Grid3D, k: int) -> bool:
    wide = sum(1 for d in G.dims if d > 1)
    return wide >= 2 and k % 2 == 0 and 4 <= k <= G.size


def find_cycle_3d(G: Grid3D, k: int) -> CycleSeq:
    if not cycle_exists_3d(G, k):
        if sum(1 for d in G.dims if d > 1) < 2:
            raise NoSuchCycle("dimensions", f"{G.dims} has no cycle at all", dims=list(G.dims))
        if k % 2:
            raise NoSuchCycle("parity", f"cycle lengths are even, got k={k}", k=k)
        raise NoSuchCycle("range", f"need 4 <= k <= {G.size}, got k={k}", k=k, max=G.size)
    # put a non-trivial axis first and a non-trivial one among the other two
    for perm in permutations(range(3)):
        d = [G.dims[a] for a in perm]
        if d[0] > 1 and d[1] * d[2] > 1:
            break
    frame = _Frame(perm, (False, False, False), G.dims)
    m, n, o = frame.local_dims
    flat = cycles.find_cycle(RectGrid(m, n * o), k)
    return CycleSeq.canonical([frame.to_global(map_F_inv(w, n)) for w in flat])


# --- paths ------------------------------------------------------------------


def _descend(frame: _Frame, s: Vertex3, t: Vertex3, k: int) -> Optional[List[Vertex3]]:
    """Descent construction in one frame; ``None`` when it does not apply."""
    m, n, o = frame.local_dims
    ls, lt = frame.to_local(s), frame.to_local(t)
    if lt[2] < ls[2]:
        return None
    R = RectGrid(m, n * o)
    fs = map_F(ls, n)
    for j in range(lt[2] - ls[2] + 1):
        tj = (lt[0], lt[1], lt[2] - j)
        if tj == ls:
            return None
        ft = map_F(tj, n)
        budget = k - j
        if shortest_len(fs, ft) > budget:
            continue
        if not paths.path_exists(R, fs, ft, budget):
            continue
        flat = paths.find_path(R, fs, ft, budget)
        body = [map_F_inv(w, n) for w in flat]
        tail = [(lt[0], lt[1], lt[2] - i) for i in range(j - 1, -1, -1)]
        if set(tail) & set(body):
            continue
        return [frame.to_global(v) for v in body + tail]
    return None


def _why_no_path_3d(G: Grid3D, s, t, k) -> Optional[NoSuchPath]:
    if s == t:
        return SameVertex()
    l = shortest_len(s, t)
    if (k - l) % 2:
        return ParityMismatch(f"k={k} and the shortest length {l} differ in parity", k=k, l=l)
    if k < l:
        return BelowShortest(f"k={k} is below the shortest length {l}", k=k, l=l)
    if k > G.size:
        return NoSuchPath("range", f"k={k} exceeds the {G.size} vertices", k=k, l=l)
    return None


def find_path_3d(G: Grid3D, s: Sequence[int], t: Sequence[int], k: int) -> PathSeq:
    s, t = tuple(s), tuple(t)
    G.require(s, t)
    err = _why_no_path_3d(G, s, t, k)
    if err is not None:
        raise err
    for frame in _frames(G):
        got = _descend(frame, s, t, k)
        if got is not None:
            P = PathSeq(got)
            if not validate_path(P, G):
                raise AssertionError(f"descent produced an invalid path: {validate_path(P, G).violation}")
            return P
    raise NoSuchPath("range", f"no s-t path with {k} vertices", k=k, l=shortest_len(s, t))


def path_exists_3d(G: Grid3D, s: Sequence[int], t: Sequence[int], k: int) -> bool:
    try:
        find_path_3d(G, s, t, k)
    except NoSuchPath:
        return False
    return True
