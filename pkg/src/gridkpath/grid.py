"""Core lattice types: vertices, rectangular and solid grids, paths and cycles.

Lengths are vertex counts throughout the package: a path of length ``k``
has ``k`` vertices and ``k - 1`` edges, a cycle of length ``k`` has ``k``
vertices and ``k`` edges.

Vertices are plain integer tuples, ``(x, y)`` in the plane and ``(x, y, z)``
for 3D grids.  The y axis grows upward, so a cycle is clockwise iff its
shoelace signed area is negative.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import VertexOutOfGrid

Vertex = Tuple[int, int]


class Color(str, enum.Enum):
    WHITE = "white"
    BLACK = "black"


def color(v: Sequence[int]) -> Color:
    """White iff the coordinate sum is even (works for 2D and 3D vertices)."""
    return Color.WHITE if sum(v) % 2 == 0 else Color.BLACK


class EdgeDir(enum.Enum):
    UP = (0, 1)
    DOWN = (0, -1)
    LEFT = (-1, 0)
    RIGHT = (1, 0)

    @property
    def opposite(self) -> "EdgeDir":
        dx, dy = self.value
        return EdgeDir((-dx, -dy))


def edge_dir(u: Vertex, v: Vertex) -> EdgeDir:
    return EdgeDir((v[0] - u[0], v[1] - u[1]))


def is_unit_step(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        return False
    return sum(abs(a - b) for a, b in zip(u, v)) == 1


@dataclass(frozen=True)
class RectGrid:
    """The rectangular grid graph on ``ox <= x < ox+m``, ``oy <= y < oy+n``."""

    m: int
    n: int
    ox: int = 1
    oy: int = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    @property
    def x_max(self) -> int:
        return self.ox + self.m - 1

    @property
    def y_max(self) -> int:
        return self.oy + self.n - 1

    def __contains__(self, v) -> bool:
        return (
            len(v) == 2
            and self.ox <= v[0] <= self.x_max
            and self.oy <= v[1] <= self.y_max
        )

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Vertex]:
        for x in range(self.ox, self.ox + self.m):
            for y in range(self.oy, self.oy + self.n):
                yield (x, y)

    def require(self, *vs: Vertex) -> None:
        for v in vs:
            if v not in self:
                raise VertexOutOfGrid(f"{v} is not a vertex of {self}")

    def neighbors(self, v: Vertex) -> Iterator[Vertex]:
        x, y = v
        for w in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if w in self:
                yield w

    def transpose(self) -> "RectGrid":
        return RectGrid(self.n, self.m, self.oy, self.ox)


@dataclass(frozen=True)
class SolidGrid:
    """An explicit finite vertex set, intended to have no holes."""

    vertices: frozenset

    def __init__(self, vertices: Iterable[Vertex]):
        object.__setattr__(self, "vertices", frozenset(tuple(v) for v in vertices))

    def __contains__(self, v) -> bool:
        return tuple(v) in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))

    @classmethod
    def from_rect(cls, R: RectGrid) -> "SolidGrid":
        return cls(R)


def is_solid(G) -> bool:
    """True iff the complement of ``G`` in the infinite lattice is connected.

    Flood fills the complement inside the bounding box inflated by one cell;
    the inflated frame stands in for the unbounded outside region.
    """
    verts = set(G)
    if not verts:
        return True
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    total_free = (x1 - x0 + 1) * (y1 - y0 + 1) - len(verts)
    seen = {(x0, y0)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for w in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if x0 <= w[0] <= x1 and y0 <= w[1] <= y1 and w not in verts and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == total_free


def signed_area2(vertices: Sequence[Vertex]) -> int:
    """Twice the shoelace signed area of the closed polygon through ``vertices``."""
    total = 0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


@dataclass(frozen=True)
class PathSeq:
    """An s-t path stored as its vertex sequence (first = s, last = t)."""

    vertices: tuple

    def __init__(self, vertices: Iterable[Sequence[int]]):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in vertices))

    @classmethod
    def _trusted(cls, vertices) -> "PathSeq":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vertices", tuple(vertices))
        return obj

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def s(self):
        return self.vertices[0]

    @property
    def t(self):
        return self.vertices[-1]

    def edges(self) -> Iterator[tuple]:
        vs = self.vertices
        return zip(vs, vs[1:])

    def reversed(self) -> "PathSeq":
        return PathSeq(self.vertices[::-1])

    def to_json(self) -> dict:
        return {"kind": "path", "vertices": [list(v) for v in self.vertices]}


@dataclass(frozen=True)
class CycleSeq:
    """A cycle stored as its cyclic vertex sequence.

    Use :meth:`canonical` to obtain the reproducible form: clockwise, starting
    at the lexicographically smallest vertex.  The plain constructor keeps the
    given order untouched.
    """

    vertices: tuple

    def __init__(self, vertices: Iterable[Sequence[int]]):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in vertices))

    @classmethod
    def _trusted(cls, vertices: list) -> "CycleSeq":
        # caller guarantees a list of int tuples already in canonical order
        obj = cls.__new__(cls)
        object.__setattr__(obj, "vertices", tuple(vertices))
        return obj

    @classmethod
    def canonical(cls, vertices: Sequence[Sequence[int]]) -> "CycleSeq":
        vs = [tuple(v) for v in vertices]
        if not vs:
            return cls(vs)
        if len(vs[0]) == 2 and signed_area2(vs) > 0:
            vs.reverse()
        start = min(range(len(vs)), key=vs.__getitem__)
        if len(vs[0]) != 2 and len(vs) > 2:
            # 3D cycles have no planar orientation; fix direction by the
            # smaller of the two neighbours of the minimum vertex instead.
            if vs[start - 1] < vs[(start + 1) % len(vs)]:
                vs.reverse()
                start = len(vs) - 1 - start
        return cls(vs[start:] + vs[:start])

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    def edges(self) -> Iterator[tuple]:
        vs = self.vertices
        return zip(vs, vs[1:] + vs[:1])

    def has_edge(self, u, v) -> bool:
        """True iff ``u``-``v`` is an edge of the cycle (either direction)."""
        u, v = tuple(u), tuple(v)
        n = len(self.vertices)
        try:
            i = self.vertices.index(u)
        except ValueError:
            return False
        return self.vertices[(i + 1) % n] == v or self.vertices[i - 1] == v

    def is_clockwise(self) -> bool:
        return signed_area2(self.vertices) < 0

    def to_json(self) -> dict:
        return {"kind": "cycle", "vertices": [list(v) for v in self.vertices]}


def from_json(obj: dict):
    kind = obj.get("kind")
    verts = obj.get("vertices")
    if kind not in ("path", "cycle") or not isinstance(verts, list):
        raise ValueError("expected {'kind': 'path'|'cycle', 'vertices': [...]}")
    if kind == "path":
        return PathSeq(verts)
    return CycleSeq(verts)


def shortest_len(s: Sequence[int], t: Sequence[int]) -> int:
    """Vertex count of a shortest s-t path (Manhattan distance + 1)."""
    return sum(abs(a - b) for a, b in zip(s, t)) + 1


def staircase(s: Vertex, t: Vertex, x_first: bool = True) -> list:
    """Monotone s-t vertex list; all x-steps first unless ``x_first`` is false."""
    (x, y), (tx, ty) = s, t
    sx = 1 if tx >= x else -1
    sy = 1 if ty >= y else -1
    xs = [(i, y) for i in range(x, tx + sx, sx)]
    if x_first:
        return xs + [(tx, j) for j in range(y + sy, ty + sy, sy)]
    ys = [(x, j) for j in range(y, ty + sy, sy)]
    return ys + [(i, ty) for i in range(x + sx, tx + sx, sx)]


def monotone_shortest_path(R: RectGrid, s: Vertex, t: Vertex) -> PathSeq:
    R.require(s, t)
    return PathSeq(staircase(tuple(s), tuple(t)))


def is_monotone(P) -> bool:
    seen = set()
    for u, v in zip(P, list(P)[1:]):
        step = tuple(b - a for a, b in zip(u, v))
        if tuple(-c for c in step) in seen:
            return False
        seen.add(step)
    return True


@dataclass(frozen=True)
class Diagnostics:
    ok: bool
    violation: Optional[str] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        return {"valid": self.ok, "violation": self.violation, "index": self.index}


_VALID = Diagnostics(True)


def _check_sequence(vs, grid, closed: bool) -> Diagnostics:
    if not vs:
        return Diagnostics(False, "empty sequence")
    dim = len(vs[0])
    seen = {}
    for i, v in enumerate(vs):
        if len(v) != dim:
            return Diagnostics(False, f"mixed dimensions at {v}", i)
        if grid is not None and v not in grid:
            return Diagnostics(False, f"vertex {v} outside grid", i)
        if v in seen:
            return Diagnostics(False, f"duplicate vertex {v}", i)
        seen[v] = i
        if i and not is_unit_step(vs[i - 1], v):
            return Diagnostics(False, f"non-unit step {vs[i - 1]} -> {v}", i)
    if closed and not is_unit_step(vs[-1], vs[0]):
        return Diagnostics(False, f"non-unit closing step {vs[-1]} -> {vs[0]}", len(vs) - 1)
    return _VALID


def validate_path(P, grid=None) -> Diagnostics:
    """Check containment, unit steps, simplicity and the colour/length parity."""
    vs = [tuple(v) for v in P]
    d = _check_sequence(vs, grid, closed=False)
    if not d:
        return d
    if (len(vs) % 2 == 0) != (color(vs[0]) != color(vs[-1])):
        return Diagnostics(False, "length parity contradicts endpoint colours")
    return _VALID


def validate_cycle(C, grid=None) -> Diagnostics:
    vs = [tuple(v) for v in C]
    if len(vs) < 4:
        return Diagnostics(False, f"cycle too short ({len(vs)} < 4)")
    if len(vs) % 2:
        return Diagnostics(False, f"odd cycle length {len(vs)}")
    return _check_sequence(vs, grid, closed=True)
