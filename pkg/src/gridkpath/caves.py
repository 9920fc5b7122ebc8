"""Caves: the U-turns of a path or cycle, and their contraction.

A cave is a minimal sub-path whose first and last edges point in opposite
directions.  On a lattice path this is always a U shape: an edge in some
direction ``D``, a straight run of ``r >= 1`` edges perpendicular to it, and
an edge in direction ``-D``.  Its ends ``p`` and ``q`` lie on a common grid
line at distance ``r`` and the ``r - 1`` lattice points strictly between
them are the cave's *inside*.  Contracting replaces the U by the straight
segment ``p..q``, which shortens the carrier by exactly two vertices.

Caves are described by indices into the carrier; every operation returns a
fresh carrier, so a cave must be recomputed after each contraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .errors import NotContractible
from .grid import CycleSeq, PathSeq, signed_area2


@dataclass(frozen=True)
class Cave:
    carrier_kind: str  # "path" or "cycle"
    start: int  # index of p
    end: int  # index of q
    p: tuple
    q: tuple
    inside: tuple
    out_dir: tuple  # direction of the first edge, from p away from the segment

    @property
    def depth(self) -> int:
        return len(self.inside)

    @property
    def run_dir(self) -> tuple:
        dx, dy = self.q[0] - self.p[0], self.q[1] - self.p[1]
        r = abs(dx) + abs(dy)
        return (dx // r, dy // r)

    def vertices(self, carrier) -> list:
        """The cave's own sub-path of ``carrier``, from ``p`` to ``q``."""
        vs = carrier.vertices
        if self.start <= self.end:
            return list(vs[self.start:self.end + 1])
        return list(vs[self.start:]) + list(vs[:self.end + 1])

    def edge_count(self, n: int) -> int:
        return (self.end - self.start) % n if self.carrier_kind == "cycle" else self.end - self.start


def _step(a, b) -> tuple:
    return (b[0] - a[0], b[1] - a[1])


def _cross(d1, d2) -> int:
    return d1[0] * d2[1] - d1[1] * d2[0]


def segment_between(p, q) -> tuple:
    dx, dy = q[0] - p[0], q[1] - p[1]
    r = abs(dx) + abs(dy)
    ux, uy = dx // r, dy // r
    return tuple((p[0] + ux * i, p[1] + uy * i) for i in range(1, r))


def _corner_turns(vs: Sequence, closed: bool):
    """(index, turn sign) for every vertex where the carrier changes direction."""
    n = len(vs)
    if closed:
        idx = range(n)
    else:
        idx = range(1, n - 1)
    out = []
    for i in idx:
        d_in = _step(vs[i - 1], vs[i])
        d_out = _step(vs[i], vs[(i + 1) % n])
        c = _cross(d_in, d_out)
        if c:
            out.append((i, c))
    return out


def _make_cave(vs, kind: str, i1: int, i2: int) -> Cave:
    n = len(vs)
    start, end = (i1 - 1) % n, (i2 + 1) % n
    p, q = vs[start], vs[end]
    a = vs[i1]
    return Cave(kind, start, end, p, q, segment_between(p, q), _step(p, a))


def iter_caves(carrier, from_index: int = 0) -> Iterator[Cave]:
    """Caves in carrier order, beginning with the first whose ``p`` index is
    at or after ``from_index`` (cycles wrap around once)."""
    vs = carrier.vertices
    closed = isinstance(carrier, CycleSeq)
    kind = "cycle" if closed else "path"
    corners = _corner_turns(vs, closed)
    pairs = []
    if closed:
        for j in range(len(corners)):
            (i1, c1), (i2, c2) = corners[j], corners[(j + 1) % len(corners)]
            if c1 == c2 and len(corners) > 1:
                pairs.append((i1, i2))
    else:
        for (i1, c1), (i2, c2) in zip(corners, corners[1:]):
            if c1 == c2:
                pairs.append((i1, i2))
    n = len(vs)
    if closed:
        pairs.sort(key=lambda pr: ((pr[0] - 1 - from_index) % n))
        for i1, i2 in pairs:
            yield _make_cave(vs, kind, i1, i2)
    else:
        for i1, i2 in pairs:
            if i1 - 1 >= from_index:
                yield _make_cave(vs, kind, i1, i2)


def next_cave(carrier, from_index: int = 0) -> Optional[Cave]:
    return next(iter_caves(carrier, from_index), None)


def is_contractible(c: Cave, carrier) -> bool:
    occupied = set(carrier.vertices)
    return not any(v in occupied for v in c.inside)


def contract(carrier, c: Cave, check: bool = True):
    """Replace the cave's U by the straight segment between ``p`` and ``q``."""
    if check and not is_contractible(c, carrier):
        raise NotContractible(f"cave {c.p}->{c.q} has an inside vertex on the carrier")
    vs = list(carrier.vertices)
    if isinstance(carrier, PathSeq):
        return PathSeq(vs[: c.start + 1] + list(c.inside) + vs[c.end:])
    n = len(vs)
    rot = vs[c.start:] + vs[: c.start]
    span = (c.end - c.start) % n
    return CycleSeq(rot[:1] + list(c.inside) + rot[span:])


def orientation(C: CycleSeq) -> int:
    """-1 for clockwise, +1 for counter-clockwise."""
    return -1 if signed_area2(C.vertices) < 0 else 1


def is_convex(c: Cave, C: CycleSeq, orient: Optional[int] = None) -> bool:
    """True iff the cave's inside lies within the closed region of ``C``.

    The strip between the U and its segment contains no lattice point and no
    edge of ``C``, so the segment is inside exactly when the U turns toward
    the interior, i.e. both turns are right turns on a clockwise cycle.
    """
    if orient is None:
        orient = orientation(C)
    turn = _cross(c.out_dir, c.run_dir)
    # p -> a is out_dir, then the run; a right turn has negative cross
    return turn * orient > 0


def contains_edge(c: Cave, carrier, u, v) -> bool:
    u, v = tuple(u), tuple(v)
    vs = carrier.vertices
    n = len(vs)
    for k in range(c.edge_count(n)):
        a, b = vs[(c.start + k) % n], vs[(c.start + k + 1) % n]
        if (a, b) == (u, v) or (a, b) == (v, u):
            return True
    return False


def find_convex_contractible_cave(C: CycleSeq, start: int = 0, avoid=None, contractible_only: bool = False) -> Optional[Cave]:
    """Scan forward from ``start`` for a convex cave not containing ``avoid``.

    By default this returns the first such cave whether or not it is
    contractible, which is what the shrinking loop needs.  With
    ``contractible_only`` it keeps scanning until a contractible one turns up;
    on cycles of a solid grid with more than four vertices one always exists.
    """
    orient = orientation(C)
    occupied = set(C.vertices)
    for c in iter_caves(C, start):
        if not is_convex(c, C, orient):
            continue
        if avoid is not None and contains_edge(c, C, *avoid):
            continue
        if not contractible_only or not any(v in occupied for v in c.inside):
            return c
    return None
