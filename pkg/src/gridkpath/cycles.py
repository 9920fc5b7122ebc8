"""Cycles of a prescribed length in rectangular and solid grid graphs.

The shrinking procedure works on a cycle stored as a circular list of its
corners (the vertices where it turns) together with a boolean occupancy
grid.  Finding a cave, testing it and contracting it then cost O(1) plus
the length of the cave's own segment, which is what keeps the whole
construction linear in ``k``.
"""

from __future__ import annotations

import math
from itertools import repeat
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetInvalid, EdgeNotInCycle, NoCycle, NoSuchCycle, NotHamiltonian, NotSolid
from .grid import CycleSeq, RectGrid, SolidGrid, is_solid, is_unit_step, validate_cycle

Point = Tuple[int, int]


class ShrinkBudget(int):
    """An even number of vertices to remove, at most ``|C| - 4``."""

    def __new__(cls, i: int, cycle_len: int):
        if i % 2 or i < 0 or i > cycle_len - 4:
            raise BudgetInvalid(f"budget {i} must be even with 0 <= i <= {cycle_len - 4}")
        return super().__new__(cls, i)


# --- longest cycles --------------------------------------------------------


def _compress(points: Sequence[Point]) -> List[Point]:
    """Drop repeated and collinear waypoints of a closed rectilinear polygon."""
    pts = []
    for p in points:
        if not pts or pts[-1] != p:
            pts.append(p)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed:
        changed = False
        out = []
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
                changed = True
                continue
            out.append(b)
        if changed:
            pts = out
    return pts


def _comb_rows(m: int, n: int, top_detours: bool) -> List[Point]:
    """Waypoints (0-based) of the row comb; ``n`` even, or odd with detours."""
    rows = n - 1 if top_detours else n
    pts = [(0, 0), (m - 1, 0)]
    for j in range(1, rows):
        if j % 2:
            if top_detours and j == rows - 1:
                pts.append((m - 1, j))
                for x in range(m - 3, -1, -2):
                    pts += [(x + 1, j), (x + 1, j + 1), (x, j + 1), (x, j)]
                continue
            pts += [(m - 1, j), (1, j)]
        else:
            pts += [(1, j), (m - 1, j)]
    pts.append((0, rows - 1))
    return pts


def longest_cycle_corners(R: RectGrid) -> List[Point]:
    """Corners, clockwise, of a longest cycle of ``R``.

    Even ``n`` (or ``m``): a comb whose teeth are the rows (columns), closed
    along the first column (row).  Odd by odd: the comb over the first
    ``n - 1`` rows with 2-vertex detours into the top row, which misses only
    the top-right corner.
    """
    m, n = R.m, R.n
    if m < 2 or n < 2:
        raise NoCycle("dimensions", f"R({m},{n}) has no cycle")
    if n % 2 == 0:
        pts = _comb_rows(m, n, False)
    elif m % 2 == 0:
        pts = [(y, x) for x, y in _comb_rows(n, m, False)]
    else:
        pts = _comb_rows(m, n, True)
    pts = _compress(pts)
    if _area2(pts) > 0:
        pts.reverse()
    return [(x + R.ox, y + R.oy) for x, y in pts]


def _area2(pts) -> int:
    return sum(
        pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
        for i in range(len(pts))
    )


def expand_corners(corners: Sequence[Point]) -> List[Point]:
    """All vertices of the closed rectilinear polygon with these corners."""
    out: List[Point] = []
    n = len(corners)
    for i in range(n):
        (x0, y0), (x1, y1) = corners[i], corners[(i + 1) % n]
        if y0 == y1:
            step = 1 if x1 > x0 else -1
            out.extend(zip(range(x0, x1, step), repeat(y0)))
        else:
            step = 1 if y1 > y0 else -1
            out.extend(zip(repeat(x0), range(y0, y1, step)))
    return out


def _canonical_from_corners(corners: Sequence[Point]) -> CycleSeq:
    """Expand a clockwise corner list into the canonical CycleSeq."""
    start = min(range(len(corners)), key=corners.__getitem__)
    rotated = list(corners[start:]) + list(corners[:start])
    return CycleSeq._trusted(expand_corners(rotated))


def _rotate_to_min(vs: List[Point]) -> CycleSeq:
    """Canonical form of a cycle already known to be clockwise."""
    j = vs.index(min(vs))
    return CycleSeq._trusted(vs[j:] + vs[:j])


def longest_cycle(R: RectGrid) -> CycleSeq:
    """A cycle of ``m*n`` vertices (even product) or ``m*n - 1`` (odd)."""
    return _canonical_from_corners(longest_cycle_corners(R))


def cycle_exists(R: RectGrid, k: int) -> bool:
    return R.m > 1 and R.n > 1 and k % 2 == 0 and 4 <= k <= R.m * R.n


def _why_no_cycle(R: RectGrid, k: int) -> NoSuchCycle:
    if R.m < 2 or R.n < 2:
        return NoSuchCycle("dimensions", f"R({R.m},{R.n}) has no cycle at all", m=R.m, n=R.n)
    if k % 2:
        return NoSuchCycle("parity", f"cycle lengths are even, got k={k}", k=k)
    return NoSuchCycle("range", f"need 4 <= k <= {R.m * R.n}, got k={k}", k=k, max=R.m * R.n)


def subgrid_for_k(R: RectGrid, k: int) -> RectGrid:
    """A corner subgrid of ``R`` with more than ``k`` (or all) vertices and
    size at most ``ceil(sqrt(k+1))**2``, still holding a ``k``-cycle."""
    if not cycle_exists(R, k):
        raise NoCycle(_why_no_cycle(R, k).reason, f"no {k}-cycle in R({R.m},{R.n})")
    side = math.isqrt(k)
    if side * side < k + 1:
        side += 1
    short, long_ = min(R.m, R.n), max(R.m, R.n)
    if short >= side:
        return RectGrid(side, side, R.ox, R.oy)
    span = min(long_, -(-(k + 1) // short))
    if R.m >= R.n:
        return RectGrid(span, short, R.ox, R.oy)
    return RectGrid(short, span, R.ox, R.oy)


# --- the shrinking engine ---------------------------------------------------


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


class _Ring:
    """Clockwise cycle as a doubly linked list of corner nodes."""

    def __init__(self, corners: Sequence[Point], occ: np.ndarray, origin: Point):
        self.x: List[int] = []
        self.y: List[int] = []
        self.nxt: List[int] = []
        self.prv: List[int] = []
        self.alive: List[bool] = []
        self.occ = occ
        self.bx, self.by = origin
        n = len(corners)
        for i, (x, y) in enumerate(corners):
            self._new(x, y)
        for i in range(n):
            self.nxt[i] = (i + 1) % n
            self.prv[i] = (i - 1) % n
        self.length = sum(self._run(i) for i in range(n))
        self.head = 0

    def _new(self, x: int, y: int) -> int:
        self.x.append(x)
        self.y.append(y)
        self.nxt.append(-1)
        self.prv.append(-1)
        self.alive.append(True)
        return len(self.x) - 1

    def pt(self, a: int) -> Point:
        return (self.x[a], self.y[a])

    def _run(self, a: int) -> int:
        b = self.nxt[a]
        return abs(self.x[b] - self.x[a]) + abs(self.y[b] - self.y[a])

    def dir_out(self, a: int) -> Point:
        b = self.nxt[a]
        return (_sign(self.x[b] - self.x[a]), _sign(self.y[b] - self.y[a]))

    def dir_in(self, a: int) -> Point:
        return self.dir_out(self.prv[a])

    def turn(self, a: int) -> int:
        (ax, ay), (bx, by) = self.dir_in(a), self.dir_out(a)
        return ax * by - ay * bx

    def link(self, a: int, b: int) -> None:
        self.nxt[a] = b
        self.prv[b] = a

    def kill(self, a: int) -> None:
        self.alive[a] = False
        if self.head == a:
            self.head = self.nxt[a]

    def drop_if_straight(self, a: int) -> int:
        """Remove ``a`` when it no longer turns; return a surviving nearby node."""
        if self.turn(a) == 0:
            p, n = self.prv[a], self.nxt[a]
            self.link(p, n)
            self.kill(a)
            return p
        return a

    def node_at(self, pt: Point, a: int, b: int) -> int:
        """Node for a point on the run ``a -> b``, splitting the run if needed."""
        if pt == self.pt(a):
            return a
        if pt == self.pt(b):
            return b
        c = self._new(*pt)
        self.link(a, c)
        self.link(c, b)
        return c

    def occ_line(self, p: Point, q: Point) -> np.ndarray:
        """Occupancy view of the closed segment ``p..q`` (axis parallel)."""
        x0, y0 = p[0] - self.bx, p[1] - self.by
        x1, y1 = q[0] - self.bx, q[1] - self.by
        if y0 == y1:
            lo, hi = min(x0, x1), max(x0, x1)
            return self.occ[lo:hi + 1, y0]
        lo, hi = min(y0, y1), max(y0, y1)
        return self.occ[x0, lo:hi + 1]

    def set_line(self, p: Point, q: Point, value: bool) -> None:
        self.occ_line(p, q)[...] = value

    def nodes(self, start: Optional[int] = None):
        a = self.head if start is None else start
        first = a
        while True:
            yield a
            a = self.nxt[a]
            if a == first:
                return

    def corners(self) -> List[Point]:
        return [self.pt(a) for a in self.nodes()]

    def expand_between(self, a_pt: Point, a: int, b_pt: Point) -> List[Point]:
        """Vertices from ``a_pt`` (on the run leaving node ``a``) forward to ``b_pt``."""
        out: List[Point] = []
        cur_pt, node = a_pt, a
        while True:
            nxt_node = self.nxt[node]
            end = self.pt(nxt_node)
            if _on_run(b_pt, cur_pt, end):
                out.extend(_run_points(cur_pt, b_pt))
                out.append(b_pt)
                return out
            out.extend(_run_points(cur_pt, end))
            cur_pt, node = end, nxt_node


def _on_run(v: Point, a: Point, b: Point) -> bool:
    """Is ``v`` on the closed axis-parallel segment ``a..b``?"""
    if a[0] == b[0] == v[0]:
        return min(a[1], b[1]) <= v[1] <= max(a[1], b[1])
    if a[1] == b[1] == v[1]:
        return min(a[0], b[0]) <= v[0] <= max(a[0], b[0])
    return False


def _run_points(a: Point, b: Point) -> List[Point]:
    """Points from ``a`` toward ``b``, excluding ``b``."""
    if a == b:
        return []
    if a[1] == b[1]:
        step = 1 if b[0] > a[0] else -1
        return list(zip(range(a[0], b[0], step), repeat(a[1])))
    step = 1 if b[1] > a[1] else -1
    return list(zip(repeat(a[0]), range(a[1], b[1], step)))


def _dist(a: Point, b: Point) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def _edge_on_run(t: Point, s: Point, a: Point, b: Point) -> bool:
    """Is the directed edge ``t -> s`` part of the run ``a -> b``?"""
    d = (_sign(b[0] - a[0]), _sign(b[1] - a[1]))
    return (s[0] - t[0], s[1] - t[1]) == d and _on_run(t, a, b) and _on_run(s, a, b)


TraceFn = Callable[[str, List[Point], Tuple[Point, Point]], None]


def _shrink_ring(ring: _Ring, e: Tuple[Point, Point], i: int, trace: Optional[TraceFn] = None) -> List[Point]:
    """Run the shrinking loop on ``ring`` and return the expanded cycle.

    ``e = (t, s)`` with ``s`` following ``t`` clockwise; the edge survives.
    Sub-cycle recursion is unrolled onto an explicit stack of outer
    fragments that are spliced back at the end.
    """
    t, s = e
    stack: List[Tuple[Point, Point, List[Point]]] = []

    def locate(pt: Point) -> int:
        # node whose outgoing run holds pt, pt excluded from the far end
        for a in ring.nodes():
            if _on_run(pt, ring.pt(a), ring.pt(ring.nxt[a])) and pt != ring.pt(ring.nxt[a]):
                return a
        raise EdgeNotInCycle(f"{pt} is not on the cycle")

    def first_corner_after(pt: Point) -> int:
        a = locate(pt)
        return a if ring.pt(a) == pt else ring.nxt[a]

    cur = first_corner_after(s)
    idle = 0
    while i > 0:
        if idle > 2 * len(ring.x) + 8:
            raise RuntimeError("no convex cave avoiding the marked edge; is the grid solid?")
        c1 = cur
        c2 = ring.nxt[c1]
        if ring.turn(c1) >= 0 or ring.turn(c2) >= 0:
            cur = c2
            idle += 1
            continue
        D = ring.dir_in(c1)
        d = ring.dir_out(c1)
        p1, p2 = ring.pt(c1), ring.pt(c2)
        p = (p1[0] - D[0], p1[1] - D[1])
        q = (p2[0] - D[0], p2[1] - D[1])
        if (t == p and s == p1) or (t == p2 and s == q) or _edge_on_run(t, s, p1, p2):
            cur = c2
            idle += 1
            continue
        idle = 0
        before = (i, ring.length)
        r = _dist(p1, p2)
        seg = ring.occ_line(p, q)[1:-1] if r > 1 else None
        if seg is None or not seg.any():
            # contract: U at c1..c2 becomes the straight p..q
            a_node, b_node = ring.prv[c1], ring.nxt[c2]
            ring.set_line(p1, p2, False)
            if r > 1:
                ring.set_line(p, q, True)
            pn = a_node if ring.pt(a_node) == p else None
            qn = b_node if ring.pt(b_node) == q else None
            if pn is None:
                pn = ring._new(*p)
                ring.link(a_node, pn)
            if qn is None:
                qn = ring._new(*q)
                ring.link(qn, b_node)
            ring.link(pn, qn)
            ring.kill(c1)
            ring.kill(c2)
            ring.length -= 2
            i -= 2
            keep = ring.drop_if_straight(qn)
            keep = ring.drop_if_straight(pn) if ring.alive[pn] else keep
            cur = ring.prv[ring.prv[keep]]
            event = "contract"
        else:
            line = ring.occ_line(p, q)[1:-1]
            if d[0] < 0 or d[1] < 0:
                line = line[::-1]
            k = int(np.argmax(line)) + 1
            v = (p[0] + d[0] * k, p[1] + d[1] * k)
            u = (v[0] + D[0], v[1] + D[1])
            # walk clockwise from u to v, noting whether e is passed
            len_uv = _dist(u, p2) + 1
            node = c2
            e_in_uv = False
            while True:
                nb = ring.nxt[node]
                a_pt, b_pt = ring.pt(node), ring.pt(nb)
                if _edge_on_run(t, s, a_pt, b_pt) and not (
                    _on_run(v, a_pt, b_pt) and _dist(a_pt, v) <= _dist(a_pt, t)
                ):
                    e_in_uv = True
                if _on_run(v, a_pt, b_pt) and v != a_pt:
                    len_uv += _dist(a_pt, v)
                    v_node = node
                    break
                len_uv += _run_len(ring, node)
                node = nb
            if not e_in_uv:
                x_len = len_uv
            else:
                x_len = ring.length - len_uv + 2
            un = ring.node_at(u, c1, c2)
            vn = ring.node_at(v, v_node, ring.nxt[v_node])
            if x_len - 2 <= i:
                if not e_in_uv:
                    _clear_between(ring, un, vn)
                    ring.link(un, vn)
                else:
                    _clear_between(ring, vn, un)
                    ring.link(vn, un)
                ring.length -= x_len - 2
                i -= x_len - 2
                keep = ring.drop_if_straight(vn)
                keep = ring.drop_if_straight(un) if ring.alive[un] else keep
                cur = ring.prv[ring.prv[keep]]
                event = "remove"
            else:
                # recurse on the sub-cycle X plus the chord, keeping the chord
                if not e_in_uv:
                    outer = ring.expand_between(v, vn, u)
                    _kill_between(ring, vn, un)
                    ring.link(vn, un)
                    stack.append((v, u, outer))
                    t, s = v, u
                else:
                    outer = ring.expand_between(u, un, v)
                    _kill_between(ring, un, vn)
                    ring.link(un, vn)
                    stack.append((u, v, outer))
                    t, s = u, v
                ring.length = x_len
                ring.head = un
                cur = first_corner_after(s)
                event = "recurse"
        assert i < before[0] or ring.length < before[1] or event == "recurse"
        if trace is not None:
            trace(event, _splice(expand_corners(ring.corners()), stack), e)
    ring.head = cur
    return _splice(expand_corners(ring.corners()), stack)


def _splice(cyc: List[Point], stack) -> List[Point]:
    """Put the outer fragments set aside by recursion back around ``cyc``."""
    for a, b, outer in reversed(stack):
        j = cyc.index(b)
        cyc = cyc[j:] + cyc[:j]
        # cyc now runs b ... a; the outer fragment runs a ... b
        cyc = cyc + outer[1:-1]
    return cyc


def _run_len(ring: _Ring, a: int) -> int:
    return ring._run(a)


def _clear_between(ring: _Ring, a: int, b: int) -> None:
    """Free the vertices strictly between nodes ``a`` and ``b`` (clockwise) and
    delete the nodes in between."""
    node = a
    while node != b:
        nb = ring.nxt[node]
        ring.set_line(ring.pt(node), ring.pt(nb), False)
        if node != a:
            ring.kill(node)
        node = nb
    ring.occ_line(ring.pt(a), ring.pt(a))[...] = True
    ring.occ_line(ring.pt(b), ring.pt(b))[...] = True


def _kill_between(ring: _Ring, a: int, b: int) -> None:
    node = ring.nxt[a]
    while node != b:
        nb = ring.nxt[node]
        ring.kill(node)
        node = nb


def _ring_for(vertices: Sequence[Point], margin: int = 1) -> _Ring:
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    bx, by = min(xs) - margin, min(ys) - margin
    occ = np.zeros((max(xs) - bx + 1 + margin, max(ys) - by + 1 + margin), dtype=bool)
    occ[np.array(xs) - bx, np.array(ys) - by] = True
    corners = _compress(list(vertices))
    return _Ring(corners, occ, (bx, by))


def shrink_cycle(C: CycleSeq, e: Tuple[Point, Point], i: int, trace: Optional[TraceFn] = None) -> CycleSeq:
    """Remove ``i`` vertices from ``C`` (a cycle of a solid grid) keeping edge ``e``.

    ``i`` must be even with ``0 <= i <= |C| - 4``.  The result is canonical.
    ``trace(event, vertices, e)`` runs after every step and sees the whole
    current cycle, including fragments set aside while recursing.
    """
    ShrinkBudget(i, len(C))
    vs = list(CycleSeq.canonical(C).vertices)
    u, v = tuple(e[0]), tuple(e[1])
    n = len(vs)
    try:
        j = vs.index(u)
    except ValueError:
        raise EdgeNotInCycle(f"{u} is not on the cycle") from None
    if vs[(j + 1) % n] == v:
        t, s = u, v
    elif vs[j - 1] == v:
        t, s = v, u
    else:
        raise EdgeNotInCycle(f"({u}, {v}) is not an edge of the cycle")
    if i == 0:
        return CycleSeq.canonical(vs)
    ring = _ring_for(vs)
    return _rotate_to_min(_shrink_ring(ring, (t, s), i, trace))


def find_cycle(R: RectGrid, k: int, trace: Optional[TraceFn] = None) -> CycleSeq:
    """A cycle with exactly ``k`` vertices inside ``R``, built in O(k)."""
    if not cycle_exists(R, k):
        raise _why_no_cycle(R, k)
    sub = subgrid_for_k(R, k)
    corners = longest_cycle_corners(sub)
    occ = np.ones((sub.m, sub.n), dtype=bool)
    if sub.m % 2 and sub.n % 2:
        occ[sub.m - 1, sub.n - 1] = False
    ring = _Ring(corners, occ, (sub.ox, sub.oy))
    budget = ring.length - k
    if budget == 0:
        return _canonical_from_corners(corners)
    start = min(range(len(corners)), key=corners.__getitem__)
    t = corners[start]
    nxt = corners[(start + 1) % len(corners)]
    s = (t[0] + _sign(nxt[0] - t[0]), t[1] + _sign(nxt[1] - t[1]))
    ring.head = start
    return _rotate_to_min(_shrink_ring(ring, (t, s), budget, trace))


def hamiltonian_check(G, H: CycleSeq) -> None:
    if len(H) != len(G) or set(H.vertices) != set(G):
        raise NotHamiltonian(f"cycle covers {len(set(H.vertices) & set(G))} of {len(G)} vertices")
    diag = validate_cycle(H, G)
    if not diag:
        raise NotHamiltonian(f"not a valid cycle: {diag.violation}")


def shrink_cycle_solid(G, H: CycleSeq, k: int, trace: Optional[TraceFn] = None) -> CycleSeq:
    """A ``k``-cycle of the solid grid ``G`` obtained by shrinking its
    Hamiltonian cycle ``H``."""
    if not is_solid(G):
        raise NotSolid("the grid has a hole")
    hamiltonian_check(G, H)
    if k % 2:
        raise NoSuchCycle("parity", f"cycle lengths are even, got k={k}", k=k)
    if not 4 <= k <= len(G):
        raise NoSuchCycle("range", f"need 4 <= k <= {len(G)}, got k={k}", k=k, max=len(G))
    canon = CycleSeq.canonical(H)
    e = (canon[0], canon[1])
    return shrink_cycle(canon, e, len(canon) - k, trace)


def staircase_solid_grid(heights: Sequence[int], ox: int = 1, oy: int = 1):
    """A staircase polyomino and a Hamiltonian cycle of it.

    ``heights`` are the column heights, non-increasing and even, with the
    first two equal.  The cycle climbs the first column and snakes back down
    through row pairs.
    """
    h = list(heights)
    if len(h) < 2 or h[0] != h[1] or any(v % 2 or v < 2 for v in h) or any(a < b for a, b in zip(h, h[1:])):
        raise ValueError("heights must be even, non-increasing, at least 2, with h[0] == h[1]")
    G = SolidGrid((ox + x, oy + y) for x in range(len(h)) for y in range(h[x]))
    top = h[0]
    cyc = [(ox, oy + y) for y in range(top)]
    for j in range(top // 2 - 1, -1, -1):
        width = sum(1 for v in h if v >= 2 * j + 2)
        hi, lo = oy + 2 * j + 1, oy + 2 * j
        cyc += [(ox + x, hi) for x in range(1, width)]
        cyc += [(ox + x, lo) for x in range(width - 1, 0, -1)]
    return G, CycleSeq.canonical(cyc)
