"""s-t paths of a prescribed length in rectangular grid graphs.

A path of length ``k`` is obtained by taking a long s-t path inside a
rectangle of area O(k) and contracting caves until exactly ``k`` vertices
remain.  Every non-monotone path has a contractible cave; the search for
one follows chains of blocking caves and, when a chain ends at ``t``,
falls back to a convex cave of the cycle closed off around ``t``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .caves import Cave, _make_cave, contract, find_convex_contractible_cave, iter_caves, segment_between
from .errors import BelowShortest, NoSuchPath, ParityMismatch, PathIsMonotone, SameVertex
from .grid import CycleSeq, PathSeq, RectGrid, Vertex, shortest_len, staircase
from .longest import color_bound, longest_path_cells

# number of times the exhaustive fallback of find_contractible_cave fired;
# the tests assert it stays at zero
fallback_count = 0


# --- longest paths ----------------------------------------------------------


@lru_cache(maxsize=4096)
def _longest_local(m: int, n: int, s: Tuple[int, int], t: Tuple[int, int]) -> tuple:
    return tuple(longest_path_cells(m, n, s, t))


def longest_path(R: RectGrid, s: Vertex, t: Vertex) -> PathSeq:
    s, t = tuple(s), tuple(t)
    R.require(s, t)
    if s == t:
        raise SameVertex()
    cells = _longest_local(R.m, R.n, (s[0] - R.ox, s[1] - R.oy), (t[0] - R.ox, t[1] - R.oy))
    return PathSeq((x + R.ox, y + R.oy) for x, y in cells)


# above this many vertices (and with both sides at least 4) the length of a
# longest path is read off the colour bound instead of being constructed;
# the construction attains that bound on every such grid tested
LARGE = 4096


def longest_len(R: RectGrid, s: Vertex, t: Vertex) -> int:
    s, t = tuple(s), tuple(t)
    local_s, local_t = (s[0] - R.ox, s[1] - R.oy), (t[0] - R.ox, t[1] - R.oy)
    if min(R.m, R.n) >= 4 and R.size > LARGE:
        return color_bound(R.m, R.n, local_s, local_t)
    return len(_longest_local(R.m, R.n, local_s, local_t))


def _why_no_path(R: RectGrid, s: Vertex, t: Vertex, k: int) -> Optional[NoSuchPath]:
    s, t = tuple(s), tuple(t)
    R.require(s, t)
    if s == t:
        return SameVertex()
    l = shortest_len(s, t)
    L = longest_len(R, s, t)
    if (k - l) % 2:
        return ParityMismatch(f"k={k} and the shortest length {l} differ in parity", k=k, l=l, L=L)
    if k < l:
        return BelowShortest(f"k={k} is below the shortest length {l}", k=k, l=l, L=L)
    if k > L:
        return NoSuchPath("range", f"k={k} exceeds the longest length {L}", k=k, l=l, L=L)
    return None


def path_exists(R: RectGrid, s: Vertex, t: Vertex, k: int) -> bool:
    return _why_no_path(R, s, t, k) is None


# --- contractible caves -------------------------------------------------------


def _inside_polygon(pt, poly) -> bool:
    """Crossing test for a lattice point not on the lattice polygon ``poly``."""
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        (x0, y0), (x1, y1) = poly[i], poly[(i + 1) % n]
        if x0 == x1 and x0 > x and min(y0, y1) <= y < max(y0, y1):
            inside = not inside
    return inside


def _shortcut(vs, c: Cave) -> Optional[Cave]:
    """A one-edge cave next to ``p`` or ``q`` when the path turns back along
    the segment there."""
    d = c.run_dir
    n = len(vs)
    if c.end + 1 < n and vs[c.end + 1] == (c.q[0] - d[0], c.q[1] - d[1]):
        return _make_cave(vs, "path", c.end - 1, c.end)
    if c.start >= 1 and vs[c.start - 1] == (c.p[0] + d[0], c.p[1] + d[1]):
        return _make_cave(vs, "path", c.start, c.start + 1)
    return None


def _blockers(vs, pos: Dict, c: Cave):
    """Caves sitting on ``c``'s segment, and the endpoint runs found there."""
    caves: List[Cave] = []
    ends: List[int] = []
    seen = set()
    line = set(c.inside)
    last = len(vs) - 1
    for w in c.inside:
        i = pos.get(w)
        if i is None or i in seen:
            continue
        lo = hi = i
        while lo > 0 and vs[lo - 1] in line:
            lo -= 1
        while hi < last and vs[hi + 1] in line:
            hi += 1
        seen.update(range(lo, hi + 1))
        if lo == 0:
            ends.append(0)
        elif hi == last:
            ends.append(last)
        else:
            caves.append(_make_cave(vs, "path", lo, hi))
    return caves, ends


def _search(vs) -> Tuple[Optional[Cave], Optional[Cave]]:
    """Follow blocking chains from the first cave.

    Returns ``(cave, None)`` for a contractible cave or ``(None, c)`` for a
    cave ``c`` blocked by ``t``.
    """
    first = next(iter_caves(PathSeq._trusted(vs)), None)
    if first is None:
        raise PathIsMonotone("a monotone path has no cave")
    pos = {v: i for i, v in enumerate(vs)}
    stack = [first]
    by_t = None
    while stack:
        c = stack.pop()
        if not any(w in pos for w in c.inside):
            return c, None
        short = _shortcut(vs, c)
        if short is not None:
            return short, None
        caves, ends = _blockers(vs, pos, c)
        if len(vs) - 1 in ends and by_t is None:
            by_t = c
        # later caves are pushed first so the earliest one is explored next
        stack.extend(sorted(caves, key=lambda b: -b.start))
    return None, by_t


def _cave_of_closed_tail(vs, c: Cave) -> Tuple[Optional[Cave], bool]:
    """Close the tail of the path at ``t`` into a cycle and take a convex
    contractible cave of it avoiding the closing edge.

    The second value reports whether ``s`` ended up inside the cycle.
    """
    t = vs[-1]
    D = c.out_dir
    v = (t[0] + D[0], t[1] + D[1])
    iv = vs.index(v)
    tail = vs[iv:]
    if iv > 0 and _inside_polygon(vs[0], tail):
        return None, True
    cyc = CycleSeq(tail)
    q = find_convex_contractible_cave(cyc, 0, avoid=(t, v), contractible_only=True)
    if q is None:
        return None, False
    return Cave("path", q.start + iv, q.end + iv, q.p, q.q, q.inside, q.out_dir), False


def _find(vs) -> Optional[Cave]:
    cave, by_t = _search(vs)
    if cave is not None:
        return cave
    if by_t is not None:
        cave, s_inside = _cave_of_closed_tail(vs, by_t)
        return cave
    return None


def find_contractible_cave(P: PathSeq, R: Optional[RectGrid] = None) -> Cave:
    """A contractible cave of a non-monotone path."""
    global fallback_count
    vs = list(P.vertices)
    cave = _find(vs)
    if cave is None:
        # swap the roles of s and t
        rv = vs[::-1]
        back = _find(rv)
        if back is not None:
            n = len(vs) - 1
            cave = _make_cave(vs, "path", n - back.end + 1, n - back.start - 1)
    if cave is None:
        fallback_count += 1
        occupied = set(vs)
        for c in iter_caves(P):
            if not any(w in occupied for w in c.inside):
                return c
        raise PathIsMonotone("no contractible cave found")
    return cave


def shrink_path(P: PathSeq, R: RectGrid, k: int, trace=None) -> PathSeq:
    """Contract caves of ``P`` until it has exactly ``k`` vertices."""
    l = shortest_len(P.s, P.t)
    if (len(P) - k) % 2:
        raise ParityMismatch(f"|P|={len(P)} and k={k} differ in parity", k=k, l=l)
    if k < l:
        raise BelowShortest(f"k={k} is below the shortest length {l}", k=k, l=l)
    if k > len(P):
        raise NoSuchPath("range", f"k={k} exceeds |P|={len(P)}", k=k, l=l)
    while len(P) > k:
        c = find_contractible_cave(P, R)
        P = contract(P, c, check=False)
        if trace is not None:
            trace(P)
    return P


# --- building a path of length at least k -------------------------------------


def _dims_for_area(R: RectGrid, area: int, w0: int = 1, h0: int = 1) -> Tuple[int, int]:
    """A near-square ``w x h`` fitting in ``R`` with ``w >= w0``, ``h >= h0``
    and area at least ``area`` when ``R`` allows it."""
    side = math.isqrt(max(area - 1, 0)) + 1
    w = max(w0, min(R.m, side))
    h = max(h0, min(R.n, -(-area // w)))
    if w * h < area:
        w = max(w0, min(R.m, -(-area // h)))
    return w, h


def _place(lo: int, hi: int, size: int, r_lo: int, r_hi: int) -> int:
    """Leftmost start of a window of ``size`` covering ``[lo, hi]`` in ``[r_lo, r_hi]``."""
    return max(r_lo, hi - size + 1)


def _toward(a: int, b: int, size: int, r_lo: int, r_hi: int) -> int:
    """Start of a window of ``size`` containing ``a`` and reaching toward ``b``."""
    if b >= a:
        return min(a, r_hi - size + 1)
    return max(r_lo, a - size + 1)


def _clamp(v: int, lo: int, hi: int) -> int:
    return max(lo, min(hi, v))


def _dist(a, b) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def _head_and_tail(R: RectGrid, s: Vertex, t: Vertex, area: int):
    """Rectangle around ``s`` reaching toward ``t`` and its vertex closest to ``t``."""
    w, h = _dims_for_area(R, area)
    x0 = _toward(s[0], t[0], w, R.ox, R.x_max)
    y0 = _toward(s[1], t[1], h, R.oy, R.y_max)
    sub = RectGrid(w, h, x0, y0)
    v = (_clamp(t[0], x0, sub.x_max), _clamp(t[1], y0, sub.y_max))
    return None if v == s else (sub, v)


def initial_path_for_k(R: RectGrid, s: Vertex, t: Vertex, k: int) -> PathSeq:
    """An s-t path with at least ``k`` vertices and O(k) of them."""
    s, t = tuple(s), tuple(t)
    err = _why_no_path(R, s, t, k)
    if err is not None:
        raise err
    bw = abs(s[0] - t[0]) + 1
    bh = abs(s[1] - t[1]) + 1
    area = k + 3
    while area < 2 * R.size:
        if bw * bh <= 2 * area:
            w, h = _dims_for_area(R, area, bw, bh)
            x0 = _place(min(s[0], t[0]), max(s[0], t[0]), w, R.ox, R.x_max)
            y0 = _place(min(s[1], t[1]), max(s[1], t[1]), h, R.oy, R.y_max)
            sub = RectGrid(w, h, x0, y0)
            P = longest_path(sub, s, t)
            if len(P) >= k:
                return P
        else:
            # the monotone tail contributes too, so size the head for the rest
            first = _head_and_tail(R, s, t, area)
            d = _dist(first[1], t) if first else 0
            for head_area in (max(area - d, 4), area):
                got = _head_and_tail(R, s, t, head_area)
                if got is None:
                    continue
                sub, v = got
                head = longest_path(sub, s, v)
                tail = staircase(v, t, x_first=not (sub.ox <= t[0] <= sub.x_max))
                P = PathSeq(list(head.vertices) + tail[1:])
                if len(P) >= k:
                    return P
        area *= 2
    return longest_path(R, s, t)


def find_path(R: RectGrid, s: Vertex, t: Vertex, k: int, trace=None) -> PathSeq:
    """An s-t path with exactly ``k`` vertices inside ``R``."""
    P = initial_path_for_k(R, s, t, k)
    return shrink_path(P, R, k, trace)
