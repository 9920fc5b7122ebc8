"""Exhaustive ground truth for small grid graphs.

Everything here works on an explicit vertex set (2D or 3D tuples) and is
written directly against the definitions: it shares no code with the
construction modules beyond the vertex tuples themselves.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Set

from .errors import BoundExceeded

DEFAULT_BOUND = 20


def instance_bound() -> int:
    return int(os.environ.get("GRIDKPATH_ORACLE_BOUND", DEFAULT_BOUND))


def _adjacency(G: Iterable) -> Dict[tuple, List[tuple]]:
    verts = {tuple(v) for v in G}
    adj = {}
    for v in verts:
        nbrs = []
        for axis in range(len(v)):
            for step in (1, -1):
                w = v[:axis] + (v[axis] + step,) + v[axis + 1:]
                if w in verts:
                    nbrs.append(w)
        adj[v] = sorted(nbrs)
    return adj


def _check_bound(adj, bound: Optional[int]) -> None:
    limit = instance_bound() if bound is None else bound
    if len(adj) > limit:
        raise BoundExceeded(f"{len(adj)} vertices exceeds oracle bound {limit}")


def _dist(a, b) -> int:
    return sum(abs(p - q) for p, q in zip(a, b))


def oracle_exists_cycle(G, k: int, bound: Optional[int] = None, prune: bool = True) -> bool:
    """Is there a simple cycle with exactly ``k`` vertices in ``G``?

    Each candidate cycle is searched from its smallest vertex only, visiting
    larger vertices, so no cycle is explored from two starts.
    """
    adj = _adjacency(G)
    _check_bound(adj, bound)
    if k < 3 or k > len(adj):
        return False
    for start in sorted(adj):
        allowed = {v for v in adj if v > start}
        if len(allowed) + 1 < k:
            continue
        visited = {start}

        def dfs(v, depth) -> bool:
            # depth = vertices on the current path, ending at v
            if depth == k:
                return start in adj[v]
            if prune:
                steps_left = k - depth + 1  # edges still needed to close
                d = _dist(v, start)
                if d > steps_left or (steps_left - d) % 2:
                    return False
            for w in adj[v]:
                if w in allowed and w not in visited:
                    visited.add(w)
                    if dfs(w, depth + 1):
                        return True
                    visited.discard(w)
            return False

        if dfs(start, 1):
            return True
    return False


def oracle_longest_cycle_len(G, bound: Optional[int] = None) -> int:
    adj = _adjacency(G)
    _check_bound(adj, bound)
    for k in range(len(adj), 3, -1):
        if oracle_exists_cycle(adj, k, bound=bound):
            return k
    return 0


def oracle_exists_path(G, s, t, k: int, bound: Optional[int] = None, prune: bool = True) -> bool:
    """Is there a simple s-t path with exactly ``k`` vertices in ``G``?"""
    adj = _adjacency(G)
    _check_bound(adj, bound)
    s, t = tuple(s), tuple(t)
    if s not in adj or t not in adj:
        return False
    if s == t:
        return k == 1
    if k < 2 or k > len(adj):
        return False
    visited = {s}

    def dfs(v, depth) -> bool:
        if v == t:
            return depth == k
        remaining = k - depth  # vertices still to add, t included
        if prune:
            d = _dist(v, t)
            if d > remaining or (remaining - d) % 2:
                return False
            reach = _reach_set(adj, v, visited) - {v}
            if t not in reach:
                return False
            # the next vertices alternate colour, starting opposite to v
            own = sum(v) % 2
            same = sum(1 for w in reach if sum(w) % 2 == own)
            other = len(reach) - same
            if other < (remaining + 1) // 2 or same < remaining // 2:
                return False
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                if dfs(w, depth + 1):
                    return True
                visited.discard(w)
        return False

    return dfs(s, 1)


def _reach_set(adj, start, blocked) -> Set[tuple]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def oracle_path_lengths(G, s, bound: Optional[int] = None) -> Dict[tuple, Set[int]]:
    """All simple paths from ``s``: map each endpoint to the set of lengths seen."""
    adj = _adjacency(G)
    _check_bound(adj, bound)
    s = tuple(s)
    out: Dict[tuple, Set[int]] = {v: set() for v in adj}
    visited = {s}

    def dfs(v, depth):
        out[v].add(depth)
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                dfs(w, depth + 1)
                visited.discard(w)

    dfs(s, 1)
    return out


def oracle_longest_path_len(G, s, t, bound: Optional[int] = None) -> int:
    lengths = oracle_path_lengths(G, s, bound=bound)[tuple(t)]
    return max(lengths) if lengths else 0


@lru_cache(maxsize=None)
def oracle_length_table(G: frozenset, bound: Optional[int] = None) -> Dict[tuple, Dict[tuple, frozenset]]:
    """Cached ``{s: {t: lengths}}`` for every ordered pair of a small graph."""
    return {
        s: {t: frozenset(ls) for t, ls in oracle_path_lengths(G, s, bound=bound).items()}
        for s in sorted(G)
    }


# --- caves, by definition -------------------------------------------------


def _segment_between(p, q) -> list:
    """Lattice points strictly between two points on a common grid line."""
    axis = 0 if p[1] == q[1] else 1
    lo, hi = sorted((p[axis], q[axis]))
    pts = []
    for c in range(lo + 1, hi):
        pts.append((c, p[1]) if axis == 0 else (p[0], c))
    if p[axis] > q[axis]:
        pts.reverse()
    return pts


def _point_in_polygon(pt, poly) -> bool:
    """Even-odd test for a non-lattice point against a lattice polygon."""
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        (x0, y0), (x1, y1) = poly[i], poly[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            xc = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            if xc > x:
                inside = not inside
    return inside


def _in_closed_polygon(pt, poly, poly_edges) -> bool:
    if pt in poly_edges:
        return True
    # perturb off the lattice lines; any sufficiently small offset works for
    # points not on the boundary
    return _point_in_polygon((pt[0] + 1e-3, pt[1] + 2e-3), poly)


def oracle_enumerate_caves(carrier, closed: bool) -> list:
    """Every cave of a path (``closed=False``) or cycle, found by brute force.

    Returns ``(start, end, inside, contractible, convex)`` tuples, where
    ``start``/``end`` index ``p``/``q`` in the carrier and ``convex`` is
    ``None`` for paths.  A cave is a minimal subpath whose first and last
    edges point in opposite directions.
    """
    vs = [tuple(v) for v in carrier]
    n = len(vs)
    on_carrier = set(vs)
    edge_count = n if closed else n - 1

    def step(i):
        a, b = vs[i % n], vs[(i + 1) % n]
        return (b[0] - a[0], b[1] - a[1])

    boundary = set()
    if closed:
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            boundary.add(a)
            boundary.add(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2))

    caves = []
    for i in range(edge_count):
        for length in range(2, edge_count):
            j = i + length
            if not closed and j >= edge_count:
                break
            first, last = step(i), step(j)
            if first != (-last[0], -last[1]):
                continue
            # minimality: no opposite pair strictly within [i, j]
            steps = [step(x) for x in range(i, j + 1)]
            minimal = True
            for a in range(len(steps)):
                for b in range(a + 1, len(steps)):
                    if (a, b) != (0, len(steps) - 1) and steps[a] == (-steps[b][0], -steps[b][1]):
                        minimal = False
                        break
                if not minimal:
                    break
            if minimal:
                p, q = vs[i % n], vs[(j + 1) % n]
                inside = _segment_between(p, q)
                contractible = not any(v in on_carrier for v in inside)
                convex = None
                if closed:
                    pts = list(inside)
                    chain = [p] + inside + [q]
                    pts += [
                        ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
                        for a, b in zip(chain, chain[1:])
                    ]
                    convex = all(_in_closed_polygon(pt, vs, boundary) for pt in pts)
                caves.append((i % n, (j + 1) % n if closed else j + 1, inside, contractible, convex))
            break
    return caves
