"""Text, SVG and PNG drawings of paths and cycles on their grid.

Edges of the object are solid and the remaining grid edges dotted.  3D
objects are drawn one z-layer at a time, layers side by side; edges that
change layer are not drawn.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .grid import CycleSeq

UNIT = 24
MARGIN = 24
LAYER_GAP = 2  # grid units between drawn 3D layers

Box = Tuple[int, int, int, int]  # x0, y0, x1, y1 inclusive


def _edges(obj) -> set:
    vs = list(obj.vertices)
    pairs = list(zip(vs, vs[1:]))
    if isinstance(obj, CycleSeq) and len(vs) > 1:
        pairs.append((vs[-1], vs[0]))
    return {frozenset(p) for p in pairs}


def bounding_box(obj) -> Box:
    xs = [v[0] for v in obj.vertices]
    ys = [v[1] for v in obj.vertices]
    return (min(xs), min(ys), max(xs), max(ys))


def _layers(obj, depth: Optional[int]) -> List[Tuple[int, set, set]]:
    """``(z, vertices, edges)`` per layer, projected to 2D."""
    dim = len(obj.vertices[0])
    if dim == 2:
        return [(0, set(obj.vertices), _edges(obj))]
    zs = range(1, (depth or max(v[2] for v in obj.vertices)) + 1)
    out = []
    for z in zs:
        verts = {v[:2] for v in obj.vertices if v[2] == z}
        edges = {
            frozenset(u[:2] for u in e)
            for e in _edges(obj)
            if all(u[2] == z for u in e)
        }
        out.append((z, verts, edges))
    return out


def to_ascii(obj, box: Optional[Box] = None, depth: Optional[int] = None) -> str:
    """Vertices on the object are ``o``, others ``.``; object edges are drawn
    with ``---`` and ``|``, grid edges with `` . `` and ``:``."""
    x0, y0, x1, y1 = box or bounding_box(obj)
    blocks = []
    for z, verts, edges in _layers(obj, depth):
        lines = []
        for y in range(y1, y0 - 1, -1):
            row = []
            for x in range(x0, x1 + 1):
                row.append("o" if (x, y) in verts else ".")
                if x < x1:
                    row.append("---" if frozenset({(x, y), (x + 1, y)}) in edges else "   ")
            lines.append("".join(row).rstrip())
            if y > y0:
                gap = []
                for x in range(x0, x1 + 1):
                    gap.append("|" if frozenset({(x, y), (x, y - 1)}) in edges else ":")
                    if x < x1:
                        gap.append("   ")
                lines.append("".join(gap).rstrip())
        if len(obj.vertices[0]) == 3:
            lines.insert(0, f"z={z}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def to_svg(obj, box: Optional[Box] = None, depth: Optional[int] = None) -> str:
    x0, y0, x1, y1 = box or bounding_box(obj)
    w, h = x1 - x0, y1 - y0
    layers = _layers(obj, depth)
    span = w + LAYER_GAP
    width = 2 * MARGIN + UNIT * (span * len(layers) - LAYER_GAP)
    height = 2 * MARGIN + UNIT * h

    def px(x, y, li):
        return (MARGIN + UNIT * (x - x0 + li * span), MARGIN + UNIT * (y1 - y))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g stroke="#999" stroke-width="1" stroke-dasharray="2,3">',
    ]
    for li, _ in enumerate(layers):
        for y in range(y0, y1 + 1):
            a, b = px(x0, y, li), px(x1, y, li)
            out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        for x in range(x0, x1 + 1):
            a, b = px(x, y0, li), px(x, y1, li)
            out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="3" stroke-linecap="round">')
    for li, (_, _, edges) in enumerate(layers):
        for e in sorted(tuple(sorted(e)) for e in edges):
            a, b = px(*e[0], li), px(*e[1], li)
            out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for li, (_, verts, _) in enumerate(layers):
        for v in sorted(verts):
            c = px(*v, li)
            out.append(f'<circle cx="{c[0]}" cy="{c[1]}" r="4"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_png(obj, path: str, box: Optional[Box] = None, depth: Optional[int] = None) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x0, y0, x1, y1 = box or bounding_box(obj)
    layers = _layers(obj, depth)
    fig, axes = plt.subplots(1, len(layers), figsize=(max(3, 0.4 * (x1 - x0 + 2)) * len(layers), max(3, 0.4 * (y1 - y0 + 2))), squeeze=False)
    for ax, (z, verts, edges) in zip(axes[0], layers):
        for y in range(y0, y1 + 1):
            ax.plot([x0, x1], [y, y], ls=":", color="0.6", lw=0.8, zorder=1)
        for x in range(x0, x1 + 1):
            ax.plot([x, x], [y0, y1], ls=":", color="0.6", lw=0.8, zorder=1)
        for e in sorted(tuple(sorted(e)) for e in edges):
            (ax_, ay), (bx, by) = e
            ax.plot([ax_, bx], [ay, by], color="black", lw=2.5, zorder=2)
        if verts:
            xs, ys = zip(*sorted(verts))
            ax.scatter(xs, ys, s=16, color="black", zorder=3)
        ax.set_aspect("equal")
        ax.set_axis_off()
        if len(layers) > 1:
            ax.set_title(f"z={z}")
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)


def plot_bench(rows: Sequence[Tuple[int, float]], slope: float, path: str, title: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ks = [r[0] for r in rows]
    ts = [r[1] / 1e9 for r in rows]
    fig, ax = plt.subplots(figsize=(4.5, 3.5))
    ax.loglog(ks, ts, "o-", color="black")
    ax.set_xlabel("k")
    ax.set_ylabel("median time (s)")
    ax.set_title(f"{title}: slope {slope:.2f}")
    ax.grid(True, which="both", ls=":", color="0.7")
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
