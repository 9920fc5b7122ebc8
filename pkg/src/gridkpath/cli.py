"""Command line front end.

Exit codes: 0 when the object was found or the file is valid, 1 when the
requested object provably does not exist or the file is invalid (a JSON
reason is printed), 2 for malformed arguments.
"""

from __future__ import annotations

import json
import os
import statistics
import sys
import time

import click
import numpy as np

from . import cycles, grid3d, oracle, paths, render
from .errors import BoundExceeded, NoSuchObject, VertexOutOfGrid
from .grid import CycleSeq, PathSeq, RectGrid, from_json, validate_cycle, validate_path

FORMATS = click.Choice(["json", "ascii", "svg"])


def _emit(obj, fmt: str, box=None, depth=None, out=None) -> None:
    if fmt == "json":
        text = json.dumps(obj.to_json(), separators=(",", ":")) + "\n"
    elif fmt == "ascii":
        text = render.to_ascii(obj, box, depth)
    else:
        text = render.to_svg(obj, box, depth)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(err: NoSuchObject) -> None:
    click.echo(json.dumps(err.as_dict(), separators=(",", ":")))
    sys.exit(1)


def _run(fn):
    try:
        return fn()
    except NoSuchObject as err:
        _fail(err)
    except VertexOutOfGrid as err:
        raise click.UsageError(str(err))


def _positive(ctx, param, value):
    if value < 1:
        raise click.BadParameter("must be at least 1")
    return value


@click.group()
def main():
    """Paths and cycles of a given length in grid graphs."""


@main.command()
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("k", type=int)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cycle(m, n, k, fmt, out):
    """A cycle with K vertices in the M x N grid."""
    R = RectGrid(m, n)
    C = _run(lambda: cycles.find_cycle(R, k))
    _emit(C, fmt, (1, 1, m, n), out=out)


@main.command()
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("sx", type=int)
@click.argument("sy", type=int)
@click.argument("tx", type=int)
@click.argument("ty", type=int)
@click.argument("k", type=int)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--trace", is_flag=True, help="Print every intermediate path as JSON lines on stderr.")
def path(m, n, sx, sy, tx, ty, k, fmt, out, trace):
    """An (SX,SY)-(TX,TY) path with K vertices in the M x N grid."""
    R = RectGrid(m, n)
    hook = (lambda P: click.echo(json.dumps(P.to_json(), separators=(",", ":")), err=True)) if trace else None
    P = _run(lambda: paths.find_path(R, (sx, sy), (tx, ty), k, trace=hook))
    _emit(P, fmt, (1, 1, m, n), out=out)


@main.command()
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("o", type=int, callback=_positive)
@click.argument("k", type=int)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cycle3d(m, n, o, k, fmt, out):
    """A cycle with K vertices in the M x N x O grid."""
    G = grid3d.Grid3D(m, n, o)
    C = _run(lambda: grid3d.find_cycle_3d(G, k))
    _emit(C, fmt, (1, 1, m, n), depth=o, out=out)


@main.command()
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("o", type=int, callback=_positive)
@click.argument("sx", type=int)
@click.argument("sy", type=int)
@click.argument("sz", type=int)
@click.argument("tx", type=int)
@click.argument("ty", type=int)
@click.argument("tz", type=int)
@click.argument("k", type=int)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def path3d(m, n, o, sx, sy, sz, tx, ty, tz, k, fmt, out):
    """An s-t path with K vertices in the M x N x O grid."""
    G = grid3d.Grid3D(m, n, o)
    P = _run(lambda: grid3d.find_path_3d(G, (sx, sy, sz), (tx, ty, tz), k))
    _emit(P, fmt, (1, 1, m, n), depth=o, out=out)


def _load(file):
    try:
        return from_json(json.load(file))
    except (ValueError, TypeError) as err:
        raise click.UsageError(f"not a canonical path/cycle file: {err}")


@main.command()
@click.argument("file", type=click.File("r"))
@click.option("--grid", "dims", type=int, nargs=2, default=None, help="Check containment in the M x N grid.")
@click.option("--grid3d", "dims3", type=int, nargs=3, default=None, help="Check containment in the M x N x O grid.")
def check(file, dims, dims3):
    """Validate a path or cycle stored as canonical JSON."""
    obj = _load(file)
    container = None
    if dims:
        container = RectGrid(*dims)
    elif dims3:
        container = grid3d.Grid3D(*dims3)
    is_cycle = isinstance(obj, CycleSeq)
    diag = (validate_cycle if is_cycle else validate_path)(obj, container)
    report = {"kind": "cycle" if is_cycle else "path", "length": len(obj), **diag.as_dict()}
    if diag and container is not None and len(obj):
        # the predicates must agree with the object's existence
        if isinstance(container, RectGrid):
            report["exists"] = (
                cycles.cycle_exists(container, len(obj)) if is_cycle
                else len(obj) == 1 or paths.path_exists(container, obj.s, obj.t, len(obj))
            )
        else:
            report["exists"] = (
                grid3d.cycle_exists_3d(container, len(obj)) if is_cycle
                else len(obj) == 1 or grid3d.path_exists_3d(container, obj.s, obj.t, len(obj))
            )
        if not report["exists"]:
            report["valid"] = False
            report["violation"] = "existence predicate disagrees"
    click.echo(json.dumps(report, separators=(",", ":")))
    sys.exit(0 if report["valid"] else 1)


@main.command("render")
@click.argument("file", type=click.File("r"))
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="PNG file to write.")
@click.option("--grid", "dims", type=int, nargs=2, default=None)
def render_cmd(file, out, dims):
    """Draw a stored path or cycle to a PNG image."""
    obj = _load(file)
    if not len(obj):
        raise click.UsageError("empty object")
    box = (1, 1, dims[0], dims[1]) if dims else None
    render.to_png(obj, out, box)
    click.echo(out)


BENCH_SIZES = {"cycles": (10**4, 10**5, 10**6), "paths": (10**3, 3 * 10**3, 10**4)}


def fit_slope(rows) -> float:
    """Least-squares slope of log(time) against log(k)."""
    if len(rows) < 2:
        return float("nan")
    ks = np.log([r[0] for r in rows])
    ts = np.log([r[1] for r in rows])
    return float(np.polyfit(ks, ts, 1)[0])


def bench_rows(suite: str, sizes, repetitions: int):
    """``(k, median_ns, stdev_ns)`` per size."""
    if suite == "cycles":
        R = RectGrid(10**6, 10**6)

        def once(k):
            cycles.find_cycle(R, k)
    else:
        R = RectGrid(10**5, 10**5)
        s = (R.m // 2, R.n // 2)
        t = (s[0] + 1, s[1])

        def once(k):
            paths.find_path(R, s, t, k)
    rows = []
    if repetitions <= 0:
        return rows
    for k in sizes:
        times = []
        for _ in range(repetitions):
            t0 = time.perf_counter_ns()
            once(k)
            times.append(time.perf_counter_ns() - t0)
        spread = statistics.stdev(times) if len(times) > 1 else 0.0
        rows.append((k, statistics.median(times), spread))
    return rows


@main.command()
@click.argument("suite", type=click.Choice(["cycles", "paths"]))
@click.option("--sizes", default=None, help="Comma separated k values.")
@click.option("--repetitions", type=int, default=3, show_default=True)
@click.option("--plot", type=click.Path(dir_okay=False), default=None, help="Also write a log-log PNG.")
def bench(suite, sizes, repetitions, plot):
    """Time the constructions and print a CSV table."""
    if hasattr(os, "sched_setaffinity"):
        try:
            os.sched_setaffinity(0, {min(os.sched_getaffinity(0))})
        except OSError:
            pass
    ks = [int(v) for v in sizes.split(",")] if sizes else BENCH_SIZES[suite]
    if suite == "paths":
        ks = [k if k % 2 == 0 else k + 1 for k in ks]  # adjacent endpoints need even k
    rows = bench_rows(suite, ks, repetitions)
    click.echo("k,median_ns,stdev_ns")
    for k, med, sd in rows:
        click.echo(f"{k},{int(med)},{int(sd)}")
    if rows:
        slope = fit_slope([(k, med) for k, med, _ in rows])
        click.echo(f"# slope,{slope:.3f}")
        if plot:
            render.plot_bench([(k, med) for k, med, _ in rows], slope, plot, suite)


@main.group("oracle")
def oracle_group():
    """Exhaustive answers for small grids."""


def _oracle_call(fn):
    try:
        value = fn()
    except BoundExceeded as err:
        raise click.UsageError(f"{err}; raise GRIDKPATH_ORACLE_BOUND to allow it")
    click.echo(json.dumps(value))


@oracle_group.command("cycle")
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("k", type=int)
def oracle_cycle(m, n, k):
    """Does the M x N grid have a K-cycle?"""
    _oracle_call(lambda: oracle.oracle_exists_cycle(RectGrid(m, n), k))


@oracle_group.command("path")
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("sx", type=int)
@click.argument("sy", type=int)
@click.argument("tx", type=int)
@click.argument("ty", type=int)
@click.argument("k", type=int)
def oracle_path(m, n, sx, sy, tx, ty, k):
    """Does the M x N grid have an s-t path with K vertices?"""
    _oracle_call(lambda: oracle.oracle_exists_path(RectGrid(m, n), (sx, sy), (tx, ty), k))


@oracle_group.command("longest")
@click.argument("m", type=int, callback=_positive)
@click.argument("n", type=int, callback=_positive)
@click.argument("sx", type=int)
@click.argument("sy", type=int)
@click.argument("tx", type=int)
@click.argument("ty", type=int)
def oracle_longest(m, n, sx, sy, tx, ty):
    """Length of a longest s-t path in the M x N grid."""
    _oracle_call(lambda: oracle.oracle_longest_path_len(RectGrid(m, n), (sx, sy), (tx, ty)))


if __name__ == "__main__":
    main()
