"""Static figures: a path over a boundary, and formula-versus-oracle plots.

Output is byte-identical for identical inputs.  SVG and PNG are drawn at a
fixed 20 units per lattice cell with the origin at the bottom left.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .path_core import (  # noqa: E402
    EAST,
    Boundary,
    GenericStaircase,
    LatticePath,
    Point,
    StaircaseA,
    StaircaseB,
    StrictRightOfLine,
    boundary_contains,
    visited_points,
    waypoints,
)

CELL = 20  # units per lattice cell (1 unit = 1/72 inch)
FORMATS = ("ascii", "svg", "png")


def parse_boundary(text: str) -> Boundary | None:
    """``A:s,t`` | ``B:s`` | ``line:k`` | ``generic:x,y:PERIOD`` | ``none``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    try:
        if kind == "none":
            return None
        if kind == "a":
            s, t = (int(v) for v in rest.split(","))
            return StaircaseA(s, t)
        if kind == "b":
            return StaircaseB(int(rest))
        if kind == "line":
            return StrictRightOfLine(int(rest))
        if kind == "generic":
            xy, _, period = rest.partition(":")
            x, y = (int(v) for v in xy.split(","))
            return GenericStaircase(Point(x, y), period)
    except ValueError as exc:
        raise ValueError(f"malformed boundary {text!r}: {exc}") from None
    raise ValueError(f"unknown boundary kind in {text!r}")


def _unroll(start: Point, period: str, xmax: int, ymax: int, first: str = "") -> list[Point]:
    x, y = start
    pts = [Point(x, y)]
    steps = iter(first)
    while x <= xmax and y <= ymax:
        for st in steps:
            x, y = (x + 1, y) if st == EAST else (x, y + 1)
            pts.append(Point(x, y))
        steps = iter(period)
    return pts


def boundary_polyline(boundary: Boundary, xmax: int, ymax: int) -> list[tuple[float, float]]:
    """Vertices of ``boundary`` clipped loosely to the box [0,xmax] x [0,ymax]."""
    if isinstance(boundary, StaircaseA):
        return _unroll(Point(0, boundary.t), EAST * boundary.s + "N" * boundary.t, xmax, ymax)
    if isinstance(boundary, StaircaseB):
        s = boundary.s
        return _unroll(Point(0, 2), "NN" + EAST * s, xmax, ymax, first=EAST * (s + 1))
    if isinstance(boundary, GenericStaircase):
        return _unroll(boundary.origin, boundary.period, xmax, ymax)
    if isinstance(boundary, StrictRightOfLine):
        top = ymax + 1
        return [(0.0, 0.0), (float(boundary.k * top), float(top))]
    raise TypeError(f"cannot draw {boundary!r}")


def _extent(path: LatticePath, boundary: Boundary | None) -> tuple[int, int]:
    pts = visited_points(path)
    xmax = max(max(p.x for p in pts), 1)
    ymax = max(max(p.y for p in pts), 1)
    if isinstance(boundary, StaircaseA):
        ymax = max(ymax, boundary.t)
    elif isinstance(boundary, StaircaseB):
        ymax = max(ymax, 2)
    elif isinstance(boundary, GenericStaircase):
        xmax, ymax = max(xmax, boundary.origin.x), max(ymax, boundary.origin.y)
    return xmax, ymax


def _on_line(boundary: Boundary, p: Point) -> bool:
    if isinstance(boundary, StrictRightOfLine):
        return p.x == boundary.k * p.y
    return boundary_contains(boundary, p)


def render_ascii(path: LatticePath, boundary: Boundary | None = None, k: int | None = None) -> str:
    """Character grid, top row first.

    ``*`` path point, ``#`` boundary point, ``X`` both, ``o`` waypoint, ``.`` empty.
    """
    xmax, ymax = _extent(path, boundary)
    on_path = set(visited_points(path))
    marks = {p for _, p in waypoints(path, k)} if k is not None else set()
    lines = []
    for y in range(ymax, -1, -1):
        row = []
        for x in range(xmax + 1):
            p = Point(x, y)
            hit = boundary is not None and _on_line(boundary, p)
            if p in marks:
                row.append("o")
            elif p in on_path:
                row.append("X" if hit else "*")
            else:
                row.append("#" if hit else ".")
        lines.append(f"{y:>3} " + " ".join(row))
    return "\n".join(lines) + "\n"


def _save(fig, out: str, fmt: str) -> None:
    meta = {"Date": None} if fmt == "svg" else {"Software": None}
    fig.savefig(out, format=fmt, metadata=meta)
    plt.close(fig)


def render_figure(path: LatticePath, out: str, boundary: Boundary | None = None,
                  k: int | None = None, fmt: str = "svg") -> None:
    """Draw grid, boundary (dashed), path (solid) and, given ``k``, waypoints."""
    if fmt not in ("svg", "png"):
        raise ValueError(f"figure format must be svg or png, got {fmt!r}")
    xmax, ymax = _extent(path, boundary)
    w, h = xmax + 2, ymax + 2
    with plt.rc_context({"svg.hashsalt": "staircase", "svg.fonttype": "none"}):
        fig = plt.figure(figsize=(w * CELL / 72, h * CELL / 72), dpi=72)
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_xlim(-1, xmax + 1)
        ax.set_ylim(-1, ymax + 1)
        ax.set_axis_off()
        for x in range(xmax + 1):
            ax.plot([x, x], [0, ymax], color="0.85", lw=0.5)
        for y in range(ymax + 1):
            ax.plot([0, xmax], [y, y], color="0.85", lw=0.5)
        if boundary is not None:
            bx, by = zip(*boundary_polyline(boundary, xmax, ymax))
            ax.plot(bx, by, color="tab:red", lw=1.5, ls="--")
        px, py = zip(*visited_points(path))
        ax.plot(px, py, color="black", lw=2, marker="o", ms=3)
        if k is not None:
            wps = [p for _, p in waypoints(path, k)]
            if wps:
                wx, wy = zip(*wps)
                ax.plot(wx, wy, ls="none", marker="s", ms=7, mfc="none", mec="tab:blue", mew=1.5)
        _save(fig, out, fmt)


def plot_reports(reports: Sequence, out: str, fmt: str = "svg") -> None:
    """Formula value against oracle value per report, on a symmetric log scale."""
    pts = [(i, r.formula_value, r.oracle_value) for i, r in enumerate(reports)
           if r.formula_value is not None and r.oracle_value is not None]
    with plt.rc_context({"svg.hashsalt": "staircase", "svg.fonttype": "none"}):
        fig = plt.figure(figsize=(8, 4), dpi=72)
        ax = fig.add_axes((0.1, 0.15, 0.85, 0.75))
        if pts:
            idx, fv, ov = zip(*pts)
            ax.plot(idx, [float(v) for v in fv], ls="none", marker="o", mfc="none", label="formula")
            ax.plot(idx, [float(v) for v in ov], ls="none", marker="x", label="oracle")
            bad = [(i, float(o)) for i, f, o in pts if f != o]
            if bad:
                bx, by = zip(*bad)
                ax.plot(bx, by, ls="none", marker="s", ms=10, mfc="none", mec="red", label="mismatch")
            ax.legend(loc="upper left")
        ax.set_yscale("symlog")
        ax.set_xlabel("report index")
        ax.set_ylabel("count")
        if reports:
            ax.set_title(reports[0].suite)
        _save(fig, out, fmt)
