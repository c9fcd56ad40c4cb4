"""Prospecting periodic boundaries beyond the two-step staircase.

For a boundary unrolled from ``origin`` by repeating ``period`` (a east
steps and b north steps per period), count paths from (0,0) to
(x0 + a*n + 1, y0 + b*(n-1)) that never touch it.  With origin (0,t) and
period E^s N^t this is exactly the first staircase family.  The counts are
then tested against t'*C((a+b)n, bn) - s'*C((a+b)n, bn-1) for small t', s'.
Nothing is claimed beyond the tested range of n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import binomial
from .oracle import _check_cells, grid_count
from .path_core import EAST, NORTH, GenericStaircase, Point, boundary_contains


@dataclass(frozen=True)
class BoundaryPattern:
    origin: Point
    period: str

    def __post_init__(self):
        if not isinstance(self.origin, Point):
            object.__setattr__(self, "origin", Point(*self.origin))
        if EAST not in self.period or NORTH not in self.period or set(self.period) - {EAST, NORTH}:
            raise ValueError(f"period must use both E and N and nothing else, got {self.period!r}")

    @property
    def east(self) -> int:
        return self.period.count(EAST)

    @property
    def north(self) -> int:
        return self.period.count(NORTH)

    def endpoint(self, n: int) -> Point:
        return Point(self.origin.x + self.east * n + 1, self.origin.y + self.north * (n - 1))


def pattern_counts(pattern: BoundaryPattern, max_n: int) -> dict[int, int]:
    boundary = GenericStaircase(pattern.origin, pattern.period)
    out = {}
    for n in range(1, max_n + 1):
        end = pattern.endpoint(n)
        if end.x < 0 or end.y < 0:
            out[n] = 0
            continue
        _check_cells(pattern, (end.x + 1) * (end.y + 1))
        out[n] = grid_count(Point(0, 0), end, lambda p: boundary_contains(boundary, p))
    return out


def template(tc: int, sc: int, a: int, b: int, n: int) -> int:
    m = (a + b) * n
    return tc * binomial(m, b * n) - sc * binomial(m, b * n - 1)


@dataclass
class SearchResult:
    pattern: BoundaryPattern
    counts: dict[int, int]
    fits: list[tuple[int, int]]
    bound: int


def search(pattern: BoundaryPattern, max_n: int, bound: int = 10) -> SearchResult:
    """All (t', s') with |t'|, |s'| <= bound matching every counted n."""
    counts = pattern_counts(pattern, max_n)
    a, b = pattern.east, pattern.north
    fits = [(tc, sc)
            for tc in range(-bound, bound + 1)
            for sc in range(-bound, bound + 1)
            if all(template(tc, sc, a, b, n) == c for n, c in counts.items())]
    return SearchResult(pattern, counts, fits, bound)


def format_result(res: SearchResult) -> str:
    p = res.pattern
    a, b = p.east, p.north
    lines = [f"pattern origin={p.origin} period={p.period} (a={a}, b={b})",
             "n\tendpoint\tcount"]
    for n, c in res.counts.items():
        lines.append(f"{n}\t{p.endpoint(n)}\t{c}")
    if res.fits:
        for tc, sc in res.fits:
            lines.append(f"fit t'={tc} s'={sc}: {tc}*C({a + b}n,{b}n) - {sc}*C({a + b}n,{b}n-1)"
                         f" for n=1..{len(res.counts)}")
    else:
        lines.append(f"falsified: no t', s' in [-{res.bound},{res.bound}] fits n=1..{len(res.counts)}")
        tc, sc = b, a
        for n, c in res.counts.items():
            v = template(tc, sc, a, b, n)
            lines.append(f"  naive t'={tc} s'={sc} at n={n}: {v} vs {c}")
    return "\n".join(lines) + "\n"
