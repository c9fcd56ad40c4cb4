"""Points, north/east lattice paths, staircase boundaries and binary strings.

Paths are immutable: a start point plus a string over ``{"E", "N"}``.
Binary strings are plain ``str`` over ``{"0", "1"}``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Union

EAST = "E"
NORTH = "N"


class Point(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


ORIGIN = Point(0, 0)


class Step(str, enum.Enum):
    NORTH = NORTH
    EAST = EAST

    @property
    def delta(self) -> tuple[int, int]:
        return (0, 1) if self is Step.NORTH else (1, 0)


class Corner(enum.Enum):
    NORTHWEST = "NW"  # north step followed by east step
    SOUTHEAST = "SE"  # east step followed by north step


_STEP_RE = re.compile(r"^[EN]*$")
_BITS_RE = re.compile(r"^[01]*$")
_LITERAL_RE = re.compile(r"^(?:@(-?\d+),(-?\d+):)?([EN]*)$")


@dataclass(frozen=True)
class LatticePath:
    """A start point followed by unit north/east steps."""

    start: Point = ORIGIN
    steps: str = ""

    def __post_init__(self):
        if not isinstance(self.start, Point):
            object.__setattr__(self, "start", Point(*self.start))
        if not _STEP_RE.match(self.steps):
            raise ValueError(f"steps must be a string over E/N, got {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_path(self)

    @property
    def end(self) -> Point:
        e = self.steps.count(EAST)
        return Point(self.start.x + e, self.start.y + len(self.steps) - e)

    def points(self) -> list[Point]:
        return visited_points(self)

    @property
    def height(self) -> int:
        return self.steps.count(NORTH)

    @property
    def width(self) -> int:
        return self.steps.count(EAST)


def parse_path(literal: str) -> LatticePath:
    """Parse ``"@x,y:STEPS"`` or bare ``"STEPS"`` (start at the origin)."""
    m = _LITERAL_RE.match(literal.strip())
    if m is None:
        raise ValueError(f"malformed path literal {literal!r}")
    if m.group(1) is None:
        return LatticePath(ORIGIN, m.group(3))
    return LatticePath(Point(int(m.group(1)), int(m.group(2))), m.group(3))


def format_path(path: LatticePath) -> str:
    if path.start == ORIGIN:
        return path.steps
    return f"@{path.start.x},{path.start.y}:{path.steps}"


def parse_binary(literal: str) -> str:
    literal = literal.strip()
    if not _BITS_RE.match(literal):
        raise ValueError(f"malformed binary literal {literal!r}")
    return literal


def visited_points(path: LatticePath) -> list[Point]:
    x, y = path.start
    pts = [Point(x, y)]
    for st in path.steps:
        if st == EAST:
            x += 1
        else:
            y += 1
        pts.append(Point(x, y))
    return pts


def corner_count(path: LatticePath, kind: Corner = Corner.NORTHWEST) -> int:
    pattern = "NE" if kind is Corner.NORTHWEST else "EN"
    steps = path.steps
    return sum(1 for i in range(len(steps) - 1) if steps[i:i + 2] == pattern)


def nw_corners(path: LatticePath) -> list[Point]:
    """Points where a north step is immediately followed by an east step."""
    pts = visited_points(path)
    steps = path.steps
    return [pts[i + 1] for i in range(len(steps) - 1) if steps[i] == NORTH and steps[i + 1] == EAST]


def augment_plus(path: LatticePath) -> LatticePath:
    return LatticePath(Point(path.start.x, path.start.y - 1), NORTH + path.steps + NORTH)


def potential(p: Point, k: int) -> int:
    return p.x - k * p.y


# ---------------------------------------------------------------------------
# boundaries


@dataclass(frozen=True)
class StaircaseA:
    """From (0,t): s east, t north, s east, t north, ..."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError(f"StaircaseA needs s,t >= 1, got s={self.s}, t={self.t}")


@dataclass(frozen=True)
class StaircaseB:
    """From (0,2): s+1 east, then alternately 2 north and s east."""

    s: int

    def __post_init__(self):
        if self.s < 0:
            raise ValueError(f"StaircaseB needs s >= 0, got s={self.s}")


@dataclass(frozen=True)
class StrictRightOfLine:
    """Stay strictly right of x = k*y, except at a leading origin."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"StrictRightOfLine needs k >= 0, got k={self.k}")


@dataclass(frozen=True)
class GenericStaircase:
    """Infinite polyline from ``origin`` repeating ``period`` forever."""

    origin: Point
    period: str = field(default="EN")

    def __post_init__(self):
        if not isinstance(self.origin, Point):
            object.__setattr__(self, "origin", Point(*self.origin))
        if not self.period or not _STEP_RE.match(self.period):
            raise ValueError(f"period must be a nonempty E/N string, got {self.period!r}")


Boundary = Union[StaircaseA, StaircaseB, StrictRightOfLine, GenericStaircase]


def _on_staircase_a(s: int, t: int, x: int, y: int) -> bool:
    if x < 0 or y < t:
        return False
    # horizontal run m: y = (m+1)t, ms <= x <= (m+1)s
    if y % t == 0:
        m = y // t - 1
        if m * s <= x <= (m + 1) * s:
            return True
    # vertical run m: x = (m+1)s, (m+1)t <= y <= (m+2)t
    if x > 0 and x % s == 0:
        m = x // s - 1
        if (m + 1) * t <= y <= (m + 2) * t:
            return True
    return False


def _on_staircase_b(s: int, x: int, y: int) -> bool:
    if x < 0 or y < 2:
        return False
    if y == 2 and x <= s + 1:
        return True
    if y % 2 == 0 and y >= 4:
        m = y // 2
        if (m - 1) * s + 1 <= x <= m * s + 1:
            return True
    # vertical runs x = ms+1, 2m <= y <= 2m+2, m >= 1
    if s == 0:
        return x == 1
    if (x - 1) % s == 0 and x > 1:
        m = (x - 1) // s
        if 2 * m <= y <= 2 * m + 2:
            return True
    return False


def _on_generic(b: GenericStaircase, x: int, y: int) -> bool:
    cx, cy = b.origin
    while cx <= x and cy <= y:
        for st in b.period:
            if cx == x and cy == y:
                return True
            if st == EAST:
                cx += 1
            else:
                cy += 1
            if cx > x or cy > y:
                return False
    return False


def boundary_contains(boundary: Boundary, p: Point) -> bool:
    x, y = p
    if isinstance(boundary, StaircaseA):
        return _on_staircase_a(boundary.s, boundary.t, x, y)
    if isinstance(boundary, StaircaseB):
        return _on_staircase_b(boundary.s, x, y)
    if isinstance(boundary, GenericStaircase):
        return _on_generic(boundary, x, y)
    raise TypeError(f"{type(boundary).__name__} has no lattice point set")


def first_contact(path: LatticePath, boundary: Boundary) -> int | None:
    """Index of the first visited point lying on ``boundary``, or None."""
    for i, p in enumerate(visited_points(path)):
        if boundary_contains(boundary, p):
            return i
    return None


def last_contact(path: LatticePath, boundary: Boundary) -> int | None:
    pts = visited_points(path)
    for i in range(len(pts) - 1, -1, -1):
        if boundary_contains(boundary, pts[i]):
            return i
    return None


def avoids(path: LatticePath, boundary: Boundary) -> bool:
    if isinstance(boundary, StrictRightOfLine):
        k = boundary.k
        pts = visited_points(path)
        if pts[0] == ORIGIN:
            pts = pts[1:]
        return all(p.x > k * p.y for p in pts)
    return first_contact(path, boundary) is None


def touches_shifted_line(path: LatticePath, k: int) -> bool:
    """True iff some visited point with y > 0 lies on x = k*y + 1."""
    return any(p.y > 0 and p.x == k * p.y + 1 for p in visited_points(path))


def waypoints(path: LatticePath, k: int) -> list[tuple[int, Point]]:
    """Visited points of the form (2ik+k+1, 2i+1), with their indices."""
    out = []
    for idx, p in enumerate(visited_points(path)):
        if p.y >= 1 and p.y % 2 == 1 and p.x == k * p.y + 1:
            out.append((idx, p))
    return out


# ---------------------------------------------------------------------------
# binary strings


def weight(bits: str) -> int:
    return bits.count("1")


def change_count(bits: str) -> int:
    return sum(1 for i in range(len(bits) - 1) if bits[i] != bits[i + 1])


def delta_decode(bits: str) -> LatticePath:
    """Differences against the previous bit (b_0 = 0); 0 -> east, 1 -> north."""
    prev = "0"
    out = []
    for b in bits:
        out.append(EAST if b == prev else NORTH)
        prev = b
    return LatticePath(ORIGIN, "".join(out))


def delta_encode(path: LatticePath) -> str:
    if path.start != ORIGIN:
        raise ValueError("delta_encode needs a path starting at the origin")
    bit = 0
    out = []
    for st in path.steps:
        if st == NORTH:
            bit ^= 1
        out.append("1" if bit else "0")
    return "".join(out)


def ten_positions(bits: str) -> list[int]:
    """1-indexed start positions of each occurrence of ``10``."""
    return [i + 1 for i in range(len(bits) - 1) if bits[i] == "1" and bits[i + 1] == "0"]


def is_admissible(bits: str, n: int, s: int) -> bool:
    if len(bits) != (s + 2) * n + 1:
        raise ValueError(f"length {len(bits)} != (s+2)n+1 = {(s + 2) * n + 1}")
    return all(pos >= (s + 2) * j + 1 for j, pos in enumerate(ten_positions(bits), start=1))
