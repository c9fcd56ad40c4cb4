"""Brute-force enumeration and lattice dynamic programming.

This module is the ground truth the closed forms and bijections are checked
against, so it depends on :mod:`staircase.path_core` only.  Every membership
decision goes through the predicates defined there.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator, Union

from .path_core import (
    EAST,
    NORTH,
    ORIGIN,
    Corner,
    LatticePath,
    Point,
    StaircaseA,
    StaircaseB,
    StrictRightOfLine,
    augment_plus,
    avoids,
    boundary_contains,
    change_count,
    corner_count,
    first_contact,
    is_admissible,
    touches_shifted_line,
    visited_points,
)

DEFAULT_GUARD = 1 << 24


class GuardExceeded(RuntimeError):
    pass


def guard_limit() -> int:
    env = os.environ.get("STAIRCASE_GUARD")
    return int(env) if env else DEFAULT_GUARD


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class S1:
    """Paths (0,0) -> (sn+1, tn) avoiding A_{s,t}."""
    s: int
    t: int
    n: int


@dataclass(frozen=True)
class S2:
    """Paths (1,0) -> (sn, tn-1) avoiding A_{s,t}."""
    s: int
    t: int
    n: int


@dataclass(frozen=True)
class S1Prime:
    """Paths from the origin with sn+1 east and tn north steps, ending north."""
    s: int
    t: int
    n: int


@dataclass(frozen=True)
class S2Prime:
    """Paths from (1,0) with sn-1 east and tn-1 north steps."""
    s: int
    t: int
    n: int


@dataclass(frozen=True)
class T:
    """Union over 0 <= i < t of all paths from (1,i) to the part's endpoint."""
    s: int
    t: int
    n: int
    part: int = 1


@dataclass(frozen=True)
class Uj:
    """Paths of ``T`` hitting A_{s,t} whose first contact has x = j (mod s)."""
    s: int
    t: int
    n: int
    j: int
    part: int = 1


@dataclass(frozen=True)
class UjPrime:
    """All paths from (j-1,t) [part 1] or (j,t+1) [part 2] to (sn+j, tn+t-1)."""
    s: int
    t: int
    n: int
    j: int
    part: int = 1


@dataclass(frozen=True)
class F:
    """Length 2(k+1)n paths from the origin strictly right of x = ky."""
    k: int
    n: int


@dataclass(frozen=True)
class G:
    """Length 2(k+1)n+1 paths avoiding B_{2k} and touching x = ky+1 at y > 0."""
    k: int
    n: int


@dataclass(frozen=True)
class LineAvoiders:
    k: int
    length: int


@dataclass(frozen=True)
class BAvoiders:
    s: int
    length: int


@dataclass(frozen=True)
class AdmissibleBinary:
    """Admissible strings of length (s+2)n+1 with at most r changes."""
    n: int
    s: int
    r: int


@dataclass(frozen=True)
class BlockStrings:
    """Strings of length (s+2)n+1 starting with 0 with exactly 2n-1 changes."""
    n: int
    s: int


PathSetSpec = Union[S1, S2, S1Prime, S2Prime, T, Uj, UjPrime, F, G, LineAvoiders,
                    BAvoiders, AdmissibleBinary, BlockStrings]


def t_endpoints(s: int, t: int, n: int, part: int, i: int) -> tuple[Point, Point]:
    if part == 1:
        return Point(1, i), Point(s * n + 1, t * n + i)
    if part == 2:
        return Point(1, i), Point(s * n, t * n + i - 1)
    raise ValueError(f"part must be 1 or 2, got {part}")


def uj_prime_endpoints(s: int, t: int, n: int, j: int, part: int) -> tuple[Point, Point]:
    end = Point(s * n + j, t * n + t - 1)
    if part == 1:
        return Point(j - 1, t), end
    if part == 2:
        return Point(j, t + 1), end
    raise ValueError(f"part must be 1 or 2, got {part}")


def residue_class(x: int, s: int) -> int:
    """x mod s taken in 1..s."""
    return (x - 1) % s + 1


# ---------------------------------------------------------------------------
# enumeration


class _Budget:
    def __init__(self, spec):
        self.left = guard_limit()
        self.spec = spec

    def tick(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise GuardExceeded(f"enumeration guard {guard_limit()} exceeded at {self.spec}")


def _grid_paths(start: Point, end: Point, blocked, budget: _Budget) -> Iterator[LatticePath]:
    """All E/N paths start -> end in lexicographic order (E < N), pruning blocked points."""
    de, dn = end.x - start.x, end.y - start.y
    if de < 0 or dn < 0:
        return
    if blocked is not None and blocked(start):
        return
    buf: list[str] = []

    def rec(x, y, e, nn):
        budget.tick()
        if e == 0 and nn == 0:
            yield LatticePath(start, "".join(buf))
            return
        if e:
            p = Point(x + 1, y)
            if blocked is None or not blocked(p):
                buf.append(EAST)
                yield from rec(x + 1, y, e - 1, nn)
                buf.pop()
        if nn:
            p = Point(x, y + 1)
            if blocked is None or not blocked(p):
                buf.append(NORTH)
                yield from rec(x, y + 1, e, nn - 1)
                buf.pop()

    yield from rec(start.x, start.y, de, dn)


def _length_paths(length: int, ok_prefix, budget: _Budget) -> Iterator[LatticePath]:
    """Paths from the origin of a given length whose every prefix passes ``ok_prefix``."""
    buf: list[str] = []

    def rec():
        budget.tick()
        if len(buf) == length:
            yield LatticePath(ORIGIN, "".join(buf))
            return
        for st in (EAST, NORTH):
            buf.append(st)
            if ok_prefix(LatticePath(ORIGIN, "".join(buf))):
                yield from rec()
            buf.pop()

    yield from rec()


def _all_strings(length: int, budget: _Budget) -> Iterator[str]:
    budget.tick(1 << length)
    for bits in itertools.product("01", repeat=length):
        yield "".join(bits)


def enumerate_set(spec: PathSetSpec) -> Iterator:
    """Yield every member of ``spec`` once, in lexicographic order."""
    budget = _Budget(spec)
    if isinstance(spec, (S1, S2)):
        a = StaircaseA(spec.s, spec.t)
        blocked = lambda p: boundary_contains(a, p)  # noqa: E731
        s, t, n = spec.s, spec.t, spec.n
        if isinstance(spec, S1):
            yield from _grid_paths(ORIGIN, Point(s * n + 1, t * n), blocked, budget)
        else:
            yield from _grid_paths(Point(1, 0), Point(s * n, t * n - 1), blocked, budget)
    elif isinstance(spec, S1Prime):
        s, t, n = spec.s, spec.t, spec.n
        for p in _grid_paths(ORIGIN, Point(s * n + 1, t * n - 1), None, budget):
            yield LatticePath(ORIGIN, p.steps + NORTH)
    elif isinstance(spec, S2Prime):
        s, t, n = spec.s, spec.t, spec.n
        yield from _grid_paths(Point(1, 0), Point(s * n, t * n - 1), None, budget)
    elif isinstance(spec, T):
        for i in range(spec.t):
            a, b = t_endpoints(spec.s, spec.t, spec.n, spec.part, i)
            yield from _grid_paths(a, b, None, budget)
    elif isinstance(spec, Uj):
        a_st = StaircaseA(spec.s, spec.t)
        for p in enumerate_set(T(spec.s, spec.t, spec.n, spec.part)):
            idx = first_contact(p, a_st)
            if idx is not None and residue_class(visited_points(p)[idx].x, spec.s) == spec.j:
                yield p
    elif isinstance(spec, UjPrime):
        a, b = uj_prime_endpoints(spec.s, spec.t, spec.n, spec.j, spec.part)
        yield from _grid_paths(a, b, None, budget)
    elif isinstance(spec, (F, LineAvoiders)):
        if isinstance(spec, F):
            k, length = spec.k, 2 * (spec.k + 1) * spec.n
        else:
            k, length = spec.k, spec.length
        line = StrictRightOfLine(k)
        yield from _length_paths(length, lambda q: avoids(q, line), budget)
    elif isinstance(spec, G):
        b = StaircaseB(2 * spec.k)
        length = 2 * (spec.k + 1) * spec.n + 1
        for p in _length_paths(length, lambda q: avoids(q, b), budget):
            if touches_shifted_line(p, spec.k):
                yield p
    elif isinstance(spec, BAvoiders):
        b = StaircaseB(spec.s)
        yield from _length_paths(spec.length, lambda q: avoids(q, b), budget)
    elif isinstance(spec, AdmissibleBinary):
        n, s, r = spec.n, spec.s, spec.r
        for bits in _all_strings((s + 2) * n + 1, budget):
            if change_count(bits) <= r and is_admissible(bits, n, s):
                yield bits
    elif isinstance(spec, BlockStrings):
        n, s = spec.n, spec.s
        for bits in _all_strings((s + 2) * n + 1, budget):
            if bits[0] == "0" and change_count(bits) == 2 * n - 1:
                yield bits
    else:
        raise TypeError(f"unknown family {spec!r}")


# ---------------------------------------------------------------------------
# dynamic programming


def _check_cells(spec, cells: int) -> None:
    if cells > guard_limit():
        raise GuardExceeded(f"DP guard {guard_limit()} exceeded at {spec} ({cells} cells)")


def grid_count(start: Point, end: Point, blocked=None) -> int:
    """Number of E/N paths start -> end avoiding every point where ``blocked`` holds."""
    w, h = end.x - start.x, end.y - start.y
    if w < 0 or h < 0:
        return 0
    row = [0] * (w + 1)
    for dy in range(h + 1):
        for dx in range(w + 1):
            p = Point(start.x + dx, start.y + dy)
            if blocked is not None and blocked(p):
                row[dx] = 0
            elif dx == 0 and dy == 0:
                row[dx] = 1
            else:
                row[dx] = row[dx] + (row[dx - 1] if dx else 0)
    return row[w]


def _first_hit_counts(start: Point, end: Point, blocked) -> dict[Point, int]:
    """For each blocked point p in the rectangle: paths start -> p meeting no earlier blocked point."""
    w, h = end.x - start.x, end.y - start.y
    clear = [[0] * (w + 1) for _ in range(h + 1)]
    hits: dict[Point, int] = {}
    for dy in range(h + 1):
        for dx in range(w + 1):
            p = Point(start.x + dx, start.y + dy)
            if dx == 0 and dy == 0:
                ways = 1
            else:
                ways = (clear[dy][dx - 1] if dx else 0) + (clear[dy - 1][dx] if dy else 0)
            if blocked(p):
                if ways:
                    hits[p] = ways
            else:
                clear[dy][dx] = ways
    return hits


def _length_dp(length: int, allowed) -> int:
    layer = {ORIGIN: 1}
    for _ in range(length):
        nxt: dict[Point, int] = defaultdict(int)
        for (x, y), c in layer.items():
            for q in (Point(x + 1, y), Point(x, y + 1)):
                if allowed(q):
                    nxt[q] += c
        layer = nxt
    return sum(layer.values())


def _admissible_dp(n: int, s: int, r: int) -> int:
    length = (s + 2) * n + 1
    # state: (last bit, occurrences of 10 so far, changes so far)
    states = Counter({(0, 0, 0): 1, (1, 0, 0): 1})
    for pos in range(1, length):  # appending bit number pos+1; previous bit sits at pos
        nxt: Counter = Counter()
        for (last, occ, ch), c in states.items():
            for bit in (0, 1):
                o, chg = occ, ch
                if bit != last:
                    chg += 1
                    if last == 1:
                        o += 1
                        if pos < (s + 2) * o + 1:
                            continue
                if chg <= r:
                    nxt[(bit, o, chg)] += c
        states = nxt
    return sum(states.values())


def count(spec: PathSetSpec) -> int:
    """Cardinality of ``spec``; lattice DP where the family allows it."""
    if isinstance(spec, (S1, S2)):
        a = StaircaseA(spec.s, spec.t)
        s, t, n = spec.s, spec.t, spec.n
        _check_cells(spec, (s * n + 2) * (t * n + 1))
        blocked = lambda p: boundary_contains(a, p)  # noqa: E731
        if isinstance(spec, S1):
            return grid_count(ORIGIN, Point(s * n + 1, t * n), blocked)
        return grid_count(Point(1, 0), Point(s * n, t * n - 1), blocked)
    if isinstance(spec, S1Prime):
        return grid_count(ORIGIN, Point(spec.s * spec.n + 1, spec.t * spec.n - 1))
    if isinstance(spec, S2Prime):
        return grid_count(Point(1, 0), Point(spec.s * spec.n, spec.t * spec.n - 1))
    if isinstance(spec, T):
        return sum(grid_count(*t_endpoints(spec.s, spec.t, spec.n, spec.part, i)) for i in range(spec.t))
    if isinstance(spec, UjPrime):
        return grid_count(*uj_prime_endpoints(spec.s, spec.t, spec.n, spec.j, spec.part))
    if isinstance(spec, Uj):
        a = StaircaseA(spec.s, spec.t)
        blocked = lambda p: boundary_contains(a, p)  # noqa: E731
        total = 0
        for i in range(spec.t):
            start, end = t_endpoints(spec.s, spec.t, spec.n, spec.part, i)
            _check_cells(spec, (end.x - start.x + 1) * (end.y - start.y + 1))
            for p, ways in _first_hit_counts(start, end, blocked).items():
                if residue_class(p.x, spec.s) == spec.j:
                    total += ways * grid_count(p, end)
        return total
    if isinstance(spec, (F, LineAvoiders)):
        k = spec.k
        length = 2 * (k + 1) * spec.n if isinstance(spec, F) else spec.length
        return _length_dp(length, lambda q: q.x > k * q.y)
    if isinstance(spec, BAvoiders):
        b = StaircaseB(spec.s)
        return _length_dp(spec.length, lambda q: not boundary_contains(b, q))
    if isinstance(spec, G):
        k = spec.k
        b = StaircaseB(2 * k)
        length = 2 * (k + 1) * spec.n + 1
        layer = {(ORIGIN, False): 1}
        for _ in range(length):
            nxt: dict = defaultdict(int)
            for ((x, y), touched), c in layer.items():
                for q in (Point(x + 1, y), Point(x, y + 1)):
                    if not boundary_contains(b, q):
                        nxt[(q, touched or (q.y > 0 and q.x == k * q.y + 1))] += c
            layer = nxt
        return sum(c for (_, touched), c in layer.items() if touched)
    if isinstance(spec, AdmissibleBinary):
        return _admissible_dp(spec.n, spec.s, spec.r)
    if isinstance(spec, BlockStrings):
        return count_by_enumeration(spec)
    raise TypeError(f"unknown family {spec!r}")


def count_by_enumeration(spec: PathSetSpec) -> int:
    return sum(1 for _ in enumerate_set(spec))


def corner_histogram(spec: PathSetSpec, augmented: bool = False) -> dict[int, int]:
    """Histogram of northwest-corner counts over the (optionally augmented) family."""
    if not isinstance(spec, (S1, S2)):
        raise TypeError("corner_histogram is defined for S1 and S2 only")
    hist: Counter = Counter()
    for p in enumerate_set(spec):
        q = augment_plus(p) if augmented else p
        hist[corner_count(q, Corner.NORTHWEST)] += 1
    return dict(sorted(hist.items()))
