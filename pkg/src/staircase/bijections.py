"""Constructive maps behind the counting results.

* ``embed_s1`` / ``interchange`` / ``interchange_inverse``: bad paths of T
  are split at their first boundary contact and the two halves swapped.
* ``encode_alpha_beta`` / ``decode_alpha_beta``: interchanged paths as pairs
  of binary strings with weights differing by two.
* ``raney_unique_shift``: the one cyclic block rotation meeting a prefix bound.
* ``move_norths_to_end``: starting-north paths of S_2 onto the set V.
* ``trisect`` / ``phi`` / ``phi_inverse``: line-avoiding paths of length
  2(k+1)n onto B_{2k}-avoiding paths of length 2(k+1)n+1 that touch x = ky+1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .path_core import (
    EAST,
    NORTH,
    ORIGIN,
    LatticePath,
    Point,
    StaircaseA,
    StaircaseB,
    StrictRightOfLine,
    avoids,
    boundary_contains,
    first_contact,
    is_admissible,
    last_contact,
    nw_corners,
    potential,
    touches_shifted_line,
    visited_points,
    waypoints,
)


class DomainError(ValueError):
    """Input lies outside the domain of a map."""


class RaneyViolation(AssertionError):
    """Zero or several cyclic shifts qualified, contradicting uniqueness."""


def _residue(x: int, s: int) -> int:
    return (x - 1) % s + 1


def _check_part(part: int) -> None:
    if part not in (1, 2):
        raise DomainError(f"part must be 1 or 2, got {part}")


# ---------------------------------------------------------------------------
# embedding and interchange


def embed_s1(pi: LatticePath, s: int, t: int, n: int) -> tuple[int, LatticePath]:
    """Re-root a path of S_1 at its lowest point in column x = 1.

    Returns ``(i, path)`` where the path runs from (1,i) to (sn+1, tn+i).
    """
    if pi.start != ORIGIN or pi.end != Point(s * n + 1, t * n):
        raise DomainError(f"{pi} does not run (0,0) -> ({s * n + 1},{t * n})")
    pts = visited_points(pi)
    for idx, p in enumerate(pts):
        if p.x == 1:
            return p.y, LatticePath(p, pi.steps[idx:] + NORTH * p.y)
    raise DomainError(f"{pi} never visits x = 1")


@dataclass(frozen=True)
class InterchangeSplit:
    rho: LatticePath
    sigma: LatticePath
    bad_point: Point
    j: int


def split_at_first_bad(pi: LatticePath, s: int, t: int) -> InterchangeSplit:
    """Write ``pi = (rho, north, sigma)`` around its first point on A_{s,t}."""
    a = StaircaseA(s, t)
    idx = first_contact(pi, a)
    if idx is None:
        raise DomainError(f"{pi} avoids A_{{{s},{t}}}")
    if idx == 0 or pi.steps[idx - 1] != NORTH:
        raise DomainError(f"first contact of {pi} is not entered by a north step")
    pts = visited_points(pi)
    bad = pts[idx]
    return InterchangeSplit(
        rho=LatticePath(pi.start, pi.steps[:idx - 1]),
        sigma=LatticePath(bad, pi.steps[idx:]),
        bad_point=bad,
        j=_residue(bad.x, s),
    )


def _prime_start(s: int, t: int, j: int, part: int) -> Point:
    return Point(j - 1, t) if part == 1 else Point(j, t + 1)


def _prime_endpoints(s, t, n, j, part) -> tuple[Point, Point]:
    return _prime_start(s, t, j, part), Point(s * n + j, t * n + t - 1)


def _t_end(s, t, n, i, part) -> Point:
    return Point(s * n + 1, t * n + i) if part == 1 else Point(s * n, t * n + i - 1)


def interchange(pi: LatticePath, s: int, t: int, n: int, part: int = 1) -> LatticePath:
    """Send ``(rho, north, sigma)`` to ``(sigma, east, rho)`` from the part's start point."""
    _check_part(part)
    i = pi.start.y
    if pi.start.x != 1 or not 0 <= i < t or pi.end != _t_end(s, t, n, i, part):
        raise DomainError(f"{pi} is not a part-{part} path from (1,i), 0 <= i < {t}, to {_t_end(s, t, n, i, part)}")
    sp = split_at_first_bad(pi, s, t)
    return LatticePath(_prime_start(s, t, sp.j, part), sp.sigma.steps + EAST + sp.rho.steps)


def _last_bad_split(pp: LatticePath, s: int, t: int) -> int:
    idx = last_contact(pp, StaircaseA(s, t))
    if idx is None:
        raise DomainError(f"{pp} never meets A_{{{s},{t}}}")
    if idx >= len(pp.steps) or pp.steps[idx] != EAST:
        raise DomainError(f"last contact of {pp} is not followed by an east step")
    return idx


def _infer_j(pp: LatticePath, t: int, part: int) -> int:
    return pp.start.x + 1 if part == 1 else pp.start.x


def interchange_inverse(pp: LatticePath, s: int, t: int, n: int, j: int | None = None,
                        part: int = 1) -> LatticePath:
    _check_part(part)
    if j is None:
        j = _infer_j(pp, t, part)
    start, end = _prime_endpoints(s, t, n, j, part)
    if pp.start != start or pp.end != end:
        raise DomainError(f"{pp} does not run {start} -> {end}")
    idx = _last_bad_split(pp, s, t)
    sigma, rho = pp.steps[:idx], pp.steps[idx + 1:]
    px = 1 + rho.count(EAST)
    py = -(-px // s) * t  # lowest point of A in column px
    i = py - 1 - rho.count(NORTH)
    if not 0 <= i < t:
        raise DomainError(f"{pp} has no preimage (start height {i})")
    return LatticePath(Point(1, i), rho + NORTH + sigma)


# ---------------------------------------------------------------------------
# (alpha, beta) encoding


def _encoding_frame(s, t, n, j, part):
    (x0, y0), (x1, y1) = _prime_endpoints(s, t, n, j, part)
    if x1 - x0 - 1 < 1:
        raise DomainError(f"no alpha digit to delete (sn={s * n}, part {part})")
    return x0, y0, x1, y1


def encode_alpha_beta(pp: LatticePath, s: int, t: int, n: int, j: int | None = None,
                      part: int = 1) -> tuple[str, str]:
    """Binary pair of a path in U_j'.

    alpha marks corner columns x0+1 .. x1-1 with the column of the last
    boundary contact removed; beta marks corner rows y0+1 .. y1, then a bit
    for "first step is east", then the complement of the removed digit.
    """
    _check_part(part)
    if j is None:
        j = _infer_j(pp, t, part)
    x0, y0, x1, y1 = _encoding_frame(s, t, n, j, part)
    if pp.start != Point(x0, y0) or pp.end != Point(x1, y1):
        raise DomainError(f"{pp} does not run ({x0},{y0}) -> ({x1},{y1})")
    idx = _last_bad_split(pp, s, t)
    qx = visited_points(pp)[idx].x
    corners = nw_corners(pp)
    xs = {c.x for c in corners}
    ys = {c.y for c in corners}
    raw = "".join("1" if x in xs else "0" for x in range(x0 + 1, x1))
    if qx > x0:
        pos = qx - x0 - 1
    elif part == 2:
        pos = 0  # sigma empty or vertical
    else:
        raise DomainError(f"sigma of {pp} has no east step")
    deleted = raw[pos]
    alpha = raw[:pos] + raw[pos + 1:]
    beta = ("".join("1" if y in ys else "0" for y in range(y0 + 1, y1 + 1))
            + ("1" if pp.steps[0] == EAST else "0")
            + ("0" if deleted == "1" else "1"))
    return alpha, beta


def path_from_corners(start: Point, end: Point, xs, ys) -> LatticePath:
    """The unique path start -> end whose northwest corners are zip(sorted xs, sorted ys)."""
    xs, ys = sorted(xs), sorted(ys)
    if len(xs) != len(ys):
        raise DomainError(f"{len(xs)} corner columns but {len(ys)} corner rows")
    bx = [start.x] + xs + [end.x]
    by = [start.y] + ys + [end.y]
    c = len(xs)
    parts = []
    for i in range(c + 1):
        dx, dy = bx[i + 1] - bx[i], by[i + 1] - by[i]
        # corner i is left by an east step; corner i+1 is entered by a north step
        if dx < 0 or dy < 0 or (i >= 1 and dx == 0) or (i < c and dy == 0):
            raise DomainError("corner coordinates are not a valid corner set")
        parts.append(EAST * dx + NORTH * dy)
    return LatticePath(start, "".join(parts))


def _backward_contact(s, t, x0, y0, x1, y1, xs, ys) -> Point | None:
    """Walk back from (x1,y1) along the staircase shape given by corner sets; first point on A."""
    a = StaircaseA(s, t)
    xs, ys = sorted(xs, reverse=True), sorted(ys, reverse=True)
    x, y = x1, y1
    if boundary_contains(a, Point(x, y)):
        return Point(x, y)
    for i in range(max(len(xs), len(ys)) + 1):
        ty = ys[i] if i < len(ys) else y0
        tx = xs[i] if i < len(xs) else x0
        while y > max(ty, y0):
            y -= 1
            if boundary_contains(a, Point(x, y)):
                return Point(x, y)
        while x > max(tx, x0):
            x -= 1
            if boundary_contains(a, Point(x, y)):
                return Point(x, y)
    return None


def decode_alpha_beta(alpha: str, beta: str, s: int, t: int, n: int, j: int,
                      part: int = 1) -> LatticePath:
    _check_part(part)
    x0, y0, x1, y1 = _encoding_frame(s, t, n, j, part)
    la, lb = x1 - x0 - 2, y1 - y0 + 2
    if len(alpha) != la or len(beta) != lb:
        raise DomainError(f"need |alpha|={la}, |beta|={lb}, got {len(alpha)}, {len(beta)}")
    if beta.count("1") != alpha.count("1") + 2:
        raise DomainError("need w(beta) = w(alpha) + 2")
    ys = {y0 + 1 + i for i, b in enumerate(beta[:-2]) if b == "1"}
    corner_at_start = beta[-2] == "0"
    deleted = "0" if beta[-1] == "1" else "1"
    base = {x0} if corner_at_start else set()
    # right-aligned alpha is exact to the right of the deleted column
    tentative = base | {x0 + 2 + i for i, b in enumerate(alpha) if b == "1"}
    q = _backward_contact(s, t, x0, y0, x1, y1, tentative, ys)
    if q is None:
        raise DomainError("reconstruction never meets the boundary")
    if q.x > x0:
        pos = q.x - x0 - 1
    elif part == 2:
        pos = 0
    else:
        raise DomainError("first contact lies in the start column")
    raw = alpha[:pos] + deleted + alpha[pos:]
    xs = base | {x0 + 1 + i for i, b in enumerate(raw) if b == "1"}
    pp = path_from_corners(Point(x0, y0), Point(x1, y1), xs, ys)
    if encode_alpha_beta(pp, s, t, n, j, part) != (alpha, beta):
        raise DomainError(f"({alpha}, {beta}) is not the code of any path")
    return pp


# ---------------------------------------------------------------------------
# cyclic shifts


class RaneyVariant(enum.Enum):
    S1 = "s1"
    S2 = "s2"
    BINARY = "binary"


def s1_blocks(pi: LatticePath, s: int, t: int, n: int) -> list[str]:
    """Split into n blocks, each with t north steps and ending in north."""
    steps = pi.steps
    if steps.count(EAST) != s * n + 1 or steps.count(NORTH) != t * n or not steps.endswith(NORTH):
        raise DomainError(f"{pi} is not in S_1' for s={s}, t={t}, n={n}")
    blocks, cur, norths = [], [], 0
    for st in steps:
        cur.append(st)
        if st == NORTH:
            norths += 1
            if norths % t == 0:
                blocks.append("".join(cur))
                cur = []
    return blocks


def s2_blocks(pi: LatticePath, s: int, t: int, n: int) -> list[str]:
    """Split pi_1 N pi_2 N ... N pi_n with t-1 north steps in each pi_j."""
    steps = pi.steps
    if steps.count(EAST) != s * n - 1 or steps.count(NORTH) != t * n - 1:
        raise DomainError(f"{pi} is not in S_2' for s={s}, t={t}, n={n}")
    blocks, cur, norths = [], [], 0
    for st in steps:
        if st == NORTH:
            norths += 1
            if norths % t == 0:
                blocks.append("".join(cur))
                cur = []
                continue
        cur.append(st)
    blocks.append("".join(cur))
    return blocks


def binary_blocks(bits: str, n: int, s: int) -> list[str]:
    """Split a 0..01..1 0..01..1 ... string into its n zeros-then-ones blocks."""
    if len(bits) != (s + 2) * n + 1 or not bits.startswith("0") or \
            sum(bits[i] != bits[i + 1] for i in range(len(bits) - 1)) != 2 * n - 1:
        raise DomainError(f"{bits} is not a block string for n={n}, s={s}")
    blocks, start = [], 0
    for i in range(len(bits) - 1):
        if bits[i] == "1" and bits[i + 1] == "0":
            blocks.append(bits[start:i + 1])
            start = i + 1
    blocks.append(bits[start:])
    return blocks


def s1_prefix_ok(blocks: list[str], s: int, t: int) -> bool:
    total = 0
    for i, b in enumerate(blocks, start=1):
        total += len(b)
        if total < (s + t) * i + 1:
            return False
    return True


def s2_prefix_ok(blocks: list[str], s: int, t: int) -> bool:
    total = 0
    for i, b in enumerate(blocks[:-1], start=1):
        total += len(b)
        if total < i * (s + t - 1):
            return False
    return True


def binary_prefix_ok(blocks: list[str], s: int) -> bool:
    # the bound at i = 0 would read 0 >= 1; it only makes sense for 1 <= i < n
    total = 0
    for i, b in enumerate(blocks[:-1], start=1):
        total += len(b)
        if total < i * (s + 2) + 1:
            return False
    return True


def _rotate(blocks: list[str], j: int) -> list[str]:
    return blocks[j - 1:] + blocks[:j - 1]


def raney_rotations(obj, variant: RaneyVariant, s: int, t: int | None, n: int):
    """All n cyclic shifts ``(index, object)`` of ``obj``, index 1..n."""
    variant = RaneyVariant(variant)
    if variant is RaneyVariant.S1:
        blocks = s1_blocks(obj, s, t, n)
        return [(j, LatticePath(ORIGIN, "".join(_rotate(blocks, j)))) for j in range(1, n + 1)]
    if variant is RaneyVariant.S2:
        blocks = s2_blocks(obj, s, t, n)
        return [(j, LatticePath(Point(1, 0), NORTH.join(_rotate(blocks, j)))) for j in range(1, n + 1)]
    blocks = binary_blocks(obj, n, s)
    return [(j, "".join(_rotate(blocks, j))) for j in range(1, n + 1)]


def _qualifies(obj, variant: RaneyVariant, s, t, n) -> bool:
    if variant is RaneyVariant.BINARY:
        return is_admissible(obj, n, s)
    return avoids(obj, StaircaseA(s, t))


def raney_unique_shift(obj, variant, s: int, t: int | None, n: int):
    """Return ``(index, shifted)`` for the single qualifying cyclic shift."""
    variant = RaneyVariant(variant)
    good = [(j, o) for j, o in raney_rotations(obj, variant, s, t, n)
            if _qualifies(o, variant, s, t, n)]
    if len(good) != 1:
        raise RaneyViolation(f"{len(good)} qualifying shifts of {obj} ({variant.value}, s={s}, t={t}, n={n})")
    return good[0]


# ---------------------------------------------------------------------------
# N_2 -> V


def move_norths_to_end(pi: LatticePath) -> LatticePath:
    """(1,0): N^a rest  ->  (1,a): rest N^a."""
    if pi.start != Point(1, 0) or not pi.steps.startswith(NORTH):
        raise DomainError(f"{pi} does not start at (1,0) with a north step")
    a = len(pi.steps) - len(pi.steps.lstrip(NORTH))
    return LatticePath(Point(1, a), pi.steps[a:] + NORTH * a)


def move_norths_to_front(p: LatticePath) -> LatticePath:
    i = p.start.y
    if p.start.x != 1 or i < 1 or not p.steps.endswith(NORTH * i):
        raise DomainError(f"{p} does not start at (1,i), i>=1, and end with i north steps")
    return LatticePath(Point(1, 0), NORTH * i + p.steps[:-i])


# ---------------------------------------------------------------------------
# trisection and phi


@dataclass(frozen=True)
class Trisection:
    a: LatticePath
    middle: LatticePath
    b: LatticePath


def potential_difference(path: LatticePath, k: int) -> int:
    return potential(path.end, k) - potential(path.start, k)


def trisect(path: LatticePath, k: int) -> Trisection | None:
    """Split off ``b`` (last north step plus trailing easts) and a balancing prefix ``a``.

    Returns None (failure) when the last k+1 steps are all east.
    """
    if k < 1:
        raise DomainError(f"trisection needs k >= 1, got {k}")
    if potential_difference(path, k) < k + 1:
        raise DomainError(f"potential difference of {path} is below k+1 = {k + 1}")
    steps = path.steps
    trailing = len(steps) - len(steps.rstrip(EAST))
    if trailing >= k + 1:
        return None
    b_start = len(steps) - trailing - 1
    ell = trailing + 1
    pts = visited_points(path)
    base = potential(pts[0], k)
    target = k + 1 - ell
    cut = max(i for i in range(b_start + 1) if potential(pts[i], k) - base == target)
    return Trisection(
        a=LatticePath(pts[0], steps[:cut]),
        middle=LatticePath(pts[cut], steps[cut:b_start]),
        b=LatticePath(pts[b_start], steps[b_start:]),
    )


class PhiCase(enum.Enum):
    EVEN_HEIGHT = "even-height"
    TRAILING_EASTS = "trailing-easts"


@dataclass(frozen=True)
class PhiDecomposition:
    pairs: tuple[tuple[LatticePath, LatticePath], ...]
    tail: LatticePath
    case: PhiCase
    k: int
    n: int

    def reassemble(self) -> str:
        return ("".join(a.steps for a, _ in self.pairs) + self.tail.steps
                + "".join(b.steps for _, b in reversed(self.pairs)))


def _check_f(path: LatticePath, k: int, n: int) -> None:
    if k < 1 or n < 1:
        raise DomainError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if path.start != ORIGIN or len(path) != 2 * (k + 1) * n:
        raise DomainError(f"{path} is not a length-{2 * (k + 1) * n} path from the origin")
    if not avoids(path, StrictRightOfLine(k)):
        raise DomainError(f"{path} meets the line x = {k}y")


def phi_decompose(path: LatticePath, k: int, n: int) -> PhiDecomposition:
    """Phase 1: trisect repeatedly until failure or an even-height prefix."""
    _check_f(path, k, n)
    pairs = []
    cur = path
    while True:
        tri = trisect(cur, k)
        if tri is None:
            return PhiDecomposition(tuple(pairs), cur, PhiCase.TRAILING_EASTS, k, n)
        pairs.append((tri.a, tri.b))
        cur = tri.middle
        if tri.a.height % 2 == 0:
            return PhiDecomposition(tuple(pairs), cur, PhiCase.EVEN_HEIGHT, k, n)


def phi(path: LatticePath, k: int, n: int) -> LatticePath:
    d = phi_decompose(path, k, n)
    pairs = [a.steps + b.steps for a, b in d.pairs]
    if d.case is PhiCase.EVEN_HEIGHT:
        steps = EAST + pairs[-1] + "".join(pairs[:-1]) + d.tail.steps
    else:
        steps = NORTH + EAST * (k + 1) + "".join(pairs) + d.tail.steps[:-(k + 1)]
    return LatticePath(ORIGIN, steps)


def in_g(path: LatticePath, k: int, n: int) -> bool:
    return (path.start == ORIGIN and len(path) == 2 * (k + 1) * n + 1
            and avoids(path, StaircaseB(2 * k)) and touches_shifted_line(path, k))


def _split_pairs(steps: str, start: int, ends: list[int]) -> list[tuple[str, str]]:
    """Cut steps[start:ends[-1]] at waypoint indices, backing up to the last north step."""
    pairs = []
    prev = start
    for w in ends:
        b_start = steps.rfind(NORTH, prev, w)
        if b_start < 0:
            raise DomainError("no north step before a waypoint")
        pairs.append((steps[prev:b_start], steps[b_start:w]))
        prev = w
    return pairs


def phi_inverse(path: LatticePath, k: int, n: int) -> LatticePath:
    if k < 1 or n < 1:
        raise DomainError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if not in_g(path, k, n):
        raise DomainError(f"{path} is not in G_{k}({n})")
    steps = path.steps
    wps = [idx for idx, _ in waypoints(path, k)]
    if not wps:
        raise DomainError(f"{path} has no waypoint")
    if steps[0] == NORTH:
        if wps[0] != k + 2 or steps[:k + 2] != NORTH + EAST * (k + 1):
            raise DomainError(f"{path} does not open with north then {k + 1} east steps")
        pairs = _split_pairs(steps, k + 2, wps[1:])
        last = wps[-1]
        tail = steps[last:] + EAST * (k + 1)
    else:
        pairs = _split_pairs(steps, 1, wps)
        pairs = pairs[1:] + pairs[:1]  # (a_m, b_m) comes first
        tail = steps[wps[-1]:]
    return LatticePath(ORIGIN, "".join(a for a, _ in pairs) + tail + "".join(b for _, b in reversed(pairs)))
