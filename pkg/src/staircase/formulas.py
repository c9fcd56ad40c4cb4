"""Exact closed-form counts.

All arithmetic is on Python ints; nothing here touches floating point.
"""

from __future__ import annotations

from math import comb


class PreconditionError(ValueError):
    """Arguments outside a formula's stated domain."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k < 0 or k > n. Negative n is rejected."""
    if n < 0:
        raise PreconditionError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _binom0(n: int, k: int) -> int:
    # zero outside 0 <= k <= n, including every negative n
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def classic_count(k: int, a: int, b: int) -> int:
    """Paths (0,0) -> (a+1, b) staying strictly right of x = k*y."""
    _require(k >= 1 and b >= 0 and a >= k * b, f"need k>=1, b>=0, a>=kb (k={k}, a={a}, b={b})")
    return binomial(a + b, b) - k * binomial(a + b, b - 1)


def classic_nw_count(k: int, a: int, b: int, c: int) -> int:
    """As :func:`classic_count`, restricted to paths with c-1 northwest corners."""
    _require(k >= 1 and b >= 0 and a >= k * b and c >= 1,
             f"need k>=1, b>=0, a>=kb, c>=1 (k={k}, a={a}, b={b}, c={c})")
    return (binomial(a, c - 1) * binomial(b, c - 1)
            - k * _binom0(a - 1, c - 2) * binomial(b + 1, c))


def _check_stn(s: int, t: int, n: int) -> None:
    _require(s >= 1 and t >= 1 and n >= 1, f"need s,t,n >= 1 (s={s}, t={t}, n={n})")


def thm1_nw1(s: int, t: int, n: int, c: int) -> int:
    _check_stn(s, t, n)
    _require(c >= 1, f"need c >= 1, got {c}")
    return (t * binomial(s * n, c - 1) * binomial(t * n, c - 1)
            - s * binomial(s * n - 1, c - 2) * binomial(t * n + 1, c))


def thm1_nw2(s: int, t: int, n: int, c: int) -> int:
    _check_stn(s, t, n)
    _require(c >= 1, f"need c >= 1, got {c}")
    _require(s * n >= 2, f"need sn >= 2 (s={s}, n={n})")
    return (t * binomial(s * n - 1, c - 1) * binomial(t * n - 1, c - 1)
            - s * binomial(s * n - 2, c - 2) * binomial(t * n, c))


def thm1_nw2_degenerate(s: int, t: int, n: int, c: int) -> int:
    """The part-two corner formula evaluated with C(n,k)=0 for every negative n.

    Only meaningful for reporting the sn = 1 case, which lies outside
    :func:`thm1_nw2`'s domain.
    """
    return (t * _binom0(s * n - 1, c - 1) * _binom0(t * n - 1, c - 1)
            - s * _binom0(s * n - 2, c - 2) * _binom0(t * n, c))


def total1(s: int, t: int, n: int) -> int:
    _check_stn(s, t, n)
    sn, tn = s * n, t * n
    return t * binomial(sn + tn, tn) - s * binomial(sn + tn, tn - 1)


def total2(s: int, t: int, n: int) -> int:
    _check_stn(s, t, n)
    sn, tn = s * n, t * n
    return t * binomial(sn + tn - 2, tn - 1) - s * binomial(sn + tn - 2, tn - 2)


def total1_cyclic(s: int, t: int, n: int) -> int:
    """C(sn+tn, sn+1) / n, the cyclic-shift form of :func:`total1`."""
    _check_stn(s, t, n)
    return _exact_div(binomial(s * n + t * n, s * n + 1), n)


def total2_cyclic(s: int, t: int, n: int) -> int:
    _check_stn(s, t, n)
    return _exact_div(binomial(s * n + t * n - 2, t * n - 1), n)


def binary_count(n: int, s: int, r: int) -> int:
    """Admissible binary strings of length (s+2)n+1 with at most r changes."""
    _require(n >= 1 and s >= 0 and 0 <= r <= 2 * n, f"need n>=1, s>=0, 0<=r<=2n (n={n}, s={s}, r={r})")
    m = (s + 2) * n - 1
    return 2 * binomial(m, r) - (s - 2) * sum(binomial(m, i) for i in range(r))


def sum_count(k: int, n: int) -> int:
    _require(k >= 0 and n >= 1, f"need k>=0, n>=1 (k={k}, n={n})")
    m = 2 * (k + 1) * n
    return binomial(m, 2 * n) - (k - 1) * sum(binomial(m, i) for i in range(2 * n))


def exact_changes_count(n: int, s: int) -> int:
    """Admissible strings with exactly 2n-1 changes: C((s+2)n, 2n-1) / n."""
    _require(n >= 1 and s >= 0, f"need n>=1, s>=0 (n={n}, s={s})")
    return _exact_div(binomial((s + 2) * n, 2 * n - 1), n)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


FORMULAS = {
    "classic": (classic_count, ("k", "a", "b")),
    "classic-nw": (classic_nw_count, ("k", "a", "b", "c")),
    "thm1-nw1": (thm1_nw1, ("s", "t", "n", "c")),
    "thm1-nw2": (thm1_nw2, ("s", "t", "n", "c")),
    "total1": (total1, ("s", "t", "n")),
    "total2": (total2, ("s", "t", "n")),
    "binary": (binary_count, ("n", "s", "r")),
    "sum": (sum_count, ("k", "n")),
    "exact-changes": (exact_changes_count, ("n", "s")),
}
