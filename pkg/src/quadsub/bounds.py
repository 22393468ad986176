"""Exact values of the size functions B(m, n, h), C(s), C0(s) and their envelopes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

DEFAULT_REPORT_CEILING = 8


def _check_args(m, n, h):
    if m < 0 or n < 0 or h < 0:
        raise ValueError(f"B({m},{n},{h}): arguments must be nonnegative")
    if h > n:
        raise ValueError(f"B({m},{n},{h}): need h <= n")


@lru_cache(maxsize=None)
def bound_B(m: int, n: int, h: int) -> int:
    """B(m,n,0) = m(n+1); B(m,n,h) = (m+h)(n^3+n^2+n+1) + h(n+1) + B((m+h)n^2, n, h-1)."""
    _check_args(m, n, h)
    if h == 0:
        return m * (n + 1)
    return ((m + h) * (n ** 3 + n ** 2 + n + 1) + h * (n + 1)
            + bound_B((m + h) * n * n, n, h - 1))


def bound_B_unmemoized(m: int, n: int, h: int) -> int:
    """Iterative evaluation of the same recursion, without the cache."""
    _check_args(m, n, h)
    total = 0
    while h > 0:
        total += (m + h) * (n ** 3 + n ** 2 + n + 1) + h * (n + 1)
        m, h = (m + h) * n * n, h - 1
    return total + m * (n + 1)


def admissible(s: int):
    """Triples (m, n, h) with m + n = s and 0 <= h <= n - 1."""
    for n in range(0, s + 1):
        m = s - n
        for h in range(0, n):
            yield m, n, h


@lru_cache(maxsize=None)
def bound_C(s: int) -> int:
    """Largest B(m,n,h) + h over admissible triples with m + n = s."""
    if s < 1:
        raise ValueError("C(s) needs s >= 1")
    return max(bound_B(m, n, h) + h for m, n, h in admissible(s))


@lru_cache(maxsize=None)
def bound_C0(s: int) -> int:
    """Largest B(0,n,h) + m + h over admissible triples with m + n = s."""
    if s < 1:
        raise ValueError("C0(s) needs s >= 1")
    return max(bound_B(0, n, h) + m + h for m, n, h in admissible(s))


def theta(h: int, t: int) -> int:
    """sum_{i<h} t^i."""
    if h < 0:
        raise ValueError("theta needs h >= 0")
    if t == 1:
        return h
    return (t ** h - 1) // (t - 1)


def g_poly(n: int) -> int:
    return n ** 3 + n ** 2 + n + 1


def g1_poly(n: int) -> int:
    return g_poly(n) + n + 1


def envelope(m: int, n: int, h: int) -> tuple:
    """(lower, upper) estimates bracketing B(m, n, h)."""
    _check_args(m, n, h)
    t = n * n
    lower = (m + h) * ((n + 1) * t ** h + g_poly(n) * theta(h, t))
    upper = (m + h) * ((n + 1) * (t + 1) ** h + g1_poly(n) * theta(h, t + 1))
    return lower, upper


def C_lower(s: int) -> int:
    """Lower estimate for C(s) from m = 0, n = s, h = s - 1."""
    t = s * s
    return (s - 1) * ((s + 1) * t ** (s - 1) + g_poly(s) * theta(s - 1, t)) + (s - 1)


def C_upper(s: int) -> int:
    t = s * s + 1
    return (s - 1) * ((s + 1) * t ** (s - 1) + g1_poly(s) * theta(s - 1, t)) + (s - 1)


@dataclass(frozen=True)
class AsymptoticRow:
    s: int
    C: int
    C0: int
    model: int          # 2 s^(2s)
    ratio_C: Fraction
    ratio_C0: Fraction


def asymptotic_report(s_max: int, ceiling: int = DEFAULT_REPORT_CEILING) -> list:
    """Exact rows (s, C(s), C0(s), 2s^(2s), ratios) for 1 <= s <= s_max."""
    if s_max > ceiling:
        raise ValueError(f"s_max={s_max} exceeds the configured ceiling {ceiling}")
    rows = []
    for s in range(1, s_max + 1):
        model = 2 * s ** (2 * s)
        c, c0 = bound_C(s), bound_C0(s)
        rows.append(AsymptoticRow(s, c, c0, model, Fraction(c, model), Fraction(c0, model)))
    return rows


def format_report(rows) -> str:
    lines = ["s\tC(s)\tC0(s)\t2s^(2s)\tC/2s^(2s)\tC0/2s^(2s)"]
    for r in rows:
        lines.append(f"{r.s}\t{r.C}\t{r.C0}\t{r.model}\t{r.ratio_C}\t{r.ratio_C0}")
    return "\n".join(lines)


class BoundTable:
    """Memoized access to B, C and C0 for one session."""

    def __init__(self):
        self.memo: dict = {}
        self.c_memo: dict = {}
        self.c0_memo: dict = {}

    def B(self, m, n, h):
        key = (m, n, h)
        if key not in self.memo:
            self.memo[key] = bound_B(m, n, h)
        return self.memo[key]

    def C(self, s):
        if s not in self.c_memo:
            self.c_memo[s] = bound_C(s)
        return self.c_memo[s]

    def C0(self, s):
        if s not in self.c0_memo:
            self.c0_memo[s] = bound_C0(s)
        return self.c0_memo[s]
