"""Exact combinatorial numbers: Stirling triangles, harmonic, Bernoulli and
Cauchy numbers, and the geometric/exponential polynomial families.

Everything here is exact: arbitrary-precision integers or `fractions.Fraction`.
No floating point enters any computation in this module.
"""

from __future__ import annotations

import math
import threading
from enum import Enum
from fractions import Fraction

__all__ = [
    "TriangleKind",
    "StirlingTriangle",
    "stirling1_unsigned",
    "stirling1_signed",
    "stirling1_row",
    "stirling2",
    "stirling2_row",
    "harmonic",
    "bernoulli",
    "cauchy_first",
    "cauchy_second",
    "euler_poly_at_zero",
    "geometric_poly",
    "exponential_poly",
    "rising_factorial_coeffs",
]


class TriangleKind(Enum):
    FIRST_UNSIGNED = "first-unsigned"
    SECOND = "second"


class StirlingTriangle:
    """Row-memoized triangle of Stirling numbers.

    Rows are built on demand under a lock and published as immutable tuples:
    concurrent readers either see a finished row or trigger its construction
    exactly once.

    First kind (unsigned):  T(n+1, k) = n*T(n, k) + T(n, k-1)
    Second kind:            T(n+1, k) = k*T(n, k) + T(n, k-1)
    with T(0, 0) = 1.
    """

    def __init__(self, kind: TriangleKind):
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            first = self.kind is TriangleKind.FIRST_UNSIGNED
            while n >= len(self._rows):
                m = len(self._rows)
                prev = self._rows[m - 1]
                row = [0] * (m + 1)
                for k, v in enumerate(prev):
                    if v:
                        row[k] += ((m - 1) if first else k) * v
                        row[k + 1] += v
                self._rows.append(tuple(row))
        return self._rows[n]

    def entry(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if k > n:
            return 0
        return self.row(n)[k]


_FIRST = StirlingTriangle(TriangleKind.FIRST_UNSIGNED)
_SECOND = StirlingTriangle(TriangleKind.SECOND)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: coefficient of x^k in
    the rising factorial x(x+1)...(x+n-1).  Zero when k > n."""
    return _FIRST.entry(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind, (-1)^(n-k) times the
    unsigned one."""
    s = _FIRST.entry(n, k)
    return -s if (n - k) % 2 else s


def stirling1_row(n: int) -> tuple[int, ...]:
    """Row n of the unsigned first-kind triangle, entries k = 0..n."""
    return _FIRST.row(n)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into k
    nonempty blocks.  Zero when k > n."""
    return _SECOND.entry(n, k)


def stirling2_row(n: int) -> tuple[int, ...]:
    """Row n of the second-kind triangle, entries k = 0..n."""
    return _SECOND.row(n)


_harmonic_lock = threading.Lock()
_H1: list[Fraction] = [Fraction(0)]
_H2: list[Fraction] = [Fraction(0)]


def harmonic(n: int, order: int = 1) -> Fraction:
    """Harmonic number H_n (order 1) or H_n^(2) (order 2), with H_0 = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    cache = _H1 if order == 1 else _H2
    if n >= len(cache):
        with _harmonic_lock:
            while n >= len(cache):
                m = len(cache)
                cache.append(cache[m - 1] + Fraction(1, m if order == 1 else m * m))
    return cache[n]


_bernoulli_lock = threading.Lock()
_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the convention B_1 = -1/2.

    Computed by the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0,
    which yields B_1 = -1/2 directly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_BERNOULLI):
        with _bernoulli_lock:
            while n >= len(_BERNOULLI):
                m = len(_BERNOULLI)
                acc = Fraction(0)
                for j in range(m):
                    acc += math.comb(m + 1, j) * _BERNOULLI[j]
                _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def cauchy_first(n: int) -> Fraction:
    """Cauchy number of the first kind c_n: the integral over [0, 1] of the
    falling factorial x(x-1)...(x-n+1), evaluated exactly as
    sum_k s(n, k)/(k+1) with signed Stirling numbers."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = stirling1_row(n)
    acc = Fraction(0)
    for k, v in enumerate(row):
        if v:
            acc += Fraction(-v if (n - k) % 2 else v, k + 1)
    return acc


def cauchy_second(n: int) -> Fraction:
    """Cauchy number of the second kind d_n: the integral over [0, 1] of the
    rising factorial x(x+1)...(x+n-1), i.e. sum_k [n, k]/(k+1).

    d_n > 0 for all n; the alternating-sign variant sometimes seen in the
    literature is a sign-convention slip, adjudicated numerically by the
    log(1 - 1/z) expansion check in the verify suite.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = stirling1_row(n)
    return sum((Fraction(v, k + 1) for k, v in enumerate(row) if v), Fraction(0))


def euler_poly_at_zero(n: int) -> Fraction:
    """E_n(0) = 2 (1 - 2^(n+1)) B_(n+1) / (n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 2 * (1 - 2 ** (n + 1)) * bernoulli(n + 1) / (n + 1)


def geometric_poly(n: int, x: Fraction) -> Fraction:
    """Geometric polynomial w_n(x) = sum_k S(n, k) k! x^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    acc = Fraction(0)
    for k, s in enumerate(stirling2_row(n)):
        if s:
            acc += s * math.factorial(k) * x**k
    return acc


def exponential_poly(n: int, x: Fraction) -> Fraction:
    """Exponential (Bell) polynomial phi_n(x) = sum_k S(n, k) x^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    acc = Fraction(0)
    for k, s in enumerate(stirling2_row(n)):
        if s:
            acc += s * x**k
    return acc


def rising_factorial_coeffs(n: int) -> list[int]:
    """Coefficients of x^0..x^n in x(x+1)...(x+n-1), by direct polynomial
    multiplication.

    Deliberately does not touch the Stirling triangle, so it serves as an
    independent cross-check of `stirling1_unsigned`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [1]
    for i in range(n):
        # multiply by (x + i)
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] += i * c
            nxt[j + 1] += c
        coeffs = nxt
    return coeffs
