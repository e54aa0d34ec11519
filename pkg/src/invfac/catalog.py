"""Catalog of inverse-factorial representations and the special-function
evaluators built on them: reciprocal-power expansions, zeta and Hurwitz zeta
sums, trigamma, Nielsen beta, the lower incomplete gamma, the two
Cauchy-number logarithm expansions, the polylogarithm, Binet's log-gamma
series, Euler sums, and the asymptotic (divergent) companion series.

Tail completions
----------------
Whenever the coefficient sequence b_n is the Stirling transform of an
elementary sequence u_k (b_n = sum_k [n,k] u_k), the remainder of the
factorial series past index N collapses to closed form.  The building block
is the exact identity

    sum_{n>N} [n,k] / (z(z+1)...(z+n))
        = sum_{r=0}^{k-1} [N+1, k-r] / (z^(r+1) * z(z+1)...(z+N)),

proved by telescoping beta-function sums; summing it against u_k gives a
remainder that is elementary for u = 1, k, k^2, w^k, S(k+1,p+1), and a single
smooth integral for u = (+-1)^k/(k+1).  Series whose u-sequence grows
factorially (trigamma, Nielsen beta) have no convergent completion and use
the engine's decay-regime correction instead.
"""

from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

import numpy as np

from . import oracles
from .exact import (
    bernoulli,
    cauchy_first,
    cauchy_second,
    euler_poly_at_zero,
    exponential_poly,
    harmonic,
    stirling1_row,
    stirling1_unsigned,
)
from .engine import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    AsymptoticSeries,
    DomainError,
    EvalResult,
    FactorialSeries,
    eval_factorial_series,
    sum_series,
)

__all__ = [
    "Representation",
    "BoundRepresentation",
    "PnPolynomial",
    "catalog",
    "catalog_keys",
    "get_representation",
    "evaluate_representation",
    "pn_polynomial",
    "f_antiderivative",
    "f_antiderivative_closed",
    "f_antiderivative_series",
    "polylog_via_stirling",
    "alt_sum_closed_form",
    "euler_sum_lhs",
    "binet_coefficient",
    "binet_log_gamma",
    "binomial_identity",
    "binomial_series_numeric",
    "asymptotic_catalog",
    "beta_asymptotic",
    "trigamma_asymptotic",
    "incgamma_asymptotic",
    "PI2_6",
    "LN_SQRT_2PI",
]

PI2_6 = math.pi * math.pi / 6.0
LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


# ---------------------------------------------------------------------------
# shared numerical helpers
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=1)
def _gauss_legendre_01() -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(64)
    return 0.5 * (x + 1.0), 0.5 * w


def _pref(N: int, z: float) -> float:
    """(N+1)! / (z(z+1)...(z+N)) in float, via log-gamma."""
    return math.exp(math.lgamma(N + 2) + math.lgamma(z) - math.lgamma(z + N + 1))


def _stirling_ratio_row(n: int, kmax: int) -> list[float]:
    """[n, j]/n! for j = 0..kmax as floats, from the exact triangle."""
    row = stirling1_row(n)
    fn = math.factorial(n)
    return [float(Fraction(row[j], fn)) if j <= n and row[j] else 0.0 for j in range(kmax + 1)]


class _StirlingRatioIter:
    """Float row r_n(j) = [n, j]/n! for j <= kmax, advanced by one n per step.

    Exact recurrence r_(n+1)(j) = (n r_n(j) + r_n(j-1)) / (n+1); entries stay
    in [0, 1] so the float recurrence is stable.
    """

    def __init__(self, kmax: int):
        self.kmax = kmax
        self.n = 0
        self.r = [1.0] + [0.0] * kmax

    def advance(self) -> None:
        n = self.n
        r = self.r
        new = [0.0] * (self.kmax + 1)
        for j in range(self.kmax + 1):
            v = n * r[j]
            if j > 0:
                v += r[j - 1]
            new[j] = v / (n + 1)
        self.r = new
        self.n = n + 1

    def at(self, n: int) -> list[float]:
        while self.n < n:
            self.advance()
        return self.r


# ---------------------------------------------------------------------------
# exact tail completions (Stirling-transform coefficient sequences)
# ---------------------------------------------------------------------------

def _tail_constant(N: int, z: float) -> tuple[float, float]:
    # u_k = 1 (coefficients n!)
    t = _pref(N, z) / (z - 1.0)
    return t, 8e-15 * abs(t)


def _tail_linear(N: int, z: float) -> tuple[float, float]:
    # u_k = k (coefficients n! H_n)
    m1 = float(harmonic(N + 1))
    t = _pref(N, z) * (m1 / (z - 1.0) + 1.0 / (z - 1.0) ** 2)
    return t, 8e-15 * abs(t)


def _tail_quadratic(N: int, z: float) -> tuple[float, float]:
    # u_k = k^2 (coefficients n!(H_n + H_n^2 - H_n^(2)))
    h1 = float(harmonic(N + 1))
    h2 = float(harmonic(N + 1, 2))
    m1 = h1
    m2 = h1 * h1 + h1 - h2
    t = _pref(N, z) * (
        m2 / (z - 1.0) + 2.0 * m1 / (z - 1.0) ** 2 + (z + 1.0) / (z - 1.0) ** 3
    )
    return t, 8e-15 * abs(t)


def _tail_pochhammer(w: float) -> Callable[[int, float], tuple[float, float]]:
    # u_k = w^k (coefficients w(w+1)...(w+n-1))
    def tail(N: int, z: float) -> tuple[float, float]:
        rw = math.exp(math.lgamma(w + N + 1) - math.lgamma(w) - math.lgamma(N + 2))
        t = _pref(N, z) * rw / (z - w)
        return t, 8e-15 * abs(t)

    return tail


def _tail_rational_p(p: int) -> Callable[[int, float], tuple[float, float]]:
    # u_k = S(k+1, p+1) (coefficients n! C(n,p)/p!)
    q = p + 1

    def tail(N: int, z: float) -> tuple[float, float]:
        acc = 0.0
        for i in range(1, q + 1):
            ri = math.exp(math.lgamma(i + N + 1) - math.lgamma(i) - math.lgamma(N + 2))
            term = math.comb(q, i) * ri * i / (z - i)
            acc += -term if (q - i) % 2 else term
        t = _pref(N, z) * acc / math.factorial(q)
        return t, 2e-13 * abs(t)

    return tail


def _tail_kernel(k: int) -> Callable[[int, float], tuple[float, float]]:
    # u_j = delta_{jk} (coefficients [n, k])
    def tail(N: int, z: float) -> tuple[float, float]:
        r = _stirling_ratio_row(N + 1, k)
        pref = _pref(N, z)
        acc = 0.0
        zpow = z
        for i in range(k):  # r index in the identity, j = k - i >= 1
            acc += r[k - i] / zpow
            zpow *= z
        t = pref * acc
        return t, 8e-15 * abs(t)

    return tail


def _tail_log_minus(N: int, z: float) -> tuple[float, float]:
    # u_k = 1/(k+1) (coefficients d_n): single smooth integral
    s, w = _gauss_legendre_01()
    lg = np.array(
        [math.lgamma(N + 1 + si) - math.lgamma(1 + si) - math.lgamma(N + 2) for si in s]
    )
    vals = np.exp(lg) * s / (z - s)
    t = _pref(N, z) * float(np.dot(w, vals))
    return t, 5e-13 * abs(t)


def _tail_log_plus(N: int, z: float) -> tuple[float, float]:
    # u_k = (-1)^k/(k+1) (coefficients (-1)^n c_n)
    s, w = _gauss_legendre_01()
    lg = np.array(
        [math.lgamma(N + 1 - si) - math.lgamma(1 - si) - math.lgamma(N + 2) for si in s]
    )
    vals = np.exp(lg) * s / (z + s)
    t = -_pref(N, z) * float(np.dot(w, vals))
    return t, 5e-13 * abs(t)


# ---------------------------------------------------------------------------
# float term generators
# ---------------------------------------------------------------------------

def _terms_weighted_factorial(weight: Callable[[int], float]) -> Callable[[float], Iterator[float]]:
    """Terms w(n) * n!/(z...(z+n)) with the n!-kernel ratio n/(z+n)."""

    def gen(z: float) -> Iterator[float]:
        base = 1.0 / z  # n = 0: 0!/(z)
        n = 0
        while True:
            yield weight(n) * base
            n += 1
            base *= n / (z + n)

    return gen


def _terms_pochhammer(w: float) -> Callable[[float], Iterator[float]]:
    def gen(z: float) -> Iterator[float]:
        t = w / (z * (z + 1.0))  # n = 1 term; n = 0 term is w^(0 terms) = 1/z
        yield 1.0 / z
        n = 1
        while True:
            yield t
            n += 1
            t *= (w + n - 1.0) / (z + n)

    return gen


def _terms_incgamma(x: float) -> Callable[[float], Iterator[float]]:
    def gen(z: float) -> Iterator[float]:
        t = 1.0 / z
        n = 0
        while True:
            yield t
            n += 1
            t *= x / (z + n)

    return gen


def _terms_kernel(k: int) -> Callable[[float], Iterator[float]]:
    def gen(z: float) -> Iterator[float]:
        it = _StirlingRatioIter(k)
        base = float(math.factorial(k))  # n!/(z...(z+n)) at n = k
        for i in range(k + 1):
            base /= z + i
        n = k
        r = it.at(n)
        while True:
            yield r[k] * base
            n += 1
            base *= n / (z + n)
            it.advance()
            r = it.r

    return gen


def _weight_cached_rational(values: Callable[[int], Fraction]) -> Callable[[int], float]:
    @functools.lru_cache(maxsize=None)
    def w(n: int) -> float:
        return float(Fraction(values(n), math.factorial(n)))

    return w


# ---------------------------------------------------------------------------
# representation objects
# ---------------------------------------------------------------------------

@dataclass
class BoundRepresentation:
    """A catalog entry with its parameters bound to concrete values."""

    name: str
    kind: str  # "factorial" (needs z) or "direct" (plain sum, no z)
    params: dict
    domain_text: str
    series: Optional[FactorialSeries] = None
    domain: Optional[Callable[[float], bool]] = None
    closed_form: Optional[Callable[[float], float]] = None  # of z
    direct_terms: Optional[Callable[[], Iterator[float]]] = None
    direct_start: int = 1
    direct_value: Optional[Callable[[], float]] = None  # reference value

    def evaluate(
        self,
        z: Optional[float] = None,
        tol: float = DEFAULT_TOL,
        max_terms: int = DEFAULT_MAX_TERMS,
    ) -> EvalResult:
        if self.kind == "factorial":
            if z is None:
                raise DomainError(f"{self.name} needs an evaluation point z")
            z = float(z)
            if self.domain is not None and not self.domain(z):
                raise DomainError(f"{self.name}: z = {z} outside domain {self.domain_text}")
            return eval_factorial_series(self.series, z, tol=tol, max_terms=max_terms)
        return sum_series(self.direct_terms(), start=self.direct_start, tol=tol, max_terms=max_terms)

    def reference(self, z: Optional[float] = None) -> Optional[float]:
        if self.kind == "factorial":
            return None if self.closed_form is None else self.closed_form(float(z))
        return None if self.direct_value is None else self.direct_value()


@dataclass(frozen=True)
class Representation:
    """Catalog entry: a named coefficient rule with parameter schema, domain,
    and closed form / reference oracle."""

    name: str
    kind: str
    param_names: tuple[str, ...]
    domain_text: str
    summary: str
    _bind: Callable[..., BoundRepresentation]

    def bind(self, **params) -> BoundRepresentation:
        unknown = set(params) - set(self.param_names)
        if unknown:
            raise ValueError(f"{self.name}: unknown parameters {sorted(unknown)}")
        missing = set(self.param_names) - set(params)
        if missing:
            raise ValueError(f"{self.name}: missing parameters {sorted(missing)}")
        return self._bind(**params)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


# --- individual builders ----------------------------------------------------

def _bind_stirling_kernel(k) -> BoundRepresentation:
    k = int(k)
    _require(k >= 0, "k must be >= 0")
    return BoundRepresentation(
        name="stirling_kernel",
        kind="factorial",
        params={"k": k},
        domain_text="z > 0",
        series=FactorialSeries(
            lambda n: Fraction(stirling1_unsigned(n, k)),
            f"sum of [n,{k}]/(z...(z+n))",
            start=k,
            float_terms=_terms_kernel(k),
            exact_tail=_tail_kernel(k),
        ),
        domain=lambda z: z > 0,
        closed_form=lambda z: z ** (-(k + 1)),
    )


def _bind_reciprocal() -> BoundRepresentation:
    return BoundRepresentation(
        name="reciprocal",
        kind="factorial",
        params={},
        domain_text="z > 1",
        series=FactorialSeries(
            lambda n: Fraction(math.factorial(n)),
            "coefficients n!",
            float_terms=_terms_weighted_factorial(lambda n: 1.0),
            exact_tail=_tail_constant,
        ),
        domain=lambda z: z > 1,
        closed_form=lambda z: 1.0 / (z - 1.0),
    )


def _bind_reciprocal_sq() -> BoundRepresentation:
    def gen(z: float) -> Iterator[float]:
        base = 1.0 / z
        h = 0.0
        n = 0
        while True:
            yield h * base
            n += 1
            h += 1.0 / n
            base *= n / (z + n)

    return BoundRepresentation(
        name="reciprocal_sq",
        kind="factorial",
        params={},
        domain_text="z > 1",
        series=FactorialSeries(
            lambda n: math.factorial(n) * harmonic(n),
            "coefficients n! H_n",
            float_terms=gen,
            exact_tail=_tail_linear,
        ),
        domain=lambda z: z > 1,
        closed_form=lambda z: 1.0 / (z - 1.0) ** 2,
    )


def _bind_k2_series() -> BoundRepresentation:
    def gen(z: float) -> Iterator[float]:
        base = 1.0 / z
        h = 0.0
        h2 = 0.0
        n = 0
        while True:
            yield (h + h * h - h2) * base
            n += 1
            h += 1.0 / n
            h2 += 1.0 / (n * n)
            base *= n / (z + n)

    return BoundRepresentation(
        name="k2_series",
        kind="factorial",
        params={},
        domain_text="z > 1",
        series=FactorialSeries(
            lambda n: math.factorial(n) * (harmonic(n) + harmonic(n) ** 2 - harmonic(n, 2)),
            "coefficients n!(H_n + H_n^2 - H_n^(2))",
            float_terms=gen,
            exact_tail=_tail_quadratic,
        ),
        domain=lambda z: z > 1,
        closed_form=lambda z: (z + 1.0) / (z - 1.0) ** 3,
    )


def _bind_pochhammer(w) -> BoundRepresentation:
    w = Fraction(w)
    _require(w > 0, "w must be positive")
    wf = float(w)

    def coeff(n: int) -> Fraction:
        acc = Fraction(1)
        for i in range(n):
            acc *= w + i
        return acc

    return BoundRepresentation(
        name="pochhammer_ratio",
        kind="factorial",
        params={"w": w},
        domain_text=f"z > {wf}",
        series=FactorialSeries(
            coeff,
            "coefficients w(w+1)...(w+n-1)",
            float_terms=_terms_pochhammer(wf),
            exact_tail=_tail_pochhammer(wf),
        ),
        domain=lambda z: z > wf,
        closed_form=lambda z: 1.0 / (z - wf),
    )


def _bind_rational_p(p) -> BoundRepresentation:
    p = int(p)
    _require(p >= 0, "p must be >= 0")

    def closed(z: float) -> float:
        acc = 1.0
        for j in range(1, p + 2):
            acc *= z - j
        return 1.0 / acc

    fp = math.factorial(p)
    return BoundRepresentation(
        name="rational_p",
        kind="factorial",
        params={"p": p},
        domain_text=f"z > {p + 1}",
        series=FactorialSeries(
            lambda n: Fraction(math.factorial(n) * math.comb(n, p), fp),
            "coefficients n! C(n,p)/p!",
            start=p,
            float_terms=_terms_weighted_factorial(lambda n: math.comb(n, p) / fp),
            exact_tail=_tail_rational_p(p),
        ),
        domain=lambda z: z > p + 1,
        closed_form=closed,
    )


def _bind_trigamma_fac() -> BoundRepresentation:
    return BoundRepresentation(
        name="trigamma_fac",
        kind="factorial",
        params={},
        domain_text="z > 0",
        series=FactorialSeries(
            lambda n: Fraction(math.factorial(n), n + 1),
            "coefficients n!/(n+1)",
            float_terms=_terms_weighted_factorial(lambda n: 1.0 / (n + 1.0)),
        ),
        domain=lambda z: z > 0,
        closed_form=lambda z: oracles.trigamma_direct(z).value,
    )


def _bind_nielsen_beta_fac() -> BoundRepresentation:
    return BoundRepresentation(
        name="nielsen_beta_fac",
        kind="factorial",
        params={},
        domain_text="z > 0",
        series=FactorialSeries(
            lambda n: Fraction(math.factorial(n), 2 ** (n + 1)),
            "coefficients n!/2^(n+1)",
            float_terms=_terms_weighted_factorial(lambda n: 0.5**(n + 1)),
        ),
        domain=lambda z: z > 0,
        closed_form=lambda z: oracles.beta_direct(z).value,
    )


def _bind_incgamma(x) -> BoundRepresentation:
    x = Fraction(x)
    _require(x > 0, "x must be positive")
    xf = float(x)
    return BoundRepresentation(
        name="incgamma",
        kind="factorial",
        params={"x": x},
        domain_text="z > 0",
        series=FactorialSeries(
            lambda n: x**n,
            "coefficients x^n",
            float_terms=_terms_incgamma(xf),
        ),
        domain=lambda z: z > 0,
        closed_form=lambda z: oracles.gamma_lower_direct(z, xf).value
        * math.exp(xf - z * math.log(xf)),
    )


def _bind_log_shift_minus() -> BoundRepresentation:
    weight = _weight_cached_rational(cauchy_second)
    return BoundRepresentation(
        name="log_shift_minus",
        kind="factorial",
        params={},
        domain_text="z > 1",
        series=FactorialSeries(
            cauchy_second,
            "coefficients d_n (Cauchy, second kind)",
            float_terms=_terms_weighted_factorial(weight),
            exact_tail=_tail_log_minus,
        ),
        domain=lambda z: z > 1,
        closed_form=lambda z: -math.log1p(-1.0 / z),
    )


def _bind_log_shift_plus() -> BoundRepresentation:
    def signed_c(n: int) -> Fraction:
        v = cauchy_first(n)
        return -v if n % 2 else v

    weight = _weight_cached_rational(signed_c)
    return BoundRepresentation(
        name="log_shift_plus",
        kind="factorial",
        params={},
        domain_text="z > 0",
        series=FactorialSeries(
            signed_c,
            "coefficients (-1)^n c_n (Cauchy, first kind)",
            float_terms=_terms_weighted_factorial(weight),
            exact_tail=_tail_log_plus,
        ),
        domain=lambda z: z > 0,
        closed_form=lambda z: math.log1p(1.0 / z),
    )


def _zeta_terms(k: int) -> Callable[[], Iterator[float]]:
    def gen() -> Iterator[float]:
        it = _StirlingRatioIter(k)
        r = it.at(max(k, 1))
        n = max(k, 1)
        while True:
            yield r[k] / n
            n += 1
            it.advance()
            r = it.r

    return gen


def _bind_zeta(k) -> BoundRepresentation:
    k = int(k)
    _require(k >= 1, "k must be >= 1")
    return BoundRepresentation(
        name="zeta",
        kind="direct",
        params={"k": k},
        domain_text="plain sum over n (no z)",
        direct_terms=_zeta_terms(k),
        direct_start=max(k, 1),
        direct_value=lambda: oracles.zeta_direct(k + 1).value,
    )


def _bind_hurwitz(k, a) -> BoundRepresentation:
    k = int(k)
    a = Fraction(a)
    _require(k >= 1, "k must be >= 1")
    _require(a > 0, "a must be positive")
    af = float(a)

    def gen() -> Iterator[float]:
        it = _StirlingRatioIter(k)
        n0 = max(k, 1)
        r = it.at(n0)
        # Q_n = n! / (a(a+1)...(a+n-1)); Q_1 = 1/a
        q = 1.0 / af
        for i in range(2, n0 + 1):
            q *= i / (af + i - 1.0)
        n = n0
        while True:
            yield r[k] * q / n
            n += 1
            q *= n / (af + n - 1.0)
            it.advance()
            r = it.r

    def ref() -> Optional[float]:
        if a == 1:
            return oracles.zeta_direct(k + 1).value
        if a == Fraction(1, 2):
            return (2 ** (k + 1) - 1.0) * oracles.zeta_direct(k + 1).value
        return None

    return BoundRepresentation(
        name="hurwitz",
        kind="direct",
        params={"k": k, "a": a},
        domain_text="plain sum over n (no z); a > 0",
        direct_terms=gen,
        direct_start=max(k, 1),
        direct_value=ref,
    )


def _bind_euler_sum_rhs(k) -> BoundRepresentation:
    k = int(k)
    _require(k >= 1, "k must be >= 1")

    def gen() -> Iterator[float]:
        it = _StirlingRatioIter(k)
        n0 = max(k, 1)
        r = it.at(n0)
        h2 = sum(1.0 / (i * i) for i in range(1, n0))  # H^(2)_(n-1)
        n = n0
        while True:
            yield r[k] * (PI2_6 - h2)
            h2 += 1.0 / (n * n)
            n += 1
            it.advance()
            r = it.r

    return BoundRepresentation(
        name="euler_sum_rhs",
        kind="direct",
        params={"k": k},
        domain_text="plain sum over n (no z)",
        direct_terms=gen,
        direct_start=max(k, 1),
        direct_value=lambda: euler_sum_lhs(k),
    )


_CATALOG: list[Representation] = [
    Representation(
        "stirling_kernel", "factorial", ("k",), "z > 0",
        "first-kind Stirling column k; sums to 1/z^(k+1)", _bind_stirling_kernel,
    ),
    Representation(
        "zeta", "direct", ("k",), "plain sum (no z)",
        "zeta(k+1) as sum of [n,k]/(n! n)", _bind_zeta,
    ),
    Representation(
        "hurwitz", "direct", ("k", "a"), "plain sum (no z), a > 0",
        "Hurwitz zeta(k+1, a) as a Stirling sum", _bind_hurwitz,
    ),
    Representation(
        "reciprocal", "factorial", (), "z > 1",
        "coefficients n!; sums to 1/(z-1)", _bind_reciprocal,
    ),
    Representation(
        "reciprocal_sq", "factorial", (), "z > 1",
        "coefficients n! H_n; sums to 1/(z-1)^2", _bind_reciprocal_sq,
    ),
    Representation(
        "pochhammer_ratio", "factorial", ("w",), "z > w",
        "coefficients w(w+1)...(w+n-1); sums to 1/(z-w)", _bind_pochhammer,
    ),
    Representation(
        "rational_p", "factorial", ("p",), "z > p+1",
        "coefficients n! C(n,p)/p!; sums to 1/((z-1)...(z-p-1))", _bind_rational_p,
    ),
    Representation(
        "trigamma_fac", "factorial", (), "z > 0",
        "coefficients n!/(n+1); sums to the trigamma function", _bind_trigamma_fac,
    ),
    Representation(
        "nielsen_beta_fac", "factorial", (), "z > 0",
        "coefficients n!/2^(n+1); sums to the Nielsen beta function", _bind_nielsen_beta_fac,
    ),
    Representation(
        "incgamma", "factorial", ("x",), "z > 0, x > 0",
        "coefficients x^n; sums to gamma_lower(z,x) x^-z e^x", _bind_incgamma,
    ),
    Representation(
        "log_shift_minus", "factorial", (), "z > 1",
        "coefficients d_n; sums to -log(1 - 1/z)", _bind_log_shift_minus,
    ),
    Representation(
        "log_shift_plus", "factorial", (), "z > 0",
        "coefficients (-1)^n c_n; sums to log(1 + 1/z)", _bind_log_shift_plus,
    ),
    Representation(
        "k2_series", "factorial", (), "z > 1",
        "coefficients n!(H_n + H_n^2 - H_n^(2)); sums to (z+1)/(z-1)^3", _bind_k2_series,
    ),
    Representation(
        "euler_sum_rhs", "direct", ("k",), "plain sum (no z)",
        "sum of [n,k] psi'(n)/n!; equals the weighted-zeta Euler-sum value", _bind_euler_sum_rhs,
    ),
]


def catalog() -> list[Representation]:
    """All representations, addressable by stable text keys."""
    return list(_CATALOG)


def catalog_keys() -> list[str]:
    return [r.name for r in _CATALOG]


def get_representation(name: str) -> Representation:
    for r in _CATALOG:
        if r.name == name:
            return r
    raise KeyError(name)


def evaluate_representation(
    name: str,
    z: Optional[float] = None,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    **params,
) -> EvalResult:
    """Convenience wrapper: bind parameters and evaluate."""
    return get_representation(name).bind(**params).evaluate(z, tol=tol, max_terms=max_terms)


# ---------------------------------------------------------------------------
# antiderivatives of -log(1-x) and the polylogarithm representation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PnPolynomial:
    """Polynomial part of the n-th antiderivative, stored in the (x-1) basis:
    P_n(x) = sum_j coeffs[j] (x-1)^j with coeffs[0] = 1/(n! n) and leading
    coefficient H_n/n!."""

    n: int
    coeffs_shifted: tuple[Fraction, ...]

    def value(self, x):
        u = (Fraction(x) if isinstance(x, (Fraction, int)) else float(x)) - 1
        acc = self.coeffs_shifted[-1]
        for c in reversed(self.coeffs_shifted[:-1]):
            acc = acc * u + c
        return acc


@functools.lru_cache(maxsize=None)
def pn_polynomial(n: int) -> PnPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    fn = math.factorial(n)
    coeffs = [Fraction(math.comb(n, n - j), (n - j) * fn) for j in range(n)]
    coeffs.append(Fraction(harmonic(n), fn))
    return PnPolynomial(n, tuple(coeffs))


def _check_f_domain(n: int, x: float) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x == 1.0:
        if n < 1:
            raise DomainError("x = 1 is allowed only for n >= 1")
        return
    if not (-1.0 <= x < 1.0):
        raise DomainError(f"x must lie in [-1, 1) (or be 1 for n >= 1), got {x}")


def f_antiderivative_closed(n: int, x: float) -> float:
    """Closed form: P_n(x) + (-1)^(n-1) (1-x)^n log(1-x)/n!; the log term is 0
    at x = 1 (its limit).  Suffers cancellation for small |x|."""
    _check_f_domain(n, x)
    if n == 0:
        return -math.log1p(-x)
    p = float(pn_polynomial(n).value(float(x)))
    if x == 1.0:
        return p
    logterm = (1.0 - x) ** n * math.log1p(-x) / math.factorial(n)
    return p + (logterm if (n - 1) % 2 == 0 else -logterm)


def f_antiderivative_series(n: int, x: float) -> float:
    """Direct series sum_p x^(p+n)/(p(p+1)...(p+n)); rapid for |x| < 1/2."""
    _check_f_domain(n, x)
    if x == 0.0:
        return 0.0
    t = x ** (n + 1) / math.factorial(n + 1)  # p = 1 term
    acc = 0.0
    p = 1
    while True:
        acc += t
        p += 1
        t *= x * (p - 1) / (p + n)
        if abs(t) <= 2e-17 * abs(acc) + 1e-300:
            acc += t
            return acc
        if p > 10_000:
            return acc


def f_antiderivative(n: int, x: float) -> float:
    """n-th antiderivative of -log(1-x) vanishing to order n+1 at 0.

    Hybrid evaluation: the closed form loses all precision for small |x|
    (polynomial and log parts are O(1) while the value is O(x^(n+1))), so
    |x| < 1/2 switches to the direct series, whose term ratio is then <= 1/2.
    """
    _check_f_domain(n, x)
    if n == 0:
        return -math.log1p(-x)
    if abs(x) < 0.5:
        return f_antiderivative_series(n, x)
    return f_antiderivative_closed(n, x)


def _polylog_g_inner(n: int, x: float) -> float:
    """G_n = n! f_n(x)/x^n = sum_p x^p (p-1)!/((n+1)...(n+p)); stable for all
    |x| < 1 and any n."""
    t = x / (n + 1.0)
    acc = 0.0
    p = 1
    while True:
        acc += t
        p += 1
        t *= x * (p - 1) / (n + p)
        if abs(t) <= 1e-18 * abs(acc) + 1e-320:
            return acc + t


def polylog_via_stirling(
    k: int,
    x: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Li_(k+1)(x) from the first-kind Stirling column against the
    antiderivative values f_n(x)/x^n, completed with the exact remainder of
    the Stirling column identity.  |x| < 1, x != 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if x == 0.0 or not abs(x) < 1.0:
        raise DomainError(f"x must satisfy 0 < |x| < 1, got {x}")

    def terms() -> Iterator[float]:
        it = _StirlingRatioIter(k)
        r = it.at(k)
        n = k
        while True:
            yield r[k] * _polylog_g_inner(n, x)
            n += 1
            it.advance()
            r = it.r

    def tail(n_last: int) -> tuple[float, float]:
        if k == 0:
            return 0.0, 0.0
        row = _stirling_ratio_row(n_last + 1, k)
        acc = 0.0
        for r in range(k):
            # V~_r = sum_p x^p w_p / p^(r+1), w_1 = 1, w ratio p/(p+n_last+1)
            wpt = 1.0
            v = 0.0
            p = 1
            while True:
                v += (x**p) * wpt / p ** (r + 1)
                wpt *= p / (p + n_last + 1.0)
                p += 1
                if wpt * abs(x) ** p <= 1e-20:
                    break
            acc += row[k - r] * v
        return acc, 4e-15 * abs(acc) + 1e-300

    from .engine import _adaptive_sum  # shared core

    return _adaptive_sum(terms(), start=k, tol=tol, max_terms=max_terms, exact_tail=tail)


def alt_sum_closed_form(n: int) -> float:
    """(2^n/n!) (sum_{k=1..n} 1/(2^k k) - log 2): the closed value of the
    alternating inverse-factorial sum of order n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = sum(1.0 / (2.0**kk * kk) for kk in range(1, n + 1))
    return 2.0**n / math.factorial(n) * (acc - math.log(2.0))


def euler_sum_lhs(k: int) -> float:
    """((k+3)/2) zeta(k+2) - (1/2) sum_{j=1..k-1} zeta(j+1) zeta(k-j+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = (k + 3.0) / 2.0 * oracles.zeta_direct(k + 2).value
    for j in range(1, k):
        acc -= 0.5 * oracles.zeta_direct(j + 1).value * oracles.zeta_direct(k - j + 1).value
    return acc


# ---------------------------------------------------------------------------
# Binet's convergent log-gamma correction series
# ---------------------------------------------------------------------------

_binet_lock = threading.Lock()
_BINET: list[Fraction] = [Fraction(0)]


def binet_coefficient(n: int) -> Fraction:
    """a_n = (1/n) integral over [0,1] of (t - 1/2) t(t+1)...(t+n-1) dt,
    evaluated exactly through the Stirling expansion of the rising factorial:
    a_n = (1/n) sum_k [n,k] (1/(k+2) - 1/(2(k+1))).  a_0 = 0 by convention."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_BINET):
        with _binet_lock:
            while n >= len(_BINET):
                m = len(_BINET)
                row = stirling1_row(m)
                acc = Fraction(0)
                for kk, v in enumerate(row):
                    if v:
                        acc += v * (Fraction(1, kk + 2) - Fraction(1, 2 * (kk + 1)))
                _BINET.append(acc / m)
    return _BINET[n]


def binet_log_gamma(
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """log Gamma(z) = (z - 1/2) log z - z + log sqrt(2 pi) + correction, the
    correction being the factorial series over (z+1)(z+2)...(z+n), n >= 1."""
    z = float(z)
    if not z > 0:
        raise DomainError(f"z must be positive, got {z}")

    def gen(zp: float) -> Iterator[float]:
        t = float(binet_coefficient(1)) / zp
        n = 1
        while True:
            yield t
            n += 1
            t *= float(binet_coefficient(n) / binet_coefficient(n - 1)) / (zp + n - 1)

    series = FactorialSeries(
        lambda m: binet_coefficient(m + 1),
        "Binet log-gamma correction coefficients",
        float_terms=gen,
    )
    res = eval_factorial_series(series, z + 1.0, tol=tol, max_terms=max_terms)
    main = (z - 0.5) * math.log(z) - z + LN_SQRT_2PI
    return EvalResult(main + res.value, res.terms_used, res.error_estimate, res.converged)


# ---------------------------------------------------------------------------
# binomial identity with inverse factorials
# ---------------------------------------------------------------------------

def binomial_identity(p: int, m: int, k: int, N: int) -> tuple[Fraction, Fraction]:
    """Exact two-sided evaluation of the alternating binomial sum against the
    Stirling inverse-factorial series.

    lhs = sum_{j=0..m} C(m,j) (-1)^j/(j+p)^(k+1);
    rhs_partial = (p-1)! sum_{n=0..N} [n,k]/(n!(n+m+1)...(n+m+p)).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if m < 0 or k < 0 or N < 0:
        raise ValueError("need m >= 0, k >= 0, N >= 0")
    lhs = Fraction(0)
    for j in range(m + 1):
        t = Fraction(math.comb(m, j), (j + p) ** (k + 1))
        lhs += -t if j % 2 else t

    # [n,k]/n! = e_(k-1)(1, 1/2, ..., 1/(n-1)) / n for n >= 1
    pf = math.factorial(p - 1)
    rhs = Fraction(0)
    if k == 0:
        den = Fraction(1)
        for i in range(1, p + 1):
            den *= m + i
        rhs += Fraction(pf, 1) / den
        return lhs, rhs  # [n,0] = 0 for all n >= 1
    e = [Fraction(1)] + [Fraction(0)] * k  # e_0..e_k over the empty set
    for n in range(1, N + 1):
        if n >= 2:
            v = Fraction(1, n - 1)
            for j in range(k, 0, -1):
                e[j] += v * e[j - 1]
        if e[k - 1] == 0:
            continue
        den = Fraction(n)
        for i in range(1, p + 1):
            den *= n + m + i
        rhs += pf * e[k - 1] / den
    return lhs, rhs


def binomial_series_numeric(
    k: int, m: int, tol: float = 1e-9, max_terms: int = DEFAULT_MAX_TERMS
) -> EvalResult:
    """Float evaluation of sum_n [n,k]/(n!(n+m+1)) with tail correction;
    the p = 1 case of the binomial identity, where the series converges too
    slowly for exact partial sums to be useful."""
    if k < 0 or m < 0:
        raise ValueError("need k >= 0 and m >= 0")

    def gen() -> Iterator[float]:
        if k == 0:
            yield 1.0 / (m + 1.0)
            while True:
                yield 0.0
        it = _StirlingRatioIter(k)
        n = max(k, 1)
        r = it.at(n)
        while True:
            yield r[k] / (n + m + 1.0)
            n += 1
            it.advance()
            r = it.r

    return sum_series(gen(), start=max(k, 1), tol=tol, max_terms=max_terms)


# ---------------------------------------------------------------------------
# asymptotic companion series
# ---------------------------------------------------------------------------

def trigamma_asymptotic(n_coeffs: int = 12) -> AsymptoticSeries:
    """Divergent large-z expansion of trigamma: c_k = (-1)^k B_k."""

    def rule(k: int) -> Fraction:
        b = bernoulli(k)
        return -b if k % 2 else b

    return AsymptoticSeries([rule(k) for k in range(n_coeffs)], "trigamma_asym", rule)


def beta_asymptotic(n_coeffs: int = 12) -> AsymptoticSeries:
    """Divergent large-z expansion of Nielsen beta: c_k = (-1)^k E_k(0)/2."""

    def rule(k: int) -> Fraction:
        v = euler_poly_at_zero(k) / 2
        return -v if k % 2 else v

    return AsymptoticSeries([rule(k) for k in range(n_coeffs)], "beta_asym", rule)


def incgamma_asymptotic(x, n_coeffs: int = 12) -> AsymptoticSeries:
    """Formal large-z expansion of gamma_lower(z,x) x^-z e^x:
    c_k = (-1)^k phi_k(-x) with the exponential polynomials phi."""
    x = Fraction(x)

    def rule(k: int) -> Fraction:
        v = exponential_poly(k, -x)
        return -v if k % 2 else v

    return AsymptoticSeries([rule(k) for k in range(n_coeffs)], "incgamma_asym", rule)


def asymptotic_catalog(x=Fraction(1), n_coeffs: int = 12) -> list[AsymptoticSeries]:
    """The three divergent companion expansions; x parameterizes the
    incomplete-gamma entry."""
    return [
        beta_asymptotic(n_coeffs),
        trigamma_asymptotic(n_coeffs),
        incgamma_asymptotic(x, n_coeffs),
    ]
