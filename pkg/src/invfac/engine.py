"""Numerical summation of inverse factorial series and asymptotic series.

All results are binary64.  Summation runs in ascending index order with
compensated (Kahan) accumulation and no reordering, so a fixed input gives a
bit-identical result on every run.

Truncation control
------------------
The adaptive evaluator stops at the smallest N >= 4 such that
|t_n| <= tol * max(|S_n|, 1e-300) for three consecutive n and |t_N| <= |t_N-1|
(the three-in-a-row guard keeps isolated zero coefficients from stopping the
sum early).  After stopping, the tail beyond N is handled one of three ways:

* an exact closed-form completion, when the series carries one (coefficient
  sequences that are Stirling transforms of elementary sequences admit these);
* a tail estimate from the observed decay regime, added as a correction:
  geometric (last ratio r, tail ~ t*r/(1-r)) or power law (Raabe exponent rho,
  tail ~ t * [N/(rho-1) + 1/2 + rho/12N]);
* nothing, when the decay is ambiguous; the error estimate is then the
  conservative |t_N| * N and `converged` reflects only the stopping rule.

`error_estimate` is always an estimate of the error remaining *after* any
correction, plus a floating-point noise floor.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

__all__ = [
    "DomainError",
    "PoleError",
    "DEFAULT_TOL",
    "DEFAULT_MAX_TERMS",
    "EvalResult",
    "FactorialSeries",
    "AsymptoticSeries",
    "eval_factorial_series",
    "partial_sum_exact",
    "partial_sum_float",
    "sum_series",
    "sum_series_raw",
    "raabe_diagnostic",
    "eval_asymptotic",
]


class DomainError(ValueError):
    """Argument outside the domain of the series or function."""


class PoleError(DomainError):
    """Evaluation point hits a pole of the inverse-factorial kernel."""


DEFAULT_TOL = 1e-10
DEFAULT_MAX_TERMS = 200_000

# Exact tail completions make the summed prefix length a free choice; this is
# long enough that the completion integrals/series are deep in their fast
# regime and short enough that exact coefficient rows stay cheap.
_TAIL_STOP = 48

_EPS = 2.2e-16


class FactorialSeries:
    """Coefficient stream a_n of the expansion sum_n a_n / (z(z+1)...(z+n)).

    `coeff(n)` must be deterministic and exact.  Optional hooks:

    * `float_terms(z)`: iterator of float terms a_n/(z...(z+n)) for n >= start,
      used by the numerical evaluator.  The default builds terms from exact
      coefficient ratios, which is fine for moderate n; hot series supply
      their own O(1)-per-term generators.
    * `exact_tail(n_last, z)`: returns (tail, error_bound) with the exact value
      of the sum over n > n_last.
    """

    def __init__(
        self,
        coeff: Callable[[int], Fraction],
        description: str = "",
        *,
        start: int = 0,
        float_terms: Optional[Callable[[float], Iterator[float]]] = None,
        exact_tail: Optional[Callable[[int, float], tuple[float, float]]] = None,
    ):
        self.coeff = coeff
        self.description = description
        self.start = start
        self._float_terms = float_terms
        self.exact_tail = exact_tail

    def float_terms(self, z: float) -> Iterator[float]:
        if self._float_terms is not None:
            return self._float_terms(z)
        return self._default_terms(z)

    def _default_terms(self, z: float) -> Iterator[float]:
        # Exact coefficient ratios keep the term recurrence safe for
        # factorially growing coefficients; the per-term Fraction division is
        # acceptable at default-path sizes.
        n = self.start
        a = Fraction(self.coeff(n))
        kernel = 1.0
        for i in range(n + 1):
            kernel /= z + i
        t = float(a) * kernel
        while True:
            yield t
            n += 1
            a_next = Fraction(self.coeff(n))
            if a == 0:
                # re-seed after a zero coefficient
                a = a_next
                t = float(a) * math.exp(math.lgamma(z) - math.lgamma(z + n + 1))
                continue
            t = t * float(a_next / a) / (z + n)
            a = a_next


@dataclass
class AsymptoticSeries:
    """Coefficients c_k of the formal sum of c_k * z^-(k+1).

    `rule`, when present, extends the coefficient sequence past the stored
    list (used only to look ahead for the first omitted nonzero term).
    """

    coeffs: list[Fraction]
    description: str = ""
    rule: Optional[Callable[[int], Fraction]] = None

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("an asymptotic series needs at least one coefficient")


@dataclass
class EvalResult:
    value: float
    terms_used: int
    error_estimate: float
    converged: bool


class _Kahan:
    __slots__ = ("s", "c", "sumabs")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0
        self.sumabs = 0.0

    def add(self, t: float) -> None:
        self.sumabs += abs(t)
        y = t - self.c
        tmp = self.s + y
        self.c = (tmp - self.s) - y
        self.s = tmp


def _raabe_at(n: int, t_n: float, t_next: float) -> float:
    return n * (t_n / t_next - 1.0)


def _adaptive_sum(
    terms: Iterator[float],
    *,
    start: int,
    tol: float,
    max_terms: int,
    exact_tail: Optional[Callable[[int], tuple[float, float]]] = None,
) -> EvalResult:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")

    acc = _Kahan()
    hist: deque[float] = deque(maxlen=12)
    checkpoints: list[tuple[int, float, float]] = []  # (n, t_n, t_{n+1})
    mark = 16
    prev: Optional[float] = None
    small_run = 0
    fired = False
    exhausted = True
    count = 0
    n = start - 1

    for t in terms:
        n += 1
        count += 1
        acc.add(t)
        hist.append(t)
        if prev is not None and count >= mark:
            checkpoints.append((n - 1, prev, t))
            mark *= 2
        if abs(t) <= tol * max(abs(acc.s), 1e-300):
            small_run += 1
        else:
            small_run = 0
        stop_rule = count >= 4 and small_run >= 3 and prev is not None and abs(t) <= abs(prev)
        force_tail = exact_tail is not None and count >= min(_TAIL_STOP, max_terms)
        if stop_rule or force_tail:
            fired = True
            exhausted = False
            break
        if count >= max_terms:
            exhausted = False
            break
        prev = t

    if count == 0:
        raise ValueError("series produced no terms")

    noise = 4.0 * _EPS * (acc.sumabs + abs(acc.s))

    if exact_tail is not None and not exhausted:
        tail, tail_err = exact_tail(n)
        value = acc.s + tail
        est = noise + tail_err
        converged = est <= tol * max(1.0, abs(value))
        return EvalResult(value, count, est, converged)

    if exhausted:
        # finite series summed to the end: the value is the exact sum up to
        # float roundoff
        return EvalResult(acc.s, count, noise, True)

    # pull a few more terms for the decay diagnosis and include them in the sum
    ext: list[float] = []
    for _ in range(8):
        try:
            t = next(terms)
        except StopIteration:
            exhausted = True
            break
        n += 1
        count += 1
        acc.add(t)
        hist.append(t)
        ext.append(t)

    if exhausted:
        noise = 4.0 * _EPS * (acc.sumabs + abs(acc.s))
        return EvalResult(acc.s, count, noise, True)

    noise = 4.0 * _EPS * (acc.sumabs + abs(acc.s))
    h = list(hist)
    t_last = h[-1]
    t_prev2 = h[-2]
    value = acc.s
    est: float
    corrected = False

    if t_prev2 != 0.0 and t_last != 0.0:
        r_last = t_last / t_prev2
        r_before = t_prev2 / h[-3] if len(h) >= 3 and h[-3] != 0.0 else r_last
        if abs(r_last) < 0.93 and abs(r_before) < 0.93:
            # geometric regime
            tail = t_last * r_last / (1.0 - r_last)
            drift = abs(r_last - r_before)
            value += tail
            est = abs(tail) * (4.0 * drift / (1.0 - abs(r_last)) + 2.0 / count) + noise
            corrected = True
        else:
            rho_hi = _raabe_at(n - 1, t_prev2, t_last)
            rho_mid = None
            for cn, ct, ctn in reversed(checkpoints):
                if cn <= (n - 1) // 2 and ct != 0.0 and ctn != 0.0:
                    rho_mid = (cn, _raabe_at(cn, ct, ctn))
                    break
            if rho_mid is not None:
                n1, r1 = rho_mid
                n2 = n - 1
                rho = (n2 * rho_hi - n1 * r1) / (n2 - n1)
                drho = abs(rho - rho_hi)
            else:
                rho = rho_hi
                drho = abs(rho_hi) * 0.1 + 0.1
            if rho > 1.05:
                m = n
                t_pred = t_last * (m / (m + 1.0)) ** rho
                tail = t_pred * ((m + 1.0) / (rho - 1.0) + 0.5 + rho / (12.0 * (m + 1.0)))
                value += tail
                rel = 3.0 / max(math.log(m + 2.0) ** 2, 4.0) + min(drho, 2.0) / (rho - 1.0) + 2.0 / m
                est = abs(tail) * rel + noise
                corrected = True

    if not corrected:
        est = abs(t_last) * max(n, 1) + noise

    converged = fired and est <= tol * max(1.0, abs(value))
    return EvalResult(value, count, est, converged)


def eval_factorial_series(
    fs: FactorialSeries,
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Sum fs at real z > 0 with the adaptive stopping rule.

    Denominators are accumulated by stepwise division with (z+n); no gamma
    function is evaluated.  Non-convergence is reported via converged=False,
    not an exception.
    """
    z = float(z)
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"z must be positive and finite, got {z}")
    tail = None
    if fs.exact_tail is not None:
        tail = lambda n_last: fs.exact_tail(n_last, z)  # noqa: E731
    return _adaptive_sum(
        fs.float_terms(z), start=fs.start, tol=tol, max_terms=max_terms, exact_tail=tail
    )


def partial_sum_exact(fs: FactorialSeries, z: Fraction, N: int) -> Fraction:
    """Exact rational partial sum sum_{n=0..N} a_n/(z(z+1)...(z+n)).

    The sum always starts at index 0 (leading zero coefficients contribute
    nothing); z may be any rational that avoids 0, -1, ..., -N.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    z = Fraction(z)
    for i in range(N + 1):
        if z + i == 0:
            raise PoleError(f"z = {z} hits the pole at -{i}")
    kernel = Fraction(1)
    acc = Fraction(0)
    for i in range(N + 1):
        kernel /= z + i
        a = fs.coeff(i)
        if a:
            acc += a * kernel
    return acc


def partial_sum_float(fs: FactorialSeries, z: float, N: int) -> float:
    """Compensated float partial sum of the first N+1 terms (n = 0..N)."""
    z = float(z)
    if not z > 0.0:
        raise DomainError(f"z must be positive, got {z}")
    acc = _Kahan()
    count = N + 1 - fs.start
    for i, t in enumerate(fs.float_terms(z)):
        if i >= count:
            break
        acc.add(t)
    return acc.s


def sum_series(
    terms: Iterator[float],
    *,
    start: int = 1,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Adaptive compensated summation of an arbitrary term stream, with the
    same stopping rule and tail correction as the factorial-series evaluator.
    `start` is the index of the first yielded term in the decay model."""
    return _adaptive_sum(terms, start=start, tol=tol, max_terms=max_terms)


def sum_series_raw(terms: Iterator[float], num_terms: int) -> float:
    """Plain compensated partial sum of exactly num_terms terms (fewer if the
    stream ends first).  No stopping rule, no correction."""
    acc = _Kahan()
    for i, t in enumerate(terms):
        if i >= num_terms:
            break
        acc.add(t)
    return acc.s


def raabe_diagnostic(fs: FactorialSeries, z: float, n_lo: int, n_hi: int) -> float:
    """Estimate lim n*(t_n/t_{n+1} - 1) for the full terms of fs at z.

    Returns math.inf when the sampled ratios indicate geometric (or faster)
    decay.  Richardson extrapolation removes the leading 1/n error of the
    sampled quotients.
    """
    if not (n_hi > n_lo >= 1):
        raise ValueError("need n_hi > n_lo >= 1")
    z = float(z)
    if not z > 0.0:
        raise DomainError(f"z must be positive, got {z}")
    wanted: dict[int, float] = {}
    n_mid = max(n_lo, n_hi // 2)
    idx_needed = {n_lo, n_lo + 1, n_mid, n_mid + 1, n_hi, n_hi + 1}
    n = fs.start - 1
    for t in fs.float_terms(z):
        n += 1
        if n in idx_needed:
            wanted[n] = t
        if n >= n_hi + 1:
            break
    if any(wanted.get(i) in (None, 0.0) for i in idx_needed):
        raise ValueError("degenerate: zero or missing term in the sampled range")

    ratio_hi = abs(wanted[n_hi + 1] / wanted[n_hi])
    if ratio_hi < 0.95:
        return math.inf

    rho_hi = _raabe_at(n_hi, wanted[n_hi], wanted[n_hi + 1])
    if n_mid == n_hi:
        return rho_hi
    rho_mid = _raabe_at(n_mid, wanted[n_mid], wanted[n_mid + 1])
    return (n_hi * rho_hi - n_mid * rho_mid) / (n_hi - n_mid)


def eval_asymptotic(series: AsymptoticSeries, z: float) -> EvalResult:
    """Optimal truncation of sum c_k / z^(k+1).

    The cut k* minimizes |c_k / z^(k+1)| over the available nonzero
    coefficients (exact zeros carry no size information and are skipped when
    locating the minimum, though they are of course included in the sum).
    error_estimate is the magnitude of the first omitted nonzero term, taken
    from the stored coefficients or, failing that, from the extension rule;
    a finite series consumed to its end gets error_estimate 0 by convention.
    """
    z = float(z)
    if not z > 0.0 or not math.isfinite(z):
        raise DomainError(f"z must be positive and finite, got {z}")
    coeffs = series.coeffs
    terms: list[float] = []
    zpow = z
    for c in coeffs:
        terms.append(float(c) / zpow)
        zpow *= z
    k_star = None
    best = math.inf
    for k, (c, t) in enumerate(zip(coeffs, terms)):
        if c != 0 and abs(t) < best:
            best = abs(t)
            k_star = k
    if k_star is None:
        # all-zero series
        return EvalResult(0.0, len(coeffs), 0.0, True)

    acc = _Kahan()
    for t in terms[: k_star + 1]:
        acc.add(t)

    est: Optional[float] = None
    for k in range(k_star + 1, len(coeffs)):
        if coeffs[k] != 0:
            est = abs(terms[k])
            break
    if est is None and series.rule is not None:
        zpow = z ** (len(coeffs) + 1)
        for k in range(len(coeffs), len(coeffs) + 12):
            c = series.rule(k)
            if c != 0:
                est = abs(float(c)) / zpow
                break
            zpow *= z
    if est is None:
        # fully consumed finite series
        return EvalResult(acc.s, k_star + 1, 0.0, True)

    interior = k_star < len(coeffs) - 1
    return EvalResult(acc.s, k_star + 1, est, interior)
