"""Identity verification battery.

Every expansion and identity the library implements is checked here against
an independent reference: brute-force oracles, rational closed forms, or
exact combinatorial recomputation.  The battery is shared by the `verify`
CLI subcommand and the acceptance test suite, so there is exactly one
definition of "the build is correct".

Check names are stable keys (filterable by substring).  Exact checks report
the number of mismatching entries as `diff` with tolerance 0; checks that
must *exceed* a threshold (sign-adjudication) say so in their entry name.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import catalog as cat
from . import oracles
from .engine import eval_asymptotic, raabe_diagnostic, sum_series_raw
from .exact import (
    cauchy_second,
    rising_factorial_coeffs,
    stirling1_row,
    stirling1_unsigned,
)
from .transforms import inverse_stirling_transform, stirling_transform

__all__ = ["CheckEntry", "VerifyReport", "check_names", "run_checks", "run_verify"]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class CheckEntry:
    name: str
    lhs: float
    rhs: float
    diff: float
    tol: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    entries: list[CheckEntry]
    overall_pass: bool


def _close(name: str, lhs: float, rhs: float, tol: float) -> CheckEntry:
    diff = abs(lhs - rhs)
    return CheckEntry(name, lhs, rhs, diff, tol, diff <= tol)


def _exact(name: str, mismatches: int) -> CheckEntry:
    return CheckEntry(name, float(mismatches), 0.0, float(mismatches), 0.0, mismatches == 0)


# ---------------------------------------------------------------------------
# individual checks; each takes tol_scale and returns entries
# ---------------------------------------------------------------------------

def check_eq1_rising_factorial(s: float) -> list[CheckEntry]:
    bad = 0
    for n in range(31):
        if rising_factorial_coeffs(n) != list(stirling1_row(n)):
            bad += 1
    return [_exact("eq1_rising_factorial:rows_0..30", bad)]


def check_eq2_egf(s: float) -> list[CheckEntry]:
    nmax = 20
    log_series = [Fraction(0)] + [Fraction(1, m) for m in range(1, nmax + 1)]
    power = [Fraction(1)] + [Fraction(0)] * nmax  # k = 0
    bad = 0
    kfact = 1
    for k in range(1, 6):
        nxt = [Fraction(0)] * (nmax + 1)
        for i, pv in enumerate(power):
            if pv:
                for j in range(1, nmax + 1 - i):
                    nxt[i + j] += pv * log_series[j]
        power = nxt
        kfact *= k
        for n in range(nmax + 1):
            want = Fraction(stirling1_unsigned(n, k), math.factorial(n))
            if power[n] / kfact != want:
                bad += 1
    return [_exact("eq2_egf:k_le_5_n_le_20", bad)]


def check_eq4_zeta(s: float) -> list[CheckEntry]:
    out = []
    N = 10_000
    for k in (1, 2, 3):
        entry = cat.get_representation("zeta").bind(k=k)
        ref = oracles.zeta_direct(k + 1).value
        s_n = sum_series_raw(entry.direct_terms(), N - k + 1)
        s_2n = sum_series_raw(entry.direct_terms(), 2 * N - k + 1)
        err_n = abs(s_n - ref)
        err_2n = abs(s_2n - ref)
        bound = 5e-4 * math.log(N) ** (k - 1)
        out.append(CheckEntry(f"eq4_zeta:k={k}:partial_sum_error", s_n, ref, err_n, bound * s, err_n <= bound * s))
        ratio = (err_2n / math.log(2 * N) ** (k - 1)) / (err_n / math.log(N) ** (k - 1))
        out.append(CheckEntry(f"eq4_zeta:k={k}:doubling_halves", ratio, 0.5, ratio, 0.5 * s, ratio <= 0.5 * s))
    return out


def check_eq5_hurwitz(s: float) -> list[CheckEntry]:
    out = []
    res = cat.get_representation("hurwitz").bind(k=1, a=Fraction(1, 2)).evaluate(
        tol=1e-12, max_terms=10_000
    )
    want = math.pi * math.pi / 2.0
    out.append(_close("eq5_hurwitz:zeta(2,1/2)=pi^2/2@N=1e4", res.value, want, 2e-3 * s))
    bad = 0
    for k in (1, 2, 3):
        tz = cat.get_representation("zeta").bind(k=k).direct_terms()
        th = cat.get_representation("hurwitz").bind(k=k, a=1).direct_terms()
        for _ in range(200):
            if next(tz) != next(th):
                bad += 1
    out.append(_exact("eq5_hurwitz:a=1_terms_equal_zeta_terms", bad))
    return out


def check_eq10_alternating(s: float) -> list[CheckEntry]:
    out = []
    for n in range(11):
        got = cat.alt_sum_closed_form(n)
        want = oracles.alt_inverse_factorial_direct(n).value
        out.append(_close(f"eq10_alternating:n={n}", got, want, 1e-8 * s))
    return out


def check_eq11_polylog(s: float) -> list[CheckEntry]:
    out = []
    for k, x in ((1, 0.5), (2, 0.5), (1, -0.5)):
        got = cat.polylog_via_stirling(k, x, tol=1e-6).value
        want = oracles.polylog_direct(k + 1, x).value
        out.append(_close(f"eq11_polylog:Li_{k + 1}({x})", got, want, 1e-10 * s))
    return out


def check_eq6_antiderivative(s: float) -> list[CheckEntry]:
    bad = 0
    for n in range(1, 11):
        c0 = cat.pn_polynomial(n).coeffs_shifted[0]
        if c0 != Fraction(1, math.factorial(n) * n):
            bad += 1
    out = [_exact("eq6_antiderivative:f_n(1)=1/(n!n)_exact", bad)]
    for n in range(1, 5):
        for x in (0.45, 0.55):
            a = cat.f_antiderivative_series(n, x)
            b = cat.f_antiderivative_closed(n, x)
            out.append(_close(f"eq6_antiderivative:hybrid_n={n}_x={x}", a, b, 1e-10 * s))
    return out


def _closed_form_check(name: str, params: dict, zs: tuple, s: float, label: str) -> list[CheckEntry]:
    out = []
    bound_factor = 10.0
    rep = cat.get_representation(name)
    for z in zs:
        b = rep.bind(**params)
        res = b.evaluate(z, tol=1e-10)
        want = b.closed_form(z)
        tol = bound_factor * max(res.error_estimate, 5e-16 * max(1.0, abs(want))) * s
        out.append(_close(f"{label}:z={z}", res.value, want, tol))
    return out


def check_eq12_reciprocal(s: float) -> list[CheckEntry]:
    out = _closed_form_check("reciprocal", {}, (3.0, 5.0, 10.0), s, "eq12_reciprocal")
    series = cat.get_representation("reciprocal").bind().series
    rho = raabe_diagnostic(series, 3.0, 50, 400)
    out.append(_close("eq12_reciprocal:raabe_z=3", rho, 3.0, 0.1 * s))
    return out


def check_eq13_reciprocal_sq(s: float) -> list[CheckEntry]:
    return _closed_form_check("reciprocal_sq", {}, (3.0, 5.0, 10.0), s, "eq13_reciprocal_sq")


def check_eq14_pochhammer(s: float) -> list[CheckEntry]:
    out = []
    for w in (Fraction(1, 2), Fraction(3, 2)):
        out += _closed_form_check(
            "pochhammer_ratio", {"w": w}, (3.0, 5.0, 10.0), s, f"eq14_pochhammer:w={w}"
        )
    return out


def check_eq23_rational_p(s: float) -> list[CheckEntry]:
    out = _closed_form_check("rational_p", {"p": 1}, (3.0, 5.0, 10.0), s, "eq23_rational_p:p=1")
    out += _closed_form_check("rational_p", {"p": 2}, (5.0, 10.0), s, "eq23_rational_p:p=2")
    r0 = cat.get_representation("rational_p").bind(p=0).series
    rr = cat.get_representation("reciprocal").bind().series
    bad = sum(1 for n in range(26) if r0.coeff(n) != rr.coeff(n))
    out.append(_exact("eq23_rational_p:p=0_coeffs_equal_reciprocal", bad))
    return out


def check_ex7_k2(s: float) -> list[CheckEntry]:
    return _closed_form_check("k2_series", {}, (3.0, 5.0, 10.0), s, "ex7_k2")


def check_eq16_trigamma(s: float) -> list[CheckEntry]:
    out = []
    rep = cat.get_representation("trigamma_fac").bind()
    for z in (1.0, 2.5, 10.0):
        res = rep.evaluate(z, tol=1e-10, max_terms=100_000)
        want = oracles.trigamma_direct(z).value
        out.append(_close(f"eq16_trigamma:z={z}", res.value, want, 1e-8 * s))
    return out


def check_eq17_nielsen_beta(s: float) -> list[CheckEntry]:
    out = []
    rep = cat.get_representation("nielsen_beta_fac").bind()
    for z, want in ((1.0, LN2), (2.0, 1.0 - LN2)):
        res = rep.evaluate(z, tol=1e-12)
        out.append(_close(f"eq17_nielsen_beta:z={z}", res.value, want, 1e-12 * s))
        out.append(
            CheckEntry(
                f"eq17_nielsen_beta:z={z}:terms_le_60",
                float(res.terms_used), 60.0, float(res.terms_used), 60.0 * s,
                res.terms_used <= 60.0 * s,
            )
        )
    return out


def check_ex5_incomplete_gamma(s: float) -> list[CheckEntry]:
    out = []
    for z, x, want in ((2.0, 1.0, 1.0 - 2.0 / math.e), (3.0, 2.0, 2.0 - 10.0 * math.exp(-2.0))):
        res = cat.get_representation("incgamma").bind(x=Fraction(x)).evaluate(z, tol=1e-14)
        got = res.value * math.exp(z * math.log(x) - x)
        out.append(_close(f"ex5_incomplete_gamma:gamma({z},{x})", got, want, 1e-12 * s))
        quad = oracles.gamma_lower_direct(z, x).value
        out.append(_close(f"ex5_incomplete_gamma:vs_quadrature({z},{x})", got, quad, 1e-9 * s))
    return out


def check_ex6_binet(s: float) -> list[CheckEntry]:
    out = [
        _exact("ex6_binet:a1=1/12", 0 if cat.binet_coefficient(1) == Fraction(1, 12) else 1),
        _exact("ex6_binet:a2=1/12", 0 if cat.binet_coefficient(2) == Fraction(1, 12) else 1),
    ]
    r5 = cat.binet_log_gamma(5.0, tol=1e-10, max_terms=400)
    out.append(_close("ex6_binet:lnGamma(5)", r5.value, math.log(24.0), 1e-4 * s))
    r10 = cat.binet_log_gamma(10.0, tol=1e-10, max_terms=400)
    out.append(_close("ex6_binet:lnGamma(10)", r10.value, math.log(362880.0), 1e-6 * s))
    return out


def check_eq24_log_sign(s: float) -> list[CheckEntry]:
    out = []
    rep = cat.get_representation("log_shift_minus").bind()
    for z in (2.0, 5.0):
        res = rep.evaluate(z, tol=1e-12)
        want = -math.log1p(-1.0 / z)
        out.append(_close(f"eq24_log_sign:z={z}", res.value, want, 1e-9 * s))
    # the alternating-sign variant must visibly disagree (sign-convention slip)
    z = 5.0
    acc = 0.0
    base = 1.0 / z
    for n in range(200):
        d_n = float(Fraction(cauchy_second(n), math.factorial(n)))
        acc += (-1.0 if n % 2 else 1.0) * d_n * base
        base *= (n + 1.0) / (z + n + 1.0)
    disc = abs(acc - (-math.log1p(-1.0 / z)))
    out.append(
        CheckEntry("eq24_log_sign:alternating_variant_discrepancy_exceeds_tol",
                   disc, 1e-3, disc, 1e-3 * s, disc > 1e-3 * s)
    )
    return out


def check_eq25_log_cauchy(s: float) -> list[CheckEntry]:
    out = []
    rep = cat.get_representation("log_shift_plus").bind()
    for z in (1.0, 4.0):
        res = rep.evaluate(z, tol=1e-12)
        out.append(_close(f"eq25_log_cauchy:z={z}", res.value, math.log1p(1.0 / z), 1e-9 * s))
    return out


def check_prop4_euler_sum(s: float) -> list[CheckEntry]:
    out = []
    rhs1 = cat.get_representation("euler_sum_rhs").bind(k=1).evaluate(tol=1e-10, max_terms=150_000)
    lhs1 = cat.euler_sum_lhs(1)
    out.append(_close("prop4_euler_sum:k=1:lhs_vs_series", lhs1, rhs1.value, 1e-6 * s))
    out.append(_close("prop4_euler_sum:k=1:2zeta(3)", lhs1, 2.0 * oracles.zeta_direct(3).value, 1e-9 * s))
    for k in (1, 2):
        out.append(
            _close(f"prop4_euler_sum:k={k}:lhs_vs_oracle", cat.euler_sum_lhs(k),
                   oracles.euler_sum_direct(k).value, 1e-6 * s)
        )
    return out


def check_eq27_beta_asymptotic(s: float) -> list[CheckEntry]:
    out = []
    b = [Fraction(math.factorial(n), 2 ** (n + 1)) for n in range(12)]
    derived = inverse_stirling_transform(b)
    closed = cat.beta_asymptotic(12).coeffs
    out.append(_exact("eq27_beta_asymptotic:transform_matches_closed_form_len12",
                      sum(1 for u, v in zip(derived, closed) if u != v)))
    res = eval_asymptotic(cat.beta_asymptotic(12), 10.0)
    want = oracles.beta_direct(10.0).value
    diff = abs(res.value - want)
    out.append(CheckEntry("eq27_beta_asymptotic:z=10_within_first_omitted",
                          res.value, want, diff, res.error_estimate * s, diff <= res.error_estimate * s))
    out.append(_close("eq27_beta_asymptotic:z=10_abs", res.value, want, 1e-9 * s))
    return out


def check_eq31_trigamma_asymptotic(s: float) -> list[CheckEntry]:
    out = []
    b = [Fraction(math.factorial(n), n + 1) for n in range(12)]
    derived = inverse_stirling_transform(b)
    closed = cat.trigamma_asymptotic(12).coeffs
    out.append(_exact("eq31_trigamma_asymptotic:transform_matches_closed_form_len12",
                      sum(1 for u, v in zip(derived, closed) if u != v)))
    res = eval_asymptotic(cat.trigamma_asymptotic(12), 10.0)
    want = oracles.trigamma_direct(10.0).value
    diff = abs(res.value - want)
    out.append(CheckEntry("eq31_trigamma_asymptotic:z=10_within_first_omitted",
                          res.value, want, diff, res.error_estimate * s, diff <= res.error_estimate * s))
    out.append(_close("eq31_trigamma_asymptotic:z=10_abs", res.value, want, 1e-9 * s))
    return out


def check_eq30_incgamma_asymptotic(s: float) -> list[CheckEntry]:
    x, z = 1.0, 15.0
    res = eval_asymptotic(cat.incgamma_asymptotic(Fraction(1), 12), z)
    scale = math.exp(z * math.log(x) - x)
    got = res.value * scale
    want = oracles.gamma_lower_direct(z, x).value
    diff = abs(got - want)
    tol = res.error_estimate * scale * s
    return [CheckEntry("eq30_incgamma_asymptotic:x=1_z=15_within_first_omitted",
                       got, want, diff, tol, diff <= tol)]


def check_eq32_binomial(s: float) -> list[CheckEntry]:
    out = []
    for p in (2, 3):
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                lhs, rhs = cat.binomial_identity(p, m, k, 2000)
                out.append(_close(f"eq32_binomial:p={p}_m={m}_k={k}", float(lhs), float(rhs), 1e-5 * s))
    return out


def check_eq33_binomial_displays(s: float) -> list[CheckEntry]:
    out = []
    for m in (0, 1, 2, 3):
        for k in (1, 2, 3):
            lhs = 0.0
            for j in range(m + 1):
                lhs += (-1.0 if j % 2 else 1.0) * math.comb(m, j) / (j + 1.0) ** (k + 1)
            res = cat.binomial_series_numeric(k, m, tol=3e-9, max_terms=250_000)
            out.append(_close(f"eq33_binomial_displays:m={m}_k={k}", res.value, lhs, 1e-5 * s))
    return out


def check_eq18_round_trip(s: float) -> list[CheckEntry]:
    rng = random.Random(20201228)
    bad = 0
    for _ in range(100):
        seq = [Fraction(rng.randint(-400, 400), rng.randint(1, 40)) for _ in range(20)]
        if inverse_stirling_transform(stirling_transform(seq)) != seq:
            bad += 1
    return [_exact("eq18_round_trip:100_sequences_len20", bad)]


CHECKS: dict[str, Callable[[float], list[CheckEntry]]] = {
    "eq1_rising_factorial": check_eq1_rising_factorial,
    "eq2_egf": check_eq2_egf,
    "eq4_zeta": check_eq4_zeta,
    "eq5_hurwitz": check_eq5_hurwitz,
    "eq6_antiderivative": check_eq6_antiderivative,
    "eq10_alternating": check_eq10_alternating,
    "eq11_polylog": check_eq11_polylog,
    "eq12_reciprocal": check_eq12_reciprocal,
    "eq13_reciprocal_sq": check_eq13_reciprocal_sq,
    "eq14_pochhammer": check_eq14_pochhammer,
    "eq16_trigamma": check_eq16_trigamma,
    "eq17_nielsen_beta": check_eq17_nielsen_beta,
    "eq18_round_trip": check_eq18_round_trip,
    "eq23_rational_p": check_eq23_rational_p,
    "eq24_log_sign": check_eq24_log_sign,
    "eq25_log_cauchy": check_eq25_log_cauchy,
    "eq27_beta_asymptotic": check_eq27_beta_asymptotic,
    "eq30_incgamma_asymptotic": check_eq30_incgamma_asymptotic,
    "eq31_trigamma_asymptotic": check_eq31_trigamma_asymptotic,
    "eq32_binomial": check_eq32_binomial,
    "eq33_binomial_displays": check_eq33_binomial_displays,
    "ex5_incomplete_gamma": check_ex5_incomplete_gamma,
    "ex6_binet": check_ex6_binet,
    "ex7_k2": check_ex7_k2,
    "prop4_euler_sum": check_prop4_euler_sum,
}


def check_names() -> list[str]:
    return sorted(CHECKS)


def run_checks(name: str, tol_scale: float = 1.0) -> list[CheckEntry]:
    return CHECKS[name](tol_scale)


def run_verify(filter_text: str | None = None, tol_scale: float = 1.0) -> VerifyReport:
    """Run every check whose name contains filter_text (all, when None).
    Entries are ordered by check name, independent of execution order."""
    entries: list[CheckEntry] = []
    for name in check_names():
        if filter_text and filter_text not in name:
            continue
        entries.extend(CHECKS[name](tol_scale))
    return VerifyReport(entries, all(e.passed for e in entries))
