"""invfac: exact Stirling-number combinatorics, Stirling sequence transforms,
and numerical evaluation of inverse factorial series with convergence control,
verified against independent brute-force oracles."""

from .exact import (
    StirlingTriangle,
    TriangleKind,
    bernoulli,
    cauchy_first,
    cauchy_second,
    euler_poly_at_zero,
    exponential_poly,
    geometric_poly,
    harmonic,
    rising_factorial_coeffs,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)
from .transforms import (
    asymptotic_from_factorial,
    factorial_series_from_power,
    inverse_stirling_transform,
    parse_sequence,
    stirling_transform,
)
from .engine import (
    AsymptoticSeries,
    DomainError,
    EvalResult,
    FactorialSeries,
    PoleError,
    eval_asymptotic,
    eval_factorial_series,
    partial_sum_exact,
    raabe_diagnostic,
)
from .catalog import (
    asymptotic_catalog,
    binet_coefficient,
    binet_log_gamma,
    binomial_identity,
    catalog,
    evaluate_representation,
    f_antiderivative,
    pn_polynomial,
    polylog_via_stirling,
)
from .verify import run_verify

__version__ = "0.1.0"
