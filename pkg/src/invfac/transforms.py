"""Stirling sequence transform, its inverse, and the series conversions built
on them (power series <-> factorial series <-> asymptotic series).

Sequences are finite lists of `fractions.Fraction`, indexed from 0.  All
transforms are exact; there is no floating-point variant because the
coefficients grow factorially and floats would lose everything.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .exact import stirling1_row, stirling2_row

__all__ = [
    "stirling_transform",
    "inverse_stirling_transform",
    "factorial_series_from_power",
    "asymptotic_from_factorial",
    "SequenceParseError",
    "parse_sequence",
    "format_sequence",
]


def _check(seq: Sequence[Fraction]) -> list[Fraction]:
    if len(seq) < 1:
        raise ValueError("sequence must have at least one entry")
    return [Fraction(v) for v in seq]


def stirling_transform(a: Sequence[Fraction]) -> list[Fraction]:
    """b_n = sum_{k<=n} [n, k] a_k  (unsigned first-kind weights).

    Maps the power-series coefficients of sum a_k / z^(k+1) to the
    factorial-series coefficients of the same function.
    """
    a = _check(a)
    out = []
    for n in range(len(a)):
        row = stirling1_row(n)
        out.append(sum((row[k] * a[k] for k in range(n + 1) if row[k]), Fraction(0)))
    return out


def inverse_stirling_transform(b: Sequence[Fraction]) -> list[Fraction]:
    """a_n = sum_{k<=n} (-1)^(n-k) S(n, k) b_k; exact inverse of
    `stirling_transform`."""
    b = _check(b)
    out = []
    for n in range(len(b)):
        row = stirling2_row(n)
        acc = Fraction(0)
        for k in range(n + 1):
            if row[k]:
                term = row[k] * b[k]
                acc += -term if (n - k) % 2 else term
        out.append(acc)
    return out


def factorial_series_from_power(a: Sequence[Fraction]) -> list[Fraction]:
    """Convert coefficients of sum a_k / z^(k+1) into coefficients b_n of the
    factorial series sum b_n / (z (z+1) ... (z+n)).  Identical computation to
    `stirling_transform`, exposed under the series-conversion name."""
    return stirling_transform(a)


def asymptotic_from_factorial(b: Sequence[Fraction]) -> list[Fraction]:
    """Convert factorial-series coefficients b_n into the coefficients a_k of
    the (generally only asymptotic) expansion sum a_k / z^(k+1)."""
    return inverse_stirling_transform(b)


class SequenceParseError(ValueError):
    """Raised when a sequence file does not parse; carries the 1-based line."""

    def __init__(self, message: str, line: int):
        super().__init__(message)
        self.line = line


def _parse_rational(tok: str, line: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise SequenceParseError(f"line {line}: not a rational: {tok!r}", line) from None


def parse_sequence(text: str) -> list[Fraction]:
    """Parse the sequence interchange format.

    Text form: one rational per line, "p/q" or integer "p"; '#' starts a
    comment line.  JSON form: an array of strings, accepted when the document
    starts with '['.
    """
    stripped = text.lstrip()
    if stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SequenceParseError(f"line {exc.lineno}: invalid JSON: {exc.msg}", exc.lineno) from None
        if not isinstance(data, list):
            raise SequenceParseError("line 1: JSON document must be an array", 1)
        out = []
        for i, item in enumerate(data):
            if not isinstance(item, (str, int)):
                raise SequenceParseError(f"line 1: entry {i} must be a string", 1)
            out.append(_parse_rational(str(item), 1))
        if not out:
            raise SequenceParseError("line 1: sequence must not be empty", 1)
        return out
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(_parse_rational(line, lineno))
    if not out:
        raise SequenceParseError("line 1: sequence must not be empty", 1)
    return out


def format_sequence(seq: Sequence[Fraction], fmt: str = "text") -> str:
    """Render a sequence in the interchange format ("text", "json" or "csv").

    Rationals are always rendered as exact "p/q" strings, never floats.
    """
    strs = [str(Fraction(v)) for v in seq]
    if fmt == "json":
        return json.dumps(strs)
    if fmt == "csv":
        return "\n".join(strs)
    if fmt == "text":
        return "\n".join(strs)
    raise ValueError(f"unknown format: {fmt!r}")
