"""Dedekind sums s(a, b), evaluated by definition and by reciprocity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from cfdedekind.number_core import (
    ExactRational,
    Fraction,
    InconsistencyError,
    InverseData,
    check_budget,
)

__all__ = ["DedekindValue", "sawtooth", "dedekind_naive", "dedekind_fast", "bhk_t_from_s"]

# Above this b the int64 partial sums of the naive sum could reach 2**63.
_NUMPY_MAX_B = 2_000_000
_NUMPY_MIN_B = 4096


@dataclass(frozen=True, slots=True)
class DedekindValue:
    """The value ``s`` of s(a, b) for ``pair``; ``6*b*s`` is always an integer."""

    s: ExactRational
    pair: Fraction

    def __post_init__(self) -> None:
        if (6 * self.pair.b * self.s).denominator != 1:
            raise InconsistencyError(f"6*b*s(a,b) is not an integer for {self.pair}: s = {self.s}")


def sawtooth(p: int, q: int) -> ExactRational:
    """((p/q)): the fractional part minus 1/2, and 0 at integers."""
    if q < 1:
        raise ValueError("sawtooth needs q >= 1")
    r = p % q
    if r == 0:
        return ExactRational(0)
    return ExactRational(2 * r - q, 2 * q)


def _naive_numerator(a: int, b: int) -> int:
    # 4*b**2 * sum_{j=1}^{b} ((j/b))((aj/b)); the j = b term vanishes.
    if _NUMPY_MIN_B <= b <= _NUMPY_MAX_B:
        j = np.arange(1, b, dtype=np.int64)
        return int(np.dot(2 * j - b, 2 * ((a * j) % b) - b))
    return sum((2 * j - b) * (2 * (a * j % b) - b) for j in range(1, b))


def dedekind_naive(f: Fraction) -> DedekindValue:
    """s(a, b) straight from the defining sum, O(b)."""
    a, b = f.a, f.b
    num = check_budget(_naive_numerator(a, b), "Dedekind numerator")
    return DedekindValue(ExactRational(num, 4 * b * b), f)


def dedekind_fast(f: Fraction) -> DedekindValue:
    """s(a, b) in O(log b) steps.

    Alternates the reciprocity law ``s(a,b) + s(b,a) = -1/4 + (a^2+b^2+1)/(12ab)``
    with the periodicity ``s(b, a) = s(b mod a, a)`` down to ``s(0, 1) = 0``.
    """
    a, b = f.a, f.b
    acc = ExactRational(0)
    sign = 1
    while a:
        term = ExactRational(a * a + b * b + 1, 12 * a * b) - ExactRational(1, 4)
        acc = acc + term if sign > 0 else acc - term
        sign = -sign
        a, b = b % a, a
    check_budget(acc.numerator, "Dedekind numerator")
    return DedekindValue(acc, f)


def bhk_t_from_s(f: Fraction, s: DedekindValue, inv: InverseData) -> int:
    """Recover T(a, b) from ``12 s(a,b) = T(a,b) + (a + a*)/b - 3``."""
    t = 12 * s.s - ExactRational(f.a + inv.a_star, f.b) + 3
    if t.denominator != 1:
        raise InconsistencyError(f"BHK gives non-integral T = {t} for {f}")
    return t.numerator
