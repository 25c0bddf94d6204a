"""Inversion count I(a, b) of the permutation j -> a*j mod b on {1, ..., b-1}.

The count is computed directly by merge sort and, independently, backed out of
Meyer's relation ``12 b s(a,b) = -4 I(a,b) + (b-1)(b-2)``. The two must agree
exactly for the adopted definition to be the right one.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import partial

from cfdedekind.dedekind import DedekindValue
from cfdedekind.number_core import Fraction, InconsistencyError, check_budget

__all__ = [
    "InversionReport",
    "count_inversions",
    "inversion_count_direct",
    "inversion_count_quadratic",
    "inversion_from_meyer",
    "inversion_report",
    "residue_sequence",
    "salie_check",
]


@dataclass(frozen=True, slots=True)
class InversionReport:
    i_direct: int
    i_meyer: int
    salie_holds: bool


def residue_sequence(f: Fraction) -> list[int]:
    a, b = f.a, f.b
    return [a * j % b for j in range(1, b)]


_LEAF = 16


def _sort_count(seq: list[int]) -> tuple[list[int], int]:
    n = len(seq)
    if n <= _LEAF:
        # binary insertion on short runs; bounded size keeps the total O(n log n)
        out: list[int] = []
        total = 0
        for x in seq:
            i = bisect_right(out, x)
            total += len(out) - i
            out.insert(i, x)
        return out, total
    left, inv_left = _sort_count(seq[: n // 2])
    right, inv_right = _sort_count(seq[n // 2 :])
    # each right element jumps over the left elements larger than it
    cross = len(left) * len(right) - sum(map(partial(bisect_right, left), right))
    # sorted() merges the two presorted runs in linear time
    return sorted(left + right), inv_left + inv_right + cross


def count_inversions(seq: list[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j], by merge sort in O(n log n)."""
    return _sort_count(list(seq))[1]


def inversion_count_direct(f: Fraction) -> int:
    return count_inversions(residue_sequence(f))


def inversion_count_quadratic(f: Fraction) -> int:
    """O(b^2) reference counter; only for small b."""
    seq = residue_sequence(f)
    return sum(1 for i, x in enumerate(seq) for y in seq[i + 1 :] if x > y)


def inversion_from_meyer(f: Fraction, s: DedekindValue) -> int:
    b = f.b
    twelve_bs = 12 * b * s.s
    if twelve_bs.denominator != 1:
        raise InconsistencyError(f"12*b*s is not an integer for {f}")
    q, r = divmod((b - 1) * (b - 2) - twelve_bs.numerator, 4)
    if r:
        raise InconsistencyError(f"Meyer's relation gives non-integral I for {f}")
    return q


def salie_check(f: Fraction, i: int) -> bool:
    """``4 a I == (a-1)(b-1)(a+b-1) (mod 4b)``."""
    a, b = f.a, f.b
    lhs = check_budget(4 * a * i, "4*a*I")
    rhs = check_budget((a - 1) * (b - 1) * (a + b - 1), "Salie right-hand side")
    return (lhs - rhs) % (4 * b) == 0


def inversion_report(f: Fraction, s: DedekindValue) -> InversionReport:
    i = inversion_count_direct(f)
    return InversionReport(i, inversion_from_meyer(f, s), salie_check(f, i))
