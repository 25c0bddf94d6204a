"""Exact integer and rational arithmetic shared by the other modules.

Python integers never wrap, so the fixed-width budget is enforced explicitly:
public inputs are limited to ``b <= 2**31`` and selected intermediates are
checked against a signed 128-bit range with :func:`check_budget`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as ExactRational
from math import gcd

__all__ = [
    "MAX_DENOMINATOR",
    "INT128_MAX",
    "ExactRational",
    "Fraction",
    "InverseData",
    "InconsistencyError",
    "InvalidPairError",
    "OverflowBudgetError",
    "check_budget",
    "ext_gcd",
    "is_integer",
    "mod_inverse",
    "rat_reduce",
]

MAX_DENOMINATOR = 2**31
INT128_MAX = 2**127 - 1


class InvalidPairError(ValueError):
    """Raised when (a, b) is not a coprime pair with 0 < a < b."""


class InconsistencyError(ArithmeticError):
    """An identity that must produce an exact integer did not; inputs are corrupted."""


class OverflowBudgetError(OverflowError):
    """Raised when a value leaves the signed 128-bit intermediate budget."""


def check_budget(x: int, what: str = "intermediate") -> int:
    if -INT128_MAX - 1 <= x <= INT128_MAX:
        return x
    raise OverflowBudgetError(f"{what} exceeds the 128-bit budget ({x.bit_length()} bits)")


@dataclass(frozen=True, slots=True)
class Fraction:
    """A coprime pair ``0 < a < b``, read as the rational a/b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)):
            raise InvalidPairError(f"({a!r}, {b!r}): entries must be integers")
        if not 0 < a < b:
            raise InvalidPairError(f"({a}, {b}): need 0 < a < b")
        if b > MAX_DENOMINATOR:
            raise OverflowBudgetError(f"b = {b} exceeds the supported bound 2**31")
        if gcd(a, b) != 1:
            raise InvalidPairError(f"({a}, {b}): not coprime")

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


@dataclass(frozen=True, slots=True)
class InverseData:
    """``a_star`` is the inverse of a mod b and ``a * a_star == 1 + k * b``."""

    a_star: int
    k: int


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(x, y)`` and ``u*x + v*y == g``."""
    if x < 0 or y < 0:
        raise ValueError("ext_gcd expects non-negative arguments")
    if x == 0 and y == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    r0, r1 = x, y
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0


def mod_inverse(f: Fraction) -> InverseData:
    a, b = f.a, f.b
    # pow(.., -1, ..) is the C-level extended Euclid; ext_gcd is kept as its oracle in tests.
    a_star = pow(a, -1, b)
    k, r = divmod(check_budget(a * a_star, "a*a_star") - 1, b)
    assert r == 0
    return InverseData(a_star, k)


def rat_reduce(num: int, den: int) -> ExactRational:
    """Reduced rational with positive denominator; ``(0, d)`` becomes ``0/1``."""
    if den == 0:
        raise ZeroDivisionError(f"rat_reduce({num}, 0): zero denominator")
    return ExactRational(num, den)


def is_integer(q: ExactRational) -> bool:
    return q.denominator == 1
