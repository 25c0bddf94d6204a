"""Continued fractions of a/b in (0, 1) and the statistics T, T' and D.

Two expansions of the same rational are in play:

* the *canonical* one produced by Euclid's algorithm, whose last quotient is
  always at least 2;
* the *odd* one, rewritten so that its length is odd.

``T`` and ``D`` are always taken over the odd expansion. ``T_prime`` is the
alternating sum over the canonical expansion. When the canonical length is
even the two expansions differ in their tail and ``T == T_prime + 2`` while
``D`` is one larger than the canonical digit sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from cfdedekind.number_core import Fraction, check_budget

__all__ = ["CFExpansion", "CFStats", "cf_expand", "cf_normalize_odd", "cf_eval", "cf_stats", "euclid_quotients"]


@dataclass(frozen=True, slots=True)
class CFExpansion:
    """Partial quotients ``a_1..a_n`` of ``[0; a_1, ..., a_n]``."""

    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        q = tuple(self.quotients)
        object.__setattr__(self, "quotients", q)
        if not q:
            raise ValueError("an expansion needs at least one partial quotient")
        if any((not isinstance(x, int)) or x < 1 for x in q):
            raise ValueError(f"partial quotients must be positive integers: {q}")
        if q == (1,):
            raise ValueError("[0; 1] equals 1, which is outside (0, 1)")

    @property
    def n(self) -> int:
        return len(self.quotients)

    def __str__(self) -> str:
        return "[0;" + ",".join(map(str, self.quotients)) + "]"


@dataclass(frozen=True, slots=True)
class CFStats:
    T: int
    T_prime: int
    D: int


def euclid_quotients(a: int, b: int) -> list[int]:
    """Partial quotients of a/b (0 < a < b) by Euclid's algorithm."""
    out = []
    while a:
        q, r = divmod(b, a)
        out.append(q)
        b, a = a, r
    return out


def cf_expand(f: Fraction) -> CFExpansion:
    return CFExpansion(tuple(euclid_quotients(f.a, f.b)))


def _odd_tail(q: list[int]) -> list[int]:
    if len(q) % 2:
        return q
    if q[-1] >= 2:
        return q[:-1] + [q[-1] - 1, 1]
    return q[:-2] + [q[-2] + 1]


def cf_normalize_odd(cf: CFExpansion) -> CFExpansion:
    """Rewrite an even-length expansion into the odd-length form of the same value.

    A last quotient ``x >= 2`` is split into ``x - 1, 1``; a trailing 1 is merged
    into its predecessor.
    """
    if cf.n % 2:
        return cf
    return CFExpansion(tuple(_odd_tail(list(cf.quotients))))


def cf_eval(cf: CFExpansion) -> Fraction:
    num, den = 0, 1
    for x in reversed(cf.quotients):
        num, den = den, check_budget(x * den + num, "continuant")
    return Fraction(num, den)


def _alternating(q: list[int]) -> int:
    return sum(q[0::2]) - sum(q[1::2])


def cf_stats(f: Fraction) -> CFStats:
    q = euclid_quotients(f.a, f.b)
    t_prime = _alternating(q)
    if len(q) % 2:
        return CFStats(t_prime, t_prime, sum(q))
    odd = _odd_tail(q)
    return CFStats(_alternating(odd), t_prime, sum(odd))
