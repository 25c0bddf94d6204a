"""Case analysis and per-pair verification of the mod-4 congruences for T and D.

Every pair is checked against *all* statements whose hypotheses it meets; the
hypotheses overlap (``a = 2 (mod 4)`` with ``a* = 3 (mod 4)`` triggers two
theorem clauses at once) and overlapping clauses must agree.

Theorem clauses and the corollary are proven, so a failing verdict is a bug.
Conjecture clauses are reported with a tri-state status and never asserted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from cfdedekind.contfrac import CFStats, _alternating, _odd_tail, euclid_quotients
from cfdedekind.dedekind import dedekind_fast
from cfdedekind.inversions import inversion_count_direct
from cfdedekind.number_core import (
    ExactRational,
    Fraction,
    InconsistencyError,
    InverseData,
    check_budget,
    mod_inverse,
)

__all__ = [
    "CaseId",
    "ResidueCase",
    "Prediction",
    "CheckRecord",
    "THEOREM_CASES",
    "CONJECTURE_CASES",
    "classify",
    "predicted_residue",
    "check_pair",
    "proof_chain_check",
]


class CaseId(enum.Enum):
    THM1_1 = "THM1_1"
    THM1_2 = "THM1_2"
    THM1_3 = "THM1_3"
    COR2 = "COR2"
    CONJ1 = "CONJ1"
    CONJ2 = "CONJ2"
    CONJ3 = "CONJ3"
    REMARK = "REMARK"

    def __str__(self) -> str:
        return self.value


THEOREM_CASES = (CaseId.THM1_1, CaseId.THM1_2, CaseId.THM1_3, CaseId.COR2, CaseId.REMARK)
CONJECTURE_CASES = (CaseId.CONJ1, CaseId.CONJ2, CaseId.CONJ3)

HOLDS, FAILS, NOT_APPLICABLE = "holds", "fails", "n/a"


@dataclass(frozen=True, slots=True)
class ResidueCase:
    """An applicable statement and which of ``a`` / ``a*`` met its hypothesis.

    ``trigger`` is ``"a"``, ``"a*"``, ``"both"``, or ``None`` for the
    unconditional remark.
    """

    case_id: CaseId
    trigger: str | None


class Prediction(NamedTuple):
    statistic: str  # "T" or "D"
    modulus: int
    value: int


# classify() runs once per pair in sweeps; share the handful of distinct instances.
_CASES = {(c, t): ResidueCase(c, t) for c in CaseId for t in ("a", "a*", "both", None)}


def _trigger(hit_a: bool, hit_star: bool) -> str:
    if hit_a and hit_star:
        return "both"
    return "a" if hit_a else "a*"


def classify(f: Fraction, inv: InverseData) -> tuple[ResidueCase, ...]:
    """All statements whose hypotheses hold for (a, b), in :class:`CaseId` order."""
    ra, rs = f.a % 4, inv.a_star % 4
    out = []
    for residue, cid in ((1, CaseId.THM1_1), (3, CaseId.THM1_2), (2, CaseId.THM1_3)):
        if ra == residue or rs == residue:
            out.append(_CASES[cid, _trigger(ra == residue, rs == residue)])
    a_odd, s_odd = ra % 2 == 1, rs % 2 == 1
    if a_odd or s_odd:
        out.append(_CASES[CaseId.COR2, _trigger(a_odd, s_odd)])
    else:
        if ra == 2 or rs == 2:
            out.append(_CASES[CaseId.CONJ1, _trigger(ra == 2, rs == 2)])
        if ra == 0 and rs == 0:
            out.append(_CASES[CaseId.CONJ2, "both"])
            out.append(_CASES[CaseId.CONJ3, "both"])
    out.append(_CASES[CaseId.REMARK, None])
    return tuple(out)


def _half(x: int, cid: CaseId) -> int:
    if x % 2:
        raise InconsistencyError(f"{cid}: halved residue of odd value {x}")
    return x // 2


def predicted_residue(case: CaseId | ResidueCase, b: int, k: int) -> Prediction:
    """Predicted residue of T (mod 4) or D (mod 2), normalised into [0, modulus)."""
    cid = case.case_id if isinstance(case, ResidueCase) else case
    if cid is CaseId.THM1_1:
        return Prediction("T", 4, (b - k) % 4)
    if cid is CaseId.THM1_2:
        return Prediction("T", 4, (2 + k - b) % 4)
    if cid is CaseId.THM1_3:
        return Prediction("D", 2, _half(b - k, cid) % 2)
    if cid is CaseId.COR2:
        return Prediction("D", 2, (b - k) % 2)
    if cid is CaseId.CONJ1:
        return Prediction("T", 4, _half(b - k, cid) % 4)
    if cid is CaseId.CONJ2:
        return Prediction("T", 4, _half(k - b, cid) % 4)
    if cid is CaseId.CONJ3:
        return Prediction("D", 2, 1)
    raise ValueError(f"{cid} is an identity, not a residue statement")


@dataclass(slots=True)
class CheckRecord:
    pair: Fraction
    inv: InverseData
    cf_canonical: tuple[int, ...]
    cf_odd: tuple[int, ...]
    stats: CFStats
    s: ExactRational | None
    inversions: int | None
    applicable: tuple[ResidueCase, ...]
    verdicts: dict[CaseId, bool] = field(default_factory=dict)
    # case -> (predicted, actual), both already reduced modulo the case's modulus
    residues: dict[CaseId, tuple[int, int]] = field(default_factory=dict)

    @property
    def case_ids(self) -> tuple[CaseId, ...]:
        return tuple(c.case_id for c in self.applicable)

    @property
    def theorem_ok(self) -> bool:
        return all(v for c, v in self.verdicts.items() if c not in CONJECTURE_CASES)

    def conjecture_status(self, cid: CaseId) -> str:
        if cid not in self.verdicts:
            return NOT_APPLICABLE
        return HOLDS if self.verdicts[cid] else FAILS


def check_pair(f: Fraction, *, with_dedekind: bool = True, with_inversions: bool = True) -> CheckRecord:
    """Compute every statistic for ``f`` and judge each applicable statement.

    Sweeps that only look at residues pass ``with_dedekind=False`` and
    ``with_inversions=False``; ``s`` and ``inversions`` are then ``None``.
    """
    a, b = f.a, f.b
    inv = mod_inverse(f)
    canon = euclid_quotients(a, b)
    t_prime = _alternating(canon)
    if len(canon) % 2:
        odd = canon
        t = t_prime
    else:
        odd = _odd_tail(canon)
        t = _alternating(odd)
    stats = CFStats(t, t_prime, sum(odd))

    s = dedekind_fast(f).s if with_dedekind else None
    n_inv = inversion_count_direct(f) if with_inversions else None

    applicable = classify(f, inv)
    verdicts = {}
    residues = {}
    for case in applicable:
        cid = case.case_id
        if cid is CaseId.REMARK:
            expected = t_prime + 2 if len(canon) % 2 == 0 else t_prime
            verdicts[cid] = t == expected
            continue
        pred = predicted_residue(cid, b, inv.k)
        actual = (t if pred.statistic == "T" else stats.D) % pred.modulus
        residues[cid] = (pred.value, actual)
        verdicts[cid] = pred.value == actual
    return CheckRecord(f, inv, tuple(canon), tuple(odd), stats, s, n_inv, applicable, verdicts, residues)


def proof_chain_check(f: Fraction) -> bool:
    """Check the intermediate congruences that lead to the theorem.

    Modulo 4b: ``abT`` against the unexpanded combination of the three
    identities and against its expanded form ``-a^2 b + 3ab - 2b + b^2 - kb``;
    modulo 4: ``aT == -a^2 + 3a - 2 + b - k``.
    """
    a, b = f.a, f.b
    inv = mod_inverse(f)
    a_star, k = inv.a_star, inv.k
    odd = _odd_tail(euclid_quotients(a, b))
    t = _alternating(odd)
    m = 4 * b
    abt = check_budget(a * b * t, "a*b*T")
    combined = check_budget(
        -a * a - a * a_star + 3 * a * b - (a - 1) * (b - 1) * (a + b - 1) + a * (b - 1) * (b - 2),
        "proof-chain right-hand side",
    )
    expanded = check_budget(-a * a * b + 3 * a * b - 2 * b + b * b - k * b, "proof-chain right-hand side")
    return (
        (abt - combined) % m == 0
        and (abt - expanded) % m == 0
        and (a * t - (-a * a + 3 * a - 2 + b - k)) % 4 == 0
    )
