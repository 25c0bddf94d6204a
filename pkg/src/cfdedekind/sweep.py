"""Exhaustive verification over all coprime pairs 0 < a < b <= max_b.

Work is cut into contiguous stripes of denominators and each stripe is checked
independently, in-process for ``workers == 1`` and in a process pool
otherwise. Stripe results are merged in stripe order, so counts, violation
lists and CSV bytes do not depend on the worker count.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from cfdedekind.congruence_lab import (
    CONJECTURE_CASES,
    CaseId,
    CheckRecord,
    check_pair,
    proof_chain_check,
)
from cfdedekind.contfrac import cf_stats
from cfdedekind.dedekind import DedekindValue, bhk_t_from_s, dedekind_fast, dedekind_naive
from cfdedekind.inversions import inversion_count_direct, inversion_from_meyer, salie_check
from cfdedekind.number_core import (
    Fraction,
    InconsistencyError,
    OverflowBudgetError,
    mod_inverse,
)

CHECK_GROUPS = ("theorem", "conjectures", "identities", "proof-chain")
CSV_COLUMNS = (
    "b", "a", "a_star", "k", "cf_canonical", "cf_odd", "T", "T_prime", "D",
    "s_num", "s_den", "inversions", "cases", "theorem_ok", "conjectures_status",
)
THEOREM_IDS = (CaseId.THM1_1, CaseId.THM1_2, CaseId.THM1_3, CaseId.COR2, CaseId.REMARK)
IDENTITY_LABELS = ("BHK", "FAST_NAIVE", "MEYER", "SALIE", "INV_SYM")
SPOT_CHECKS = 100
SPOT_MAX_B = 10**6


@dataclass(frozen=True)
class SweepConfig:
    max_b: int
    checks: frozenset[str] = frozenset(CHECK_GROUPS)
    workers: int = 1
    csv_path: Path | None = None
    seed: int | None = None
    naive_bound: int = 500

    def __post_init__(self) -> None:
        if self.max_b < 2:
            raise ValueError("max_b must be at least 2")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        unknown = set(self.checks) - set(CHECK_GROUPS)
        if unknown or not self.checks:
            raise ValueError(f"unknown or empty check selection: {sorted(unknown)}")


@dataclass
class SweepSummary:
    max_b: int
    pairs_checked: int = 0
    applicable: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    # (label, a, b); labels are case ids or identity names
    violating_pairs: list[tuple[str, int, int]] = field(default_factory=list)
    counterexamples: list[tuple[str, int, int]] = field(default_factory=list)
    spot_checks: int = 0
    elapsed: float = 0.0
    overflow: str | None = None

    @property
    def clean(self) -> bool:
        return not self.violating_pairs and not self.counterexamples and self.overflow is None

    def merge(self, other: SweepSummary) -> None:
        self.pairs_checked += other.pairs_checked
        self.applicable.update(other.applicable)
        self.violations.update(other.violations)
        self.violating_pairs.extend(other.violating_pairs)
        self.counterexamples.extend(other.counterexamples)
        self.spot_checks += other.spot_checks
        if self.overflow is None:
            self.overflow = other.overflow


def coprime_pairs(lo_b: int, hi_b: int):
    """Valid pairs with lo_b <= b <= hi_b, ordered by (b, a)."""
    for b in range(max(lo_b, 2), hi_b + 1):
        for a in range(1, b):
            if gcd(a, b) == 1:
                yield Fraction(a, b)


def totients(n: int) -> list[int]:
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:
            for m in range(p, n + 1, p):
                phi[m] -= phi[m] // p
    return phi


def pair_count(max_b: int) -> int:
    return sum(totients(max_b)[2:])


def stripes(max_b: int, n: int, per_pair_b: bool = False) -> list[tuple[int, int]]:
    """Split 2..max_b into at most n contiguous ranges of roughly equal work.

    Work per denominator is phi(b), times b when per-pair cost grows with b.
    """
    phi = totients(max_b)
    weight = [phi[b] * (b if per_pair_b else 1) for b in range(max_b + 1)]
    total = sum(weight[2:])
    out = []
    lo, acc = 2, 0
    for b in range(2, max_b + 1):
        acc += weight[b]
        if len(out) < n - 1 and acc * n >= total * (len(out) + 1):
            out.append((lo, b))
            lo = b + 1
    if lo <= max_b:
        out.append((lo, max_b))
    return out


def _identity_checks(f: Fraction, rec: CheckRecord, naive_bound: int) -> list[str]:
    failed = []
    fast = dedekind_fast(f) if rec.s is None else DedekindValue(rec.s, f)
    s = dedekind_naive(f) if f.b <= naive_bound else fast
    if s.s != fast.s:
        failed.append("FAST_NAIVE")
    if bhk_t_from_s(f, s, rec.inv) != rec.stats.T:
        failed.append("BHK")
    i_direct = rec.inversions if rec.inversions is not None else inversion_count_direct(f)
    if inversion_from_meyer(f, s) != i_direct:
        failed.append("MEYER")
    if not salie_check(f, i_direct):
        failed.append("SALIE")
    g = Fraction(rec.inv.a_star, f.b)
    if dedekind_fast(g).s != fast.s or cf_stats(g).T != rec.stats.T:
        failed.append("INV_SYM")
    return failed


def _csv_row(rec: CheckRecord) -> str:
    f, inv, st = rec.pair, rec.inv, rec.stats
    s_num = s_den = inversions = ""
    if rec.s is not None:
        s_num, s_den = str(rec.s.numerator), str(rec.s.denominator)
    if rec.inversions is not None:
        inversions = str(rec.inversions)
    conj = ";".join(f"{c}={rec.conjecture_status(c)}" for c in CONJECTURE_CASES)
    return ",".join((
        str(f.b), str(f.a), str(inv.a_star), str(inv.k),
        '"' + ",".join(map(str, rec.cf_canonical)) + '"',
        '"' + ",".join(map(str, rec.cf_odd)) + '"',
        str(st.T), str(st.T_prime), str(st.D), s_num, s_den, inversions,
        ";".join(str(c) for c in rec.case_ids),
        "true" if rec.theorem_ok else "false",
        conj,
    )) + "\n"


def run_stripe(config: SweepConfig, lo_b: int, hi_b: int) -> tuple[SweepSummary, str]:
    """Check every pair with lo_b <= b <= hi_b; returns the partial summary and CSV text."""
    checks = config.checks
    identities = "identities" in checks
    want_theorem = "theorem" in checks
    want_conj = "conjectures" in checks
    want_chain = "proof-chain" in checks
    want_csv = config.csv_path is not None

    summary = SweepSummary(config.max_b)
    applicable, violations = summary.applicable, summary.violations
    rows = []
    try:
        for f in coprime_pairs(lo_b, hi_b):
            summary.pairs_checked += 1
            failed = []
            try:
                rec = check_pair(f, with_dedekind=identities, with_inversions=identities)
                verdicts = rec.verdicts
                for cid in verdicts:
                    applicable[cid.value] += 1
                if want_theorem:
                    failed.extend(c.value for c in THEOREM_IDS if verdicts.get(c) is False)
                    if CaseId.THM1_1 in verdicts and CaseId.THM1_2 in verdicts:
                        applicable["OVERLAP"] += 1
                        if rec.residues[CaseId.THM1_1][0] != rec.residues[CaseId.THM1_2][0]:
                            failed.append("OVERLAP")
                if want_conj:
                    for c in CONJECTURE_CASES:
                        if verdicts.get(c) is False:
                            violations[c.value] += 1
                            summary.counterexamples.append((c.value, f.a, f.b))
                if identities:
                    for label in IDENTITY_LABELS:
                        applicable[label] += 1
                    failed.extend(_identity_checks(f, rec, config.naive_bound))
                if want_chain:
                    applicable["PROOF_CHAIN"] += 1
                    if not proof_chain_check(f):
                        failed.append("PROOF_CHAIN")
                if want_csv:
                    rows.append(_csv_row(rec))
            except InconsistencyError:
                failed.append("INTERNAL")
            for label in failed:
                violations[label] += 1
                summary.violating_pairs.append((label, f.a, f.b))
    except OverflowBudgetError as exc:
        summary.overflow = str(exc)
    return summary, "".join(rows)


def _run_stripe_args(args: tuple[SweepConfig, int, int]) -> tuple[SweepSummary, str]:
    return run_stripe(*args)


def spot_check(seed: int, count: int = SPOT_CHECKS, max_b: int = SPOT_MAX_B) -> SweepSummary:
    """Identity checks on seeded random pairs with large denominators."""
    rng = random.Random(seed)
    summary = SweepSummary(max_b)
    for _ in range(count):
        b = rng.randrange(2, max_b + 1)
        a = rng.randrange(1, b)
        while gcd(a, b) != 1:
            a = rng.randrange(1, b)
        f = Fraction(a, b)
        summary.spot_checks += 1
        fast = dedekind_fast(f)
        st = cf_stats(f)
        inv = mod_inverse(f)
        failed = []
        if dedekind_naive(f).s != fast.s:
            failed.append("SPOT_FAST_NAIVE")
        if bhk_t_from_s(f, fast, inv) != st.T:
            failed.append("SPOT_BHK")
        g = Fraction(inv.a_star, b)
        if dedekind_fast(g).s != fast.s or cf_stats(g).T != st.T:
            failed.append("SPOT_INV_SYM")
        for label in failed:
            summary.violations[label] += 1
            summary.violating_pairs.append((label, a, b))
    return summary


def verify(config: SweepConfig) -> SweepSummary:
    start = time.perf_counter()
    parts = stripes(config.max_b, config.workers, per_pair_b="identities" in config.checks)
    tasks = [(config, lo, hi) for lo, hi in parts]
    if config.workers == 1:
        results = [run_stripe(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_stripe_args, tasks))

    summary = SweepSummary(config.max_b)
    for part, _ in results:
        summary.merge(part)
    if config.seed is not None and "identities" in config.checks and summary.overflow is None:
        summary.merge(spot_check(config.seed))
    if config.csv_path is not None:
        with open(config.csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for _, text in results:
                fh.write(text)
    summary.elapsed = time.perf_counter() - start
    return summary
