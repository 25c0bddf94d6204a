"""Exit criteria, each at its stated bound. One PASS/FAIL line per criterion is
printed in the terminal summary."""

import random
import time
from math import gcd

import pytest

from cfdedekind.congruence_lab import CaseId, classify, proof_chain_check
from cfdedekind.contfrac import cf_expand, cf_stats
from cfdedekind.dedekind import dedekind_fast, dedekind_naive
from cfdedekind.inversions import inversion_count_direct, salie_check
from cfdedekind.number_core import ExactRational, Fraction, mod_inverse
from cfdedekind.sweep import SweepConfig, coprime_pairs, pair_count, verify

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.slow


def record(n, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {n:>2}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failures: {failures[:5]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


@pytest.fixture(scope="module")
def pairs_500():
    """(pair, naive s, direct I) for every pair with b <= 500."""
    out = []
    for f in coprime_pairs(2, 500):
        out.append((f, dedekind_naive(f).s, inversion_count_direct(f)))
    return out


def test_01_theorem_sweep():
    start = time.perf_counter()
    summary = verify(SweepConfig(max_b=2000, checks=frozenset({"theorem"}), workers=1))
    elapsed = time.perf_counter() - start
    failures = list(summary.violating_pairs)
    if summary.pairs_checked != pair_count(2000):
        failures.append(("pair count", summary.pairs_checked))
    if elapsed >= 60:
        failures.append(("runtime", round(elapsed, 1)))
    record(1, "Theorem 1(1)-(3), Corollary 2 over b <= 2000", failures,
           f"{summary.pairs_checked} pairs, {elapsed:.1f}s single-threaded")


def test_02_bhk_identity(pairs_500):
    failures = []
    for f, s, _ in pairs_500:
        inv = mod_inverse(f)
        lhs = 12 * s
        rhs = cf_stats(f).T + ExactRational(f.a + inv.a_star, f.b) - 3
        if lhs != rhs:
            failures.append((f.a, f.b))
    record(2, "BHK 12s = T + (a+a*)/b - 3, naive s, b <= 500", failures, f"{len(pairs_500)} pairs, exact")


def test_03_meyer_identity(pairs_500):
    failures = []
    for f, s, i in pairs_500:
        b = f.b
        if 12 * b * s != -4 * i + (b - 1) * (b - 2):
            failures.append((f.a, b))
    record(3, "Meyer 12bs = -4I + (b-1)(b-2), merge-count I, b <= 500", failures, f"{len(pairs_500)} pairs, exact")


def test_04_salie_congruence(pairs_500):
    failures = [(f.a, f.b) for f, _, i in pairs_500 if not salie_check(f, i)]
    record(4, "Salie 4aI = (a-1)(b-1)(a+b-1) mod 4b, b <= 500", failures, f"{len(pairs_500)} pairs")


def test_05_fast_naive_equivalence():
    failures = []
    n_exhaustive = 0
    for f in coprime_pairs(2, 300):
        n_exhaustive += 1
        if dedekind_fast(f).s != dedekind_naive(f).s:
            failures.append((f.a, f.b))
    rng = random.Random(20260101)
    n_random = 0
    while n_random < 1000:
        b = rng.randrange(2, 10**6 + 1)
        a = rng.randrange(1, b)
        if gcd(a, b) != 1:
            continue
        n_random += 1
        f = Fraction(a, b)
        if dedekind_fast(f).s != dedekind_naive(f).s:
            failures.append((a, b))
    record(5, "fast == naive Dedekind sum", failures,
           f"{n_exhaustive} exhaustive b <= 300 + {n_random} seeded pairs b <= 10^6")


def test_06_inverse_symmetries():
    failures = []
    n = 0
    for f in coprime_pairs(2, 1000):
        n += 1
        g = Fraction(mod_inverse(f).a_star, f.b)
        if dedekind_fast(f).s != dedekind_fast(g).s or cf_stats(f).T != cf_stats(g).T:
            failures.append((f.a, f.b))
    record(6, "s(a,b) = s(a*,b) and T(a,b) = T(a*,b), b <= 1000", failures, f"{n} pairs")


def test_07_remark_identity():
    failures = []
    n_even = n = 0
    for f in coprime_pairs(2, 1000):
        n += 1
        st = cf_stats(f)
        if cf_expand(f).n % 2 == 0:
            n_even += 1
            ok = st.T == st.T_prime + 2
        else:
            ok = st.T == st.T_prime
        if not ok:
            failures.append((f.a, f.b))
    record(7, "T = T' + 2 (even canonical length), T = T' (odd), b <= 1000", failures,
           f"{n} pairs, {n_even} of even length")


def test_08_proof_chain():
    failures = []
    n = 0
    for f in coprime_pairs(2, 1000):
        n += 1
        if not proof_chain_check(f):
            failures.append((f.a, f.b))
    record(8, "proof-chain congruences mod 4b and mod 4, b <= 1000", failures, f"{n} pairs")


def test_09_conjecture_frontier():
    summary = verify(SweepConfig(max_b=5000, checks=frozenset({"conjectures"}), workers=1))
    failures = list(summary.counterexamples)
    counts = {c: summary.applicable[c] for c in ("CONJ1", "CONJ2", "CONJ3")}
    failures += [(c, "no applicable pairs") for c, v in counts.items() if v == 0]
    for pair, needed in (((2, 15), CaseId.CONJ1), ((4, 15), CaseId.CONJ2), ((4, 15), CaseId.CONJ3)):
        f = Fraction(*pair)
        if needed not in {c.case_id for c in classify(f, mod_inverse(f))}:
            failures.append((pair, needed.value, "not applicable"))
    record(9, "conjectures, b <= 5000, zero counterexamples", failures,
           f"{summary.pairs_checked} pairs, applicable {counts}")


def test_10_determinism(tmp_path):
    blobs = {}
    for workers in (1, 8):
        path = tmp_path / f"w{workers}.csv"
        verify(SweepConfig(max_b=200, workers=workers, csv_path=path))
        blobs[workers] = path.read_bytes()
    failures = [] if blobs[1] == blobs[8] else ["CSV bytes differ between 1 and 8 workers"]
    rows = blobs[1].count(b"\n") - 1
    if rows != pair_count(200):
        failures.append(("row count", rows))
    record(10, "CSV byte-identical for 1 and 8 workers, b <= 200, --check all", failures, f"{rows} rows")
