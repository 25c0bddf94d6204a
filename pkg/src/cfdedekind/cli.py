"""Command-line interface.

Exit codes: 0 clean, 1 usage error, 2 violation or conjecture counterexample,
3 integer budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cfdedekind.congruence_lab import CaseId, check_pair, predicted_residue
from cfdedekind.contfrac import cf_expand, cf_normalize_odd, cf_stats
from cfdedekind.dedekind import dedekind_fast, dedekind_naive
from cfdedekind.inversions import inversion_count_direct, inversion_from_meyer, salie_check
from cfdedekind.number_core import Fraction, InvalidPairError, OverflowBudgetError
from cfdedekind.sweep import CHECK_GROUPS, SweepConfig, SweepSummary, verify

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_OVERFLOW = 0, 1, 2, 3
COUNTEREXAMPLE_TAG = "CONJECTURE-COUNTEREXAMPLE"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cmd_cf(f: Fraction) -> int:
    canon = cf_expand(f)
    st = cf_stats(f)
    print(f"{f}")
    print(f"canonical: {canon}")
    print(f"odd:       {cf_normalize_odd(canon)}")
    print(f"T={st.T} T'={st.T_prime} D={st.D}")
    return EXIT_OK


def cmd_dedekind(f: Fraction, mode: str) -> int:
    values = {}
    if mode in ("naive", "both"):
        values["naive"] = dedekind_naive(f).s
    if mode in ("fast", "both"):
        values["fast"] = dedekind_fast(f).s
    s = next(iter(values.values()))
    print(f"s({f.a},{f.b}) = {s}")
    print(f"12bs = {12 * f.b * s}")
    if len(set(values.values())) > 1:
        print(f"naive {values['naive']} != fast {values['fast']}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_inversions(f: Fraction) -> int:
    direct = inversion_count_direct(f)
    meyer = inversion_from_meyer(f, dedekind_fast(f))
    salie = salie_check(f, direct)
    print(f"I({f.a},{f.b}) direct={direct} meyer={meyer} salie={'holds' if salie else 'fails'}")
    return EXIT_OK if direct == meyer and salie else EXIT_VIOLATION


def cmd_classify(f: Fraction) -> int:
    rec = check_pair(f, with_dedekind=False, with_inversions=False)
    st = rec.stats
    print(f"{f}: a*={rec.inv.a_star} k={rec.inv.k} T={st.T} T'={st.T_prime} D={st.D}")
    for case in rec.applicable:
        cid = case.case_id
        ok = rec.verdicts[cid]
        if cid is CaseId.REMARK:
            rel = "T = T'+2" if len(rec.cf_canonical) % 2 == 0 else "T = T'"
            print(f"  {cid}: {rel} {'holds' if ok else 'FAILS'}")
            continue
        pred, actual = rec.residues[cid]
        stat, mod, _ = predicted_residue(cid, f.b, rec.inv.k)
        print(
            f"  {cid} (via {case.trigger}): predicted {stat}≡{pred} (mod {mod}), "
            f"actual {actual}, {'holds' if ok else 'FAILS'}"
        )
    return EXIT_OK if all(rec.verdicts.values()) else EXIT_VIOLATION


def print_summary(summary: SweepSummary) -> None:
    print(f"max_b={summary.max_b} pairs_checked={summary.pairs_checked}")
    labels = sorted(set(summary.applicable) | set(summary.violations), key=_label_order)
    print(f"{'check':<16}{'applicable':>12}{'violations':>12}")
    for label in labels:
        print(f"{label:<16}{summary.applicable[label]:>12}{summary.violations[label]:>12}")
    if summary.spot_checks:
        print(f"spot checks (seeded, large b): {summary.spot_checks}")
    print(f"elapsed: {summary.elapsed:.2f}s")


def _label_order(label: str):
    ids = [c.value for c in CaseId]
    return (ids.index(label), label) if label in ids else (len(ids), label)


def cmd_verify(config: SweepConfig) -> int:
    summary = verify(config)
    print_summary(summary)
    if summary.overflow is not None:
        print(f"overflow: {summary.overflow}", file=sys.stderr)
        return EXIT_OVERFLOW
    for label, a, b in summary.violating_pairs:
        print(f"VIOLATION {label} a={a} b={b}", file=sys.stderr)
    for label, a, b in summary.counterexamples:
        print(f"{COUNTEREXAMPLE_TAG} {label} a={a} b={b}", file=sys.stderr)
    return EXIT_OK if summary.clean else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cfdedekind", description="Continued fractions, Dedekind sums and mod-4 congruences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (
        ("cf", "canonical and odd expansions with T, T' and D"),
        ("inversions", "inversion count, direct and via Meyer's relation"),
        ("classify", "applicable cases with predicted and actual residues"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)

    p = sub.add_parser("dedekind", help="Dedekind sum s(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("mode", nargs="?", choices=("naive", "fast", "both"), default="both")

    p = sub.add_parser("verify", help="exhaustive sweep over all coprime pairs with b <= max-b")
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--check", choices=CHECK_GROUPS + ("all",), action="append", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", type=Path, default=None)
    p.add_argument("--seed", type=int, default=None, help="enable seeded large-b identity spot checks")
    p.add_argument("--naive-bound", type=int, default=500, help="use the O(b) Dedekind sum up to this b")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            checks = args.check or ["all"]
            selected = frozenset(CHECK_GROUPS) if "all" in checks else frozenset(checks)
            try:
                config = SweepConfig(
                    max_b=args.max_b,
                    checks=selected,
                    workers=args.jobs,
                    csv_path=args.csv,
                    seed=args.seed,
                    naive_bound=args.naive_bound,
                )
            except ValueError as exc:
                parser.error(str(exc))
            return cmd_verify(config)

        try:
            f = Fraction(args.a, args.b)
        except InvalidPairError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.command == "cf":
            return cmd_cf(f)
        if args.command == "dedekind":
            return cmd_dedekind(f, args.mode)
        if args.command == "inversions":
            return cmd_inversions(f)
        return cmd_classify(f)
    except OverflowBudgetError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
