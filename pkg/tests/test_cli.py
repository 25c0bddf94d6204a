import pytest

import cfdedekind.congruence_lab as lab
from cfdedekind.cli import COUNTEREXAMPLE_TAG, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "7", "11")
    assert code == 0
    assert "[0;1,1,1,3]" in out and "[0;1,1,1,2,1]" in out and "T=0 T'=-2 D=6" in out


def test_cf_trivial(capsys):
    code, out, _ = run(capsys, "cf", "1", "2")
    assert code == 0 and "[0;2]" in out and "T=2 T'=2 D=2" in out


@pytest.mark.parametrize("argv", [("cf", "4", "6"), ("classify", "0", "5"), ("dedekind", "5", "3", "fast"), ("inversions", "3", "3")])
def test_invalid_pair_is_usage_error(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "usage error" in err


@pytest.mark.parametrize("argv", [("verify",), ("verify", "--max-b", "1"), ("verify", "--max-b", "9", "--jobs", "0"), ("bogus",), ("verify", "--max-b", "9", "--check", "nope")])
def test_bad_arguments_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 1


def test_overflow_exit_3(capsys):
    code, _, err = run(capsys, "cf", "1", str(2**31 + 1))
    assert code == 3 and "overflow" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("dedekind", "1", "3", "both"), ["s(1,3) = 1/18", "12bs = 2"]),
        (("dedekind", "2", "5", "fast"), ["s(2,5) = 0"]),
        (("dedekind", "1", "2", "naive"), ["s(1,2) = 0"]),
    ],
)
def test_dedekind(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    for line in expected:
        assert line in out


def test_dedekind_disagreement_exit_2(capsys, monkeypatch):
    import cfdedekind.cli as cli
    from cfdedekind.dedekind import DedekindValue
    from cfdedekind.number_core import ExactRational

    monkeypatch.setattr(cli, "dedekind_fast", lambda f: DedekindValue(ExactRational(1, 6 * f.b), f))
    code, _, err = run(capsys, "dedekind", "2", "5", "both")
    assert code == 2 and "!=" in err


def test_inversions(capsys):
    code, out, _ = run(capsys, "inversions", "2", "5")
    assert code == 0 and "direct=3 meyer=3 salie=holds" in out


@pytest.mark.parametrize(
    "pair, needle",
    [
        (("2", "15"), "CONJ1 (via a): predicted T≡3 (mod 4), actual 3, holds"),
        (("1", "4"), "THM1_1 (via both): predicted T≡0 (mod 4), actual 0, holds"),
        (("4", "15"), "CONJ2 (via both): predicted T≡1 (mod 4), actual 1, holds"),
        (("4", "15"), "CONJ3 (via both): predicted D≡1 (mod 2), actual 1, holds"),
    ],
)
def test_classify(capsys, pair, needle):
    code, out, _ = run(capsys, "classify", *pair)
    assert code == 0 and needle in out


def test_verify_clean(capsys):
    code, out, err = run(capsys, "verify", "--max-b", "100", "--check", "all", "--seed", "5")
    assert code == 0 and err == ""
    assert "pairs_checked=3043" in out and "spot checks" in out


def test_verify_csv_rows(capsys, tmp_path):
    path = tmp_path / "o.csv"
    code, out, _ = run(capsys, "verify", "--max-b", "60", "--check", "identities", "--csv", str(path))
    assert code == 0
    n = int(out.split("pairs_checked=")[1].split()[0])
    assert len(path.read_text().splitlines()) == n + 1


def test_verify_theorem_violation_exit_2(capsys, monkeypatch):
    real = lab.predicted_residue
    monkeypatch.setattr(
        lab, "predicted_residue",
        lambda c, b, k: real(c, b, k)._replace(value=5) if c is lab.CaseId.COR2 else real(c, b, k),
    )
    code, _, err = run(capsys, "verify", "--max-b", "10", "--check", "theorem")
    assert code == 2 and "VIOLATION COR2" in err and COUNTEREXAMPLE_TAG not in err


def test_verify_conjecture_counterexample_is_tagged(capsys, monkeypatch):
    real = lab.predicted_residue
    monkeypatch.setattr(
        lab, "predicted_residue",
        lambda c, b, k: real(c, b, k)._replace(value=0) if c is lab.CaseId.CONJ3 else real(c, b, k),
    )
    code, _, err = run(capsys, "verify", "--max-b", "20", "--check", "conjectures")
    assert code == 2
    assert f"{COUNTEREXAMPLE_TAG} CONJ3 a=4 b=15" in err
    assert "VIOLATION" not in err


def test_verify_overflow_exit_3(capsys, monkeypatch):
    import cfdedekind.sweep as sweep
    from cfdedekind.number_core import OverflowBudgetError

    def boom(f, **kw):
        raise OverflowBudgetError("forced")

    monkeypatch.setattr(sweep, "check_pair", boom)
    code, _, err = run(capsys, "verify", "--max-b", "5")
    assert code == 3 and "forced" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "cfdedekind", "cf", "2", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and "[0;2,1,1]" in proc.stdout
