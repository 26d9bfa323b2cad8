import json
from pathlib import Path

import pytest

from leftsimple import cli
from leftsimple.semigroup import Semigroup

DATA = Path(__file__).parent / "data"
L2Z2 = str(DATA / "l2z2.txt")
Z6 = str(DATA / "z6.json")


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip().startswith("{") and code == 0 else out), err


class TestCheck:
    def test_l2z2(self, capsys):
        code, rep, _ = run(capsys, "check", L2Z2)
        assert code == 0
        r = rep["results"]
        assert r["left_simple"] and r["idempotents"] == 2 and r["idempotent_elements"] == ["p0", "q0"]
        assert not r["is_group"] and "timing" in rep

    def test_semilattice(self, capsys):
        code, rep, _ = run(capsys, "check", DATA / "semilattice.txt", "--golden")
        assert code == 0 and rep["results"]["left_simple"] is False and "timing" not in rep

    def test_malformed(self, capsys):
        code, out, err = run(capsys, "check", DATA / "bad_row.txt")
        assert code == 1 and out == ""
        assert "ParseError" in err and "line 4, column 3" in err

    def test_corrupted(self, capsys):
        code, _, err = run(capsys, "check", DATA / "corrupted.txt")
        assert code == 1 and "NotAssociative" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", DATA / "absent.txt")
        assert code == 1 and "error" in err


class TestSubset:
    def test_ru(self, capsys):
        code, rep, _ = run(capsys, "subset", L2Z2, "H")
        r = rep["results"]
        assert code == 0 and r["reflexive"] and r["unitary"] and r["witnesses"] == {}
        assert r["quotient"]["group"] == "Z2" and r["quotient"]["group_with_identity_H"]

    def test_row(self, capsys):
        code, rep, _ = run(capsys, "subset", L2Z2, "R")
        r = rep["results"]
        assert not r["left_unitary"] and r["right_unitary"]
        assert r["witnesses"]["left_unitary"] == ["p0", "q0"]
        assert "quotient" not in r

    def test_full(self, capsys):
        _, rep, _ = run(capsys, "subset", L2Z2, "F")
        assert rep["results"]["quotient"]["order"] == 1

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "subset", L2Z2, "Q")
        assert code == 1 and "UnknownSubset" in err


class TestSeries:
    def test_validate(self, capsys):
        code, rep, _ = run(capsys, "series", Z6, "validate", "even", "zero")
        r = rep["results"]
        assert code == 0 and r["factors"] == ["Z2", "Z3"] and r["composition_series"]

    def test_validate_bad(self, capsys):
        code, _, err = run(capsys, "series", L2Z2, "validate", "R")
        assert code == 1 and "NotReflexiveUnitaryInPredecessor" in err

    def test_refine(self, capsys):
        code, rep, _ = run(capsys, "series", Z6, "refine", "--first", "even", "zero", "--second", "half", "zero")
        r = rep["results"]
        assert code == 0 and r["isomorphic"]
        assert sorted(r["first"]["factors"]) == sorted(r["second"]["factors"]) == ["Z1", "Z1", "Z2", "Z3"]

    def test_refine_needs_both(self, capsys):
        code, _, err = run(capsys, "series", Z6, "refine", "--first", "even")
        assert code == 1 and "InvalidParams" in err

    def test_compose(self, capsys, tmp_path):
        out = tmp_path / "l2z6.txt"
        assert cli.main(["generate", "left-group", "2", "Z6", "-o", str(out)]) == 0
        capsys.readouterr()
        code, rep, _ = run(capsys, "series", out, "compose", "--all")
        assert code == 0 and len(rep["results"]["series"]) == 2
        assert all(sorted(s["factors"]) == ["Z2", "Z3"] for s in rep["results"]["series"])

    def test_jordan_holder(self, capsys, tmp_path):
        out = tmp_path / "l3.txt"
        out.write_text("elements: a b c\ntable:\n  a a a\n  b b b\n  c c c\n")
        code, rep, _ = run(capsys, "series", out, "jordan-holder", "--golden")
        assert code == 0 and rep["results"]["length"] == 0 and len(rep["results"]["series"]) == 1

    def test_precondition_exit(self, capsys):
        code, _, err = run(capsys, "series", DATA / "semilattice.txt", "compose")
        assert code == 2 and "NotLeftSimple" in err


class TestEnumerate:
    @pytest.mark.parametrize("text, count", [
        ("elements: a b\ntable:\n  a a\n  b b\n", 1),
        ("elements: 0 1 2 3\ntable:\n  0 1 2 3\n  1 2 3 0\n  2 3 0 1\n  3 0 1 2\n", 3),
    ])
    def test_counts(self, capsys, tmp_path, text, count):
        f = tmp_path / "s.txt"
        f.write_text(text)
        code, rep, _ = run(capsys, "enumerate", f)
        assert code == 0 and rep["results"]["count"] == count

    def test_z4_sets(self, capsys, tmp_path):
        f = tmp_path / "z4.txt"
        f.write_text("elements: 0 1 2 3\ntable:\n  0 1 2 3\n  1 2 3 0\n  2 3 0 1\n  3 0 1 2\n")
        _, rep, _ = run(capsys, "enumerate", f)
        assert rep["results"]["subsemigroups"] == [["0"], ["0", "2"], ["0", "1", "2", "3"]]

    def test_l2z4(self, capsys, tmp_path):
        f = tmp_path / "l2z4.txt"
        cli.main(["generate", "left-group", "2", "Z4", "-o", str(f)])
        capsys.readouterr()
        _, rep, _ = run(capsys, "enumerate", f)
        assert rep["results"]["count"] == 3


class TestGenerate:
    def test_left_group(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        code, rep, _ = run(capsys, "generate", "left-group", "2", "Z4", "-o", f)
        assert code == 0 and rep["results"]["order"] == 8
        code, rep, _ = run(capsys, "check", f)
        assert code == 0 and rep["results"]["order"] == 8 and rep["results"]["left_simple"]

    def test_double_z2(self, capsys, tmp_path):
        f = tmp_path / "d.json"
        run(capsys, "generate", "double", "Z2", "-o", f, "--json")
        code, rep, _ = run(capsys, "check", f)
        assert rep["results"]["order"] == 4 and rep["results"]["is_group"]
        assert rep["results"]["group_name"] == "Klein"

    def test_trivial_to_stdout(self, capsys):
        code = cli.main(["generate", "left-group", "1", "Z1"])
        out = capsys.readouterr().out
        assert code == 0 and out.startswith("elements:")

    @pytest.mark.parametrize("argv", [
        ["generate", "left-group", "x", "Z4"],
        ["generate", "left-group", "2", "Z99"],
        ["generate", "left-group", "0", "Z2"],
        ["generate", "double", "Z2", "Z3"],
        ["generate", "double", "nonsense"],
    ])
    def test_invalid(self, capsys, argv):
        assert cli.main(argv) == 1
        assert "InvalidParams" in capsys.readouterr().err


class TestCertify:
    def test_trivial_corpus(self, capsys):
        code, rep, _ = run(capsys, "certify", "--max-order", "1", "--golden")
        assert code == 0 and rep["passed"] and rep["corpus"]["members"] == 1
        assert set(rep["matrix"]["L1xZ1"].values()) <= {"pass", "skip"}

    def test_small_corpus_parallel_matches_serial(self, capsys):
        cli.main(["certify", "--max-order", "4", "--golden"])
        serial = capsys.readouterr().out
        cli.main(["certify", "--max-order", "4", "--golden", "--jobs", "2"])
        assert capsys.readouterr().out == serial

    def test_corrupted_member(self, capsys, monkeypatch):
        def broken(spec):
            return [Semigroup([[1, 0], [0, 0]])]

        monkeypatch.setattr(cli, "build_corpus", broken)
        code, _, err = run(capsys, "certify", "--golden")
        assert code == 1 and "NotAssociative" in err

    def test_failing_check_exit_3(self, capsys, monkeypatch):
        from leftsimple import verify

        def bad(S, limits):
            raise verify._Fail("forced")

        monkeypatch.setitem(verify.CHECKS, "right_unitary_left_simple", bad)
        code = cli.main(["certify", "--max-order", "2", "--golden"])
        rep = json.loads(capsys.readouterr().out)
        assert code == 3 and not rep["passed"]
        assert rep["failures"][0] == {"member": "L1xZ1", "check": "right_unitary_left_simple", "witness": "forced"}
