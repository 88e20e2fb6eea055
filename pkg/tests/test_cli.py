"""Command-line interface: output formats, methods, and exit codes."""

import json

import pytest

from descentpoly.cli import (
    EXIT_CAP,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


class TestPoly:
    def test_methods_agree_on_pinned_example(self, capsys):
        results = {}
        for method in ("brute", "recursion", "formula1", "formula2", "rook"):
            record = run_json(
                capsys,
                "poly",
                "--n", "6",
                "--x", "{2,3,4,6,7,9}",
                "--y", "{1,4,8}",
                "--method", method,
            )
            results[method] = record["result"]["coefficients"]
            assert record["method"] == method
        reference = results["brute"]
        assert reference["2"] == "72"
        for method, coeffs in results.items():
            assert coeffs == reference, method

    def test_difference_set_restricted_to_brute_and_rook(self, capsys):
        brute = run_json(
            capsys, "poly", "--n", "6", "--x", "all", "--y", "all",
            "--z", "{1}", "--method", "brute",
        )
        rook = run_json(
            capsys, "xyz", "--n", "6", "--x", "all", "--y", "all",
            "--z", "{1}", "--method", "rook",
        )
        assert brute["result"]["coefficients"] == rook["result"]["coefficients"]
        code, _, err = run(
            capsys, "poly", "--n", "6", "--x", "all", "--y", "all",
            "--z", "{1}", "--method", "formula1",
        )
        assert code == EXIT_USAGE
        assert "does not support --z" in err

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "--format", "text", "poly", "--n", "4", "--x", "all",
            "--y", "all", "--method", "recursion",
        )
        assert code == EXIT_OK
        assert "command: poly" in out
        assert "method: recursion" in out

    def test_coefficients_survive_json_as_strings(self, capsys):
        record = run_json(
            capsys, "poly", "--n", "30", "--x", "mod:2:0", "--y", "all",
            "--method", "recursion",
        )
        total = sum(int(v) for v in record["result"]["coefficients"].values())
        from math import factorial

        assert total == factorial(30)


class TestOtherCommands:
    def test_word_poly(self, capsys):
        brute = run_json(
            capsys, "word-poly", "--rho", "2,3,1,2", "--x", "{2,4}",
            "--y", "{1,2}", "--method", "brute",
        )
        f1 = run_json(
            capsys, "word-poly", "--rho", "2,3,1,2", "--x", "{2,4}",
            "--y", "{1,2}", "--method", "formula1",
        )
        assert brute["result"]["coefficients"] == f1["result"]["coefficients"]

    def test_board(self, capsys):
        record = run_json(
            capsys, "board", "--n", "8", "--x", "{2,3,5,7,8}",
            "--y", "{1,2,4,5,6}",
        )
        assert record["result"]["canonical_x"] == "{2,3,4,5,7}"
        assert len(record["result"]["grid"]) == 8

    def test_board_non_ferrers(self, capsys):
        record = run_json(
            capsys, "board", "--n", "4", "--x", "all", "--y", "all",
            "--z", "{1}",
        )
        assert record["result"]["canonical_x"] is None

    def test_foata(self, capsys):
        record = run_json(capsys, "foata", "--perm", "61437258")
        assert record["result"]["image"] == "43612758"
        back = run_json(capsys, "foata", "--perm", "43612758", "--inverse")
        assert back["result"]["image"] == "61437258"

    def test_configs(self, capsys):
        record = run_json(
            capsys, "configs", "--n", "6", "--s", "1", "--r", "1",
            "--x", "{2,3,6}", "--y", "{1,2,5}", "--flavor", "overline",
            "--trace", "213+6-54",
        )
        assert record["result"]["count"] == 1344
        assert record["result"]["staged_count"] == 1344
        assert record["result"]["trace"]["image"] == "213+6+54"

    def test_qpoly(self, capsys):
        record = run_json(capsys, "q-poly", "--n", "4", "--x", "all")
        total = sum(int(v) for v in record["result"]["coefficients_q_x"].values())
        assert total == 24

    def test_hypergeom(self, capsys):
        record = run_json(capsys, "hypergeom", "--suite", "pfaff", "--max", "2")
        assert record["result"]["cases_checked"] > 0
        record = run_json(capsys, "hypergeom", "--suite", "cor35", "--max", "2")
        assert record["result"]["cases_checked"] > 0

    def test_verify(self, capsys):
        record = run_json(capsys, "verify", "--suite", "formulas", "--max-n", "3")
        assert record["result"]["cases_checked"]["formulas"] > 0


class TestExitCodes:
    def test_bad_set_syntax(self, capsys):
        code, _, err = run(
            capsys, "poly", "--n", "4", "--x", "nope", "--y", "all",
        )
        assert code == EXIT_USAGE
        assert "usage error" in err

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_cap_exceeded(self, capsys):
        code, _, err = run(
            capsys, "poly", "--n", "12", "--x", "all", "--y", "all",
            "--method", "brute",
        )
        assert code == EXIT_CAP
        assert "cap exceeded" in err

    def test_lowered_cap_flag(self, capsys):
        code, _, _ = run(
            capsys, "--max-brute", "4", "poly", "--n", "5", "--x", "all",
            "--y", "all", "--method", "brute",
        )
        assert code == EXIT_CAP
