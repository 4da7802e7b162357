import json

import pytest

from bincong import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTestCommand:
    def test_babbage_prime(self, capsys):
        code, out, _ = run(capsys, "test", "babbage", "7")
        assert code == 0
        assert out == "7 prime=true\n"

    def test_babbage_composite(self, capsys):
        code, out, _ = run(capsys, "test", "babbage", "9")
        assert code == 0
        assert out == "9 prime=false\n"

    def test_babbage_domain_error(self, capsys):
        code, out, err = run(capsys, "test", "babbage", "1")
        assert code == 1
        assert out == ""
        assert "error" in err

    def test_sharp_babbage(self, capsys):
        assert run(capsys, "test", "sharp-babbage", "25")[1] == "25 prime=false\n"

    def test_wilson(self, capsys):
        assert run(capsys, "test", "wilson", "5")[1] == "5 prime=true\n"

    def test_nonprimality(self, capsys):
        assert run(capsys, "test", "nonprimality", "9")[1] == "9 verdict=composite\n"
        assert run(capsys, "test", "nonprimality", "7")[1] == "7 verdict=inconclusive\n"

    def test_even_converse(self, capsys):
        code, out, _ = run(capsys, "test", "even-converse", "6")
        assert code == 0
        assert out == "6 residue_mod_4=2 holds=true\n"

    def test_mestrovic(self, capsys):
        assert run(capsys, "test", "mestrovic", "4", "2")[1] == "4 2 holds=true\n"

    def test_mestrovic_missing_p(self, capsys):
        code, _, err = run(capsys, "test", "mestrovic", "4")
        assert code == 1
        assert "error" in err

    def test_extra_argument_rejected(self, capsys):
        assert run(capsys, "test", "wilson", "5", "7")[0] == 1


class TestLpfCommand:
    def test_published_example(self, capsys):
        code, out, _ = run(capsys, "lpf", "260")
        assert code == 0
        assert out == "ell=2 residue=131\n"

    def test_domain_error(self, capsys):
        assert run(capsys, "lpf", "1")[0] == 1


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate", "3")[0] == 1

    def test_malformed_integer(self, capsys):
        assert run(capsys, "test", "babbage", "seven")[0] == 1

    def test_unknown_test_kind(self, capsys):
        assert run(capsys, "test", "fermat", "3")[0] == 1

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_internal_failure_exits_two(self, capsys, monkeypatch):
        def boom(_):
            raise RuntimeError("wires crossed")

        monkeypatch.setattr(cli.theorems, "wilson_test", boom)
        code, _, err = run(capsys, "test", "wilson", "5")
        assert code == 2
        assert "internal error" in err


class TestSeqCommand:
    def test_tsv_output(self, capsys):
        code, out, _ = run(capsys, "seq", "a290040", "--limit", "1100", "--format", "tsv")
        assert code == 0
        assert out == "260\t10\t10\n1056\t264\t264\n1060\t10\t10\n"

    def test_json_output_round_trips(self, capsys):
        _, out, _ = run(capsys, "seq", "a290040", "--limit", "1100", "--format", "json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[0] == {"m": 260, "smallest_d": 10, "all_d": [10]}
        assert [r["m"] for r in rows] == [260, 1056, 1060]

    def test_reruns_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "seq", "a290040", "--limit", "1200", "--format", "human")
        _, second, _ = run(capsys, "seq", "a290040", "--limit", "1200", "--format", "human")
        assert first == second

    def test_checkpoint_resume_concatenates_cleanly(self, capsys, tmp_path):
        ckpt = str(tmp_path / "scan.ckpt")
        _, clean, _ = run(capsys, "seq", "a290040", "--limit", "1600", "--format", "tsv")
        _, head, _ = run(capsys, "seq", "a290040", "--limit", "700", "--format", "tsv", "--checkpoint", ckpt)
        _, tail, _ = run(capsys, "seq", "a290040", "--limit", "1600", "--format", "tsv", "--checkpoint", ckpt)
        assert head + tail == clean

    def test_finished_checkpoint_emits_nothing(self, capsys, tmp_path):
        ckpt = str(tmp_path / "scan.ckpt")
        run(capsys, "seq", "a290040", "--limit", "600", "--checkpoint", ckpt)
        code, out, _ = run(capsys, "seq", "a290040", "--limit", "600", "--checkpoint", ckpt)
        assert code == 0
        assert out == ""

    def test_missing_limit_rejected(self, capsys):
        assert run(capsys, "seq", "a290040")[0] == 1


class TestScanCommand:
    def test_none_found(self, capsys):
        code, out, _ = run(capsys, "scan", "prime-power", "--limit", "300")
        assert code == 0
        assert out == "none found below 300\n"


class TestWolstenholmeCommand:
    def test_line_format(self, capsys):
        code, out, _ = run(capsys, "wolstenholme", "5")
        assert code == 0
        assert out == "p=5 mod_p3=1 mod_p4=126 wolstenholme_prime=false B_{p-3} mod p=1\n"

    def test_rejects_composite(self, capsys):
        assert run(capsys, "wolstenholme", "9")[0] == 1


class TestVerifyCommand:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (("verify", "lucas", "10", "6", "7"), "lucas=0 exact=0 agree=true\n"),
            (("verify", "kummer", "3", "3", "2"), "carries=2 valuation=2 agree=true\n"),
            (("verify", "vandermonde", "4", "3"), "lhs=35 rhs=35 agree=true\n"),
            (("verify", "lemma1", "8", "4"), "v2_formula=1 v2_exact=1 agree=true\n"),
            (("verify", "lemma2", "6"), "odd=false exact_odd=false agree=true\n"),
            (
                ("verify", "johnson", "5"),
                "p=5 lhs_mod_p4=126 rhs_mod_p4=126 agree=true\n",
            ),
            (
                ("verify", "counterexample", "5"),
                "p=5 m=25 residue_mod_m2=126 counterexample=false\n",
            ),
        ],
    )
    def test_cross_checks(self, capsys, argv, expected):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out == expected

    def test_wrong_arity_rejected(self, capsys):
        assert run(capsys, "verify", "lucas", "10", "6")[0] == 1

    def test_unknown_kind_rejected(self, capsys):
        assert run(capsys, "verify", "fermat", "3")[0] == 1
