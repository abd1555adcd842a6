import json
from pathlib import Path

import pytest

from sncindex.cli import main, truncated_rate
from fractions import Fraction

GOLDEN = Path(__file__).parent / "data" / "rate_table_golden.tsv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_air_prints_exact_matrix(capsys):
    code, out, _ = run(capsys, "air", "--rows", "7", "--cols", "5")
    assert code == 0
    assert out == "10000\n01000\n00100\n00010\n00001\n10101\n01011\n"


def test_air_square(capsys):
    code, out, _ = run(capsys, "air", "--rows", "5", "--cols", "5")
    assert code == 0
    assert out.splitlines() == ["10000", "01000", "00100", "00010", "00001"]


def test_air_verify_and_chain(capsys):
    code, out, _ = run(capsys, "air", "--rows", "8", "--cols", "3", "--verify", "--chain")
    assert code == 0
    lines = out.splitlines()
    assert "lambda\t3,5,3,2,1" in lines
    assert "windows\tPASS" in lines


def test_air_usage_error(capsys):
    code, _, err = run(capsys, "air", "--rows", "3", "--cols", "5")
    assert code == 1
    assert "error" in err


def test_missing_subcommand_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_truncated_rate_rounds_toward_zero():
    assert truncated_rate(Fraction(805, 2)) == "402.5"
    assert truncated_rate(Fraction(806, 3)) == "268.6"
    assert truncated_rate(Fraction(807, 4)) == "201.7"
    assert truncated_rate(Fraction(74)) == "74.0"


def test_sweep_paper_table_matches_golden_bytes(capsys):
    code, out, _ = run(capsys, "sweep", "--paper-table")
    assert code == 0
    assert out.encode() == GOLDEN.read_bytes()


def test_sweep_custom_range(capsys):
    code, out, _ = run(capsys, "sweep", "--k", "20", "--d", "9", "--u-from", "2", "--u-to", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "K\tD\tU\tbeta\tgamma"
    assert lines[1] == "20\t9\t2\t4.3\t5"


def test_analyze_tsv(capsys):
    code, out, _ = run(capsys, "analyze", "--k", "17", "--d", "6", "--u", "2")
    assert code == 0
    header, row = out.splitlines()
    fields = dict(zip(header.split("\t"), row.split("\t")))
    assert fields["beta"] == "13/3"
    assert fields["mais"] == "4"
    assert fields["gamma"] == "5"
    assert fields["optimality"] == "true"
    assert fields["minrank"] == "5"


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--k", "16", "--d", "3", "--u", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["beta"] == "5"
    assert data["gamma"] == 6
    assert data["optimality"] is False
    assert data["minrank"] == "5..6"


def test_analyze_rejects_invalid_instance(capsys):
    code, _, err = run(capsys, "analyze", "--k", "5", "--d", "4", "--u", "1")
    assert code == 1
    assert "U + D <= K - 1" in err


def test_encode_decode_round_trip(capsys):
    msgs = "10110100101101001011"
    code, out, _ = run(capsys, "encode", "--k", "20", "--d", "9", "--u", "2", "--messages", msgs)
    assert code == 0
    cw = out.strip()
    assert cw == "10000"
    known = [(4 + j) % 20 for j in range(-2, 0)] + [(4 + j) % 20 for j in range(1, 10)]
    side = "".join(msgs[i] if i in known else "?" for i in range(20))
    code, out, _ = run(
        capsys, "decode", "--k", "20", "--d", "9", "--u", "2",
        "--receiver", "4", "--code", cw, "--sideinfo", side,
    )
    assert code == 0
    assert out.strip() == msgs[4]


def test_decode_rejects_bad_mask(capsys):
    code, _, err = run(
        capsys, "decode", "--k", "4", "--d", "1", "--u", "0",
        "--receiver", "0", "--code", "100", "--sideinfo", "??0?",
    )
    assert code == 1


def test_plan_table(capsys):
    code, out, _ = run(capsys, "plan", "--k", "20", "--d", "9", "--u", "2")
    assert code == 0
    assert out == (
        "receivers\tsymbols\n"
        "0-2\tc0,c2\n"
        "3-5\tc1,c3\n"
        "6-8\tc2,c3,c4\n"
        "9-11\tc3,c4\n"
        "12-14\tc4\n"
        "15-17\tc0\n"
        "18-19\tc1\n"
    )


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--k", "20", "--d", "9", "--u", "2", "--trials", "20")
    assert code == 0
    assert "roundtrip\tPASS" in out
    assert "decodable\tPASS" in out


def test_verify_with_oracles(capsys):
    code, out, _ = run(
        capsys, "verify", "--k", "12", "--d", "4", "--u", "1", "--trials", "10", "--with-oracles"
    )
    assert code == 0
    assert "oracle_mais\tPASS" in out


def test_verify_corrupt_hook_fails(capsys):
    code, out, _ = run(
        capsys, "verify", "--k", "20", "--d", "9", "--u", "2", "--trials", "5", "--corrupt"
    )
    assert code == 2
    assert "FAIL" in out


def test_oracle_mais(capsys):
    code, out, _ = run(capsys, "oracle", "mais", "--k", "12", "--d", "4", "--u", "1")
    assert code == 0
    assert out.startswith("mais\tformula=4\tbrute=4\tPASS")


def test_oracle_minrank(capsys):
    code, out, _ = run(capsys, "oracle", "minrank", "--k", "5", "--d", "1", "--u", "1")
    assert code == 0
    assert "brute=3" in out


def test_oracle_cap_errors(capsys):
    code, _, err = run(capsys, "oracle", "mais", "--k", "22", "--d", "2", "--u", "1")
    assert code == 1
    assert "cap" in err


def test_oracle_decodable(capsys):
    code, out, _ = run(capsys, "oracle", "decodable", "--k", "20", "--d", "9", "--u", "2")
    assert code == 0
    assert "pass=20/20" in out


def test_baseline_generator_and_compare(capsys):
    code, out, _ = run(capsys, "baseline", "mds", "--k", "4", "--d", "1", "--u", "0")
    assert code == 0
    assert out == "1 0 0\n1 1 1\n1 2 4\n1 3 4\n"
    code, out, _ = run(capsys, "baseline", "mds", "--k", "20", "--d", "9", "--u", "2", "--compare")
    assert code == 0
    assert out.splitlines()[1] == "5\t9\tair\t5"


def test_baseline_encode(capsys):
    code, out, _ = run(
        capsys, "baseline", "mds", "--k", "3", "--d", "1", "--u", "0", "--encode", "1,0,0"
    )
    assert code == 0
    assert out.strip() == "1,0"


def test_commands_are_deterministic(capsys):
    first = run(capsys, "analyze", "--k", "20", "--d", "9", "--u", "2")
    second = run(capsys, "analyze", "--k", "20", "--d", "9", "--u", "2")
    assert first == second
