import json
import subprocess
import sys

import pytest

from triavg.cli import main, parse_bfile
from triavg.recurrences import sequence_prefix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_plain(capsys):
    code, out, err = run_cli(capsys, "gen", "a", "--count", "6")
    assert code == 0
    assert out == "0 1 5 20 76 285\n"
    assert err == ""


def test_gen_plain_b(capsys):
    code, out, _ = run_cli(capsys, "gen", "b", "--count", "6")
    assert code == 0
    assert out == "-1 1 8 34 131 493\n"


def test_gen_bfile(capsys):
    code, out, _ = run_cli(capsys, "gen", "b", "--count", "6", "--format", "bfile")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("#")
    assert "offset 0" in lines[0]
    assert lines[1] == "0 -1"
    assert lines[-1] == "5 493"


def test_bfile_round_trip(capsys):
    _, out, _ = run_cli(capsys, "gen", "u", "--count", "20", "--format", "bfile")
    pairs = parse_bfile(out)
    assert [i for i, _ in pairs] == list(range(20))
    assert [v for _, v in pairs] == sequence_prefix("u", 20)


def test_gen_csv(capsys):
    code, out, _ = run_cli(capsys, "gen", "z", "--count", "4", "--format", "csv")
    assert code == 0
    assert out == "0,1\n1,1\n2,2\n3,5\n"


def test_gen_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "a", "--count", "7", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0] == {"n": 0, "value": "0"}
    assert data[6] == {"n": 6, "value": "1065"}
    assert all(isinstance(item["value"], str) for item in data)


def test_gen_custom_matches_named(capsys):
    code, out, _ = run_cli(
        capsys, "gen", "custom", "--k", "1", "--w0", "0", "--w1", "1", "--count", "6"
    )
    assert code == 0
    assert out == "0 1 5 20 76 285\n"


def test_gen_custom_requires_all_parameters(capsys):
    code, _, err = run_cli(capsys, "gen", "custom", "--k", "1", "--count", "3")
    assert code == 2
    assert "custom" in err


def test_gen_rejects_spec_flags_on_named_sequences(capsys):
    code, _, err = run_cli(capsys, "gen", "a", "--k", "1", "--count", "3")
    assert code == 2
    assert "custom" in err


def test_gen_unknown_sequence(capsys):
    code, _, err = run_cli(capsys, "gen", "nope", "--count", "3")
    assert code == 2
    assert "unknown sequence" in err


def test_gen_rejects_zero_count(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["gen", "a", "--count", "0"])
    assert excinfo.value.code == 2


def test_gen_case_insensitive_letters(capsys):
    code, out, _ = run_cli(capsys, "gen", "f", "--count", "6")
    assert code == 0
    assert out == "0 1 4 15 56 209\n"


def test_gen_out_file(tmp_path, capsys):
    target = tmp_path / "a.bfile"
    code, out, _ = run_cli(
        capsys, "gen", "a", "--count", "4", "--format", "bfile", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert parse_bfile(target.read_text()) == [(0, 0), (1, 1), (2, 5), (3, 20)]


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "16")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    assert all(line.endswith("PASS") for line in lines)


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "congruences", "--max-n", "100")
    assert code == 0
    assert out == "congruences [0..100] PASS\n"


def test_verify_bisection_minimal_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "bisection", "--max-n", "1")
    assert code == 0
    assert out == "bisection [0..1] PASS\n"


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nope", "--max-n", "4")
    assert code == 2
    assert "unknown suite" in err


def test_solve_table(capsys):
    code, out, _ = run_cli(capsys, "solve", "--max-s", "10")
    assert code == 0
    assert out.splitlines() == [
        "# s r average match",
        "1 1 1 (b_1,a_1)",
        "8 5 15 (b_2,a_2)",
    ]


def test_solve_single_row(capsys):
    code, out, _ = run_cli(capsys, "solve", "--max-s", "1")
    assert code == 0
    assert out.splitlines()[1:] == ["1 1 1 (b_1,a_1)"]


def test_solve_five_rows_to_500(capsys):
    code, out, _ = run_cli(capsys, "solve", "--max-s", "500")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 5
    assert rows[-1] == "493 285 40755 (b_5,a_5)"


def test_witness_output(capsys):
    code, out, _ = run_cli(capsys, "witness", "2")
    assert code == 0
    assert out == "n=2 b=8 sum=120 avg=15 a=5 VERIFIED\n"


def test_witness_trivial_case(capsys):
    code, out, _ = run_cli(capsys, "witness", "1")
    assert code == 0
    assert out == "n=1 b=1 sum=1 avg=1 a=1 VERIFIED\n"


def test_witness_zero_is_usage_error(capsys):
    code, out, err = run_cli(capsys, "witness", "0")
    assert code == 2
    assert out == ""
    assert "b_0" in err


def test_gen_warns_on_huge_prefix(capsys):
    # The all-zero custom spec keeps a million-term request cheap.
    code, out, err = run_cli(
        capsys,
        "gen", "custom", "--k", "0", "--w0", "0", "--w1", "0",
        "--count", "1000001",
    )
    assert code == 0
    assert "warning" in err
    assert out.count("0") == 1000001


def test_verify_reports_failures_with_exit_one(capsys, monkeypatch):
    from triavg.cli import SUITES
    from triavg.identities import IdentityReport

    def broken_checker(max_n):
        return IdentityReport("lucas", (0, max_n), [(0, 4, 5), (1, 56, 57)])

    monkeypatch.setitem(SUITES, "lucas", broken_checker)
    code, out, _ = run_cli(capsys, "verify", "--suite", "lucas", "--max-n", "4")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "lucas [0..4] FAIL (2 failures)"
    assert lines[1] == "  n=0 lhs=4 rhs=5"
    assert lines[2] == "  n=1 lhs=56 rhs=57"


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "gen", "v", "--count", "30", "--format", "json")
    _, second, _ = run_cli(capsys, "gen", "v", "--count", "30", "--format", "json")
    assert first == second
    _, third, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "8")
    _, fourth, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "8")
    assert third == fourth


def test_module_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "triavg", "gen", "a", "--count", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "0 1 5\n"


def test_subprocess_exit_codes():
    ok = subprocess.run(
        [sys.executable, "-m", "triavg", "verify", "--suite", "lucas", "--max-n", "4"],
        capture_output=True,
    )
    assert ok.returncode == 0
    usage = subprocess.run(
        [sys.executable, "-m", "triavg", "witness", "0"],
        capture_output=True,
    )
    assert usage.returncode == 2
