"""Command-line interface: outputs, formats, and the exit-status contract."""
import json
import subprocess
import sys
from pathlib import Path

import pytest

from smoothwords import cli, words

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_examples(self, capsys):
        assert run_cli(capsys, "count", "sw", "--n", "11", "--k", "3")[:2] == \
            (0, "19601\n")
        assert run_cli(capsys, "count", "sn", "--n", "0", "--k", "5")[:2] == \
            (0, "1\n")
        assert run_cli(capsys, "count", "scw", "--n", "8", "--k", "6",
                       "--method", "spectral")[:2] == (0, "4468\n")

    def test_all_methods_agree(self, capsys):
        for method in ("auto", "bruteforce", "matrix", "gf", "spectral"):
            code, out, _ = run_cli(capsys, "count", "scw", "--n", "7", "--k", "4",
                                   "--method", method)
            assert (code, out) == (0, "872\n")

    def test_large_count_is_plain_decimal(self, capsys):
        code, out, _ = run_cli(capsys, "count", "sw", "--n", "200", "--k", "3")
        assert code == 0
        assert out.strip().isdigit()
        assert len(out.strip()) > 70  # far beyond 64-bit range, no sci notation

    def test_bruteforce_guard_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "count", "sw", "--n", "25", "--k", "3",
                               "--method", "bruteforce")
        assert code == 2
        assert "brute force" in err

    def test_gf_method_rejected_for_necklaces(self, capsys):
        assert run_cli(capsys, "count", "sn", "--n", "3", "--k", "3",
                       "--method", "gf")[0] == 2

    def test_spectral_outside_window_exits_3(self, capsys):
        assert run_cli(capsys, "count", "sw", "--n", "26", "--k", "3",
                       "--method", "spectral")[0] == 3
        assert run_cli(capsys, "count", "sw", "--n", "10", "--k", "11",
                       "--method", "spectral")[0] == 3
        assert run_cli(capsys, "count", "scw", "--n", "0", "--k", "3",
                       "--method", "spectral")[0] == 3

    def test_invalid_arguments(self, capsys):
        assert run_cli(capsys, "count", "sw", "--n", "-1", "--k", "3")[0] == 2
        assert run_cli(capsys, "count", "sw", "--n", "3", "--k", "0")[0] == 2
        assert run_cli(capsys, "count", "nope", "--n", "3", "--k", "3")[0] == 2
        assert run_cli(capsys, "count", "sw", "--k", "3")[0] == 2


class TestTable:
    def test_golden_markdown_table_words(self, capsys):
        code, out, _ = run_cli(capsys, "table", "both", "3", "7", "11", "md")
        assert code == 0
        assert out == (GOLDEN / "table1.md").read_text()

    def test_golden_markdown_table_necklaces(self, capsys):
        code, out, _ = run_cli(capsys, "table", "sn", "1", "7", "11", "md")
        assert code == 0
        assert out == (GOLDEN / "table2.md").read_text()

    def test_defaults_match_positional_forms(self, capsys):
        _, via_positional, _ = run_cli(capsys, "table", "both", "3", "7", "11", "md")
        _, via_defaults, _ = run_cli(capsys, "table", "both")
        assert via_defaults == via_positional
        _, sn_positional, _ = run_cli(capsys, "table", "sn", "1", "7", "11", "md")
        _, sn_defaults, _ = run_cli(capsys, "table", "sn")
        assert sn_defaults == sn_positional

    def test_flag_form(self, capsys):
        _, positional, _ = run_cli(capsys, "table", "sw", "2", "4", "6", "csv")
        _, flags, _ = run_cli(capsys, "table", "sw", "--k-min", "2", "--k-max",
                              "4", "--n-max", "6", "--format", "csv")
        assert positional == flags

    def test_conflicting_positional_and_flag(self, capsys):
        assert run_cli(capsys, "table", "sw", "3", "--k-min", "2")[0] == 2

    def test_determinism(self, capsys):
        first = run_cli(capsys, "table", "both", "3", "7", "11", "md")
        second = run_cli(capsys, "table", "both", "3", "7", "11", "md")
        assert first == second

    def test_csv_first_data_row(self, capsys):
        _, out, _ = run_cli(capsys, "table", "sw", "3", "7", "11", "csv")
        lines = out.splitlines()
        assert lines[0] == "k,0,1,2,3,4,5,6,7,8,9,10,11"
        assert lines[1] == "3,1,3,7,17,41,99,239,577,1393,3363,8119,19601"

    def test_specific_cell(self, capsys):
        _, out, _ = run_cli(capsys, "table", "both", "3", "7", "11", "md")
        row = next(line for line in out.splitlines()
                   if line.startswith("| sw k=7 "))
        assert row.split("|")[-2].strip() == "221805"  # n = 11 column

    def test_necklace_row_k1_all_ones(self, capsys):
        _, out, _ = run_cli(capsys, "table", "sn", "1", "1", "11", "csv")
        assert out.splitlines()[1] == "1," + ",".join(["1"] * 12)

    def test_jsonl_cells(self, capsys):
        _, out, _ = run_cli(capsys, "table", "both", "3", "3", "2", "jsonl")
        records = [json.loads(line) for line in out.splitlines()]
        assert {"family": "sw", "n": 2, "k": 3,
                "method": "matrix", "count": "7"} in records
        assert {"family": "scw", "n": 2, "k": 3,
                "method": "matrix", "count": "7"} in records
        assert all(isinstance(r["count"], str) for r in records)
        assert len(records) == 6

    def test_bad_ranges(self, capsys):
        assert run_cli(capsys, "table", "both", "9", "3", "11", "md")[0] == 2
        assert run_cli(capsys, "table", "both", "0", "3", "11", "md")[0] == 2
        assert run_cli(capsys, "table", "both", "3", "7", "-1", "md")[0] == 2


class TestGf:
    def test_sw3_series_line(self, capsys):
        _, out, _ = run_cli(capsys, "gf", "sw", "--k", "3")
        num_den, series = out.splitlines()
        assert num_den.startswith("(") and ")/(" in num_den
        assert series == "1,3,7,17,41,99,239,577,1393,3363,8119,19601"

    def test_scw1_all_ones(self, capsys):
        _, out, _ = run_cli(capsys, "gf", "scw", "--k", "1")
        assert out.splitlines()[1] == ",".join(["1"] * 12)

    def test_sw4_matches_doubled_odd_fibonacci(self, capsys):
        _, out, _ = run_cli(capsys, "gf", "sw", "--k", "4")
        got = [int(v) for v in out.splitlines()[1].split(",")]
        fib = [0, 1]
        while len(fib) < 25:
            fib.append(fib[-1] + fib[-2])
        assert got[3] == 2 * fib[7] == 26
        assert got[1:] == [2 * fib[2 * n + 1] for n in range(1, 12)]

    def test_rejects_necklace_family_and_bad_k(self, capsys):
        assert run_cli(capsys, "gf", "sn", "--k", "3")[0] == 2
        assert run_cli(capsys, "gf", "sw", "--k", "0")[0] == 2


class TestCheck:
    def test_sweep_passes(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--n-max", "9", "--k-max", "5")
        assert code == 0
        assert "0 mismatches" in out

    def test_trivial_sweep(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--n-max", "0", "--k-max", "1")
        assert code == 0
        assert "0 mismatches" in out

    def test_injected_fault_detected(self, capsys, monkeypatch):
        # An off-by-one wrap condition would inflate the cyclic brute force.
        real = words.count_cyclic_bf
        monkeypatch.setattr(words, "count_cyclic_bf",
                            lambda n, k: real(n, k) + (1 if n >= 2 else 0))
        code, out, _ = run_cli(capsys, "check", "--n-max", "5", "--k-max", "3")
        assert code == 1
        assert "MISMATCH family=scw" in out

    def test_bad_bounds(self, capsys):
        assert run_cli(capsys, "check", "--n-max", "-1", "--k-max", "3")[0] == 2
        assert run_cli(capsys, "check", "--n-max", "3", "--k-max", "0")[0] == 2


class TestAsymptotics:
    def test_proportion_limit(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotics", "proportion", "--k", "3")
        assert code == 0
        assert out.startswith("limit 0.8284271")

    def test_proportion_with_length(self, capsys):
        _, out, _ = run_cli(capsys, "asymptotics", "proportion", "--k", "3",
                            "--n", "11")
        lines = dict(line.split(" ", 1) for line in out.splitlines())
        assert float(lines["proportion"]) == pytest.approx(16239 / 19601)
        assert float(lines["deviation"]) < 1e-4

    def test_scw_estimate(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotics", "scw", "--k", "3",
                               "--n", "11")
        assert code == 0
        lines = dict(line.split(" ", 1) for line in out.splitlines())
        assert lines["exact"] == "16239"
        assert abs(float(lines["estimate"]) - 16239) < 1.0
        assert abs(float(lines["ratio"]) - 1) < 1e-3

    def test_proportion_large_k(self, capsys):
        import math
        _, out, _ = run_cli(capsys, "asymptotics", "proportion", "--k", "1000")
        limit = float(out.splitlines()[0].split()[1])
        assert limit == pytest.approx(3 * math.pi ** 2 / 8000, rel=0.01)

    def test_length_required_for_word_families(self, capsys):
        assert run_cli(capsys, "asymptotics", "sw", "--k", "3")[0] == 2


class TestBinary:
    def test_installed_entry_point_contract(self):
        env_cmd = [sys.executable, "-m", "smoothwords"]
        out = subprocess.run(env_cmd + ["count", "sw", "--n", "11", "--k", "3"],
                             capture_output=True, text=True)
        assert (out.returncode, out.stdout) == (0, "19601\n")
        bad = subprocess.run(env_cmd + ["count", "sw", "--n", "30", "--k", "3",
                                        "--method", "spectral"],
                             capture_output=True, text=True)
        assert bad.returncode == 3
        usage = subprocess.run(env_cmd + ["gf", "sn", "--k", "2"],
                               capture_output=True, text=True)
        assert usage.returncode == 2
