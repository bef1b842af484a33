import json
import subprocess
import sys

from degseq.cli import main, ratio_string
from reference_data import R_E_RATIO


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    return code, json.loads(out)


class TestTest:
    def test_graphical_exit_zero(self, capsys):
        code, record = run_json(capsys, "test", "--sequence", "3,3,2,2", "--algorithm", "egl")
        assert code == 0
        assert record["schema_version"] == "1"
        assert record["command"] == "test"
        assert record["payload"]["graphical"] is True

    def test_composite_rejection(self, capsys):
        code, record = run_json(
            capsys, "test", "--sequence", "2,2,0", "--algorithm", "composite"
        )
        assert code == 1
        assert record["payload"]["rejected_by"] == "binomial"

    def test_composite_pass_is_undecided(self, capsys):
        code, record = run_json(capsys, "test", "--sequence", "2,1,1", "--algorithm", "composite")
        assert code == 0
        assert record["payload"]["graphical"] is None

    def test_unsorted_input_rejected(self, capsys):
        code, out, err = run_cli(capsys, "test", "--sequence", "1,2,3")
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_sort_flag(self, capsys):
        code, record = run_json(capsys, "test", "--sequence", "1,2,3,2", "--sort")
        assert code == 0
        assert record["payload"]["sequence"] == [3, 2, 2, 1]

    def test_malformed_input(self, capsys):
        code, _, err = run_cli(capsys, "test", "--sequence", "2,x,1")
        assert code == 2 and "error" in err


class TestRealize:
    def test_triangle(self, capsys):
        code, record = run_json(capsys, "realize", "--sequence", "2,2,2")
        assert code == 0
        assert record["payload"]["edges"] == ["1-2", "1-3", "2-3"]

    def test_non_graphical_null(self, capsys):
        code, record = run_json(capsys, "realize", "--sequence", "2,2,1")
        assert code == 1
        assert record["payload"]["edges"] is None

    def test_single_zero(self, capsys):
        code, record = run_json(capsys, "realize", "--sequence", "0")
        assert code == 0
        assert record["payload"]["edges"] == []


class TestTable:
    def test_closed_form_columns(self, capsys):
        code, record = run_json(capsys, "table", "--max-n", "10", "--columns", "R,E")
        assert code == 0
        rows = record["payload"]["rows"]
        assert rows[9] == {"n": 10, "R": "92378", "E": "46252"}

    def test_ratio_formatting(self, capsys):
        code, record = run_json(capsys, "table", "--max-n", "6", "--columns", "ratios")
        assert code == 0
        got = [r["E_over_R"] for r in record["payload"]["rows"]]
        assert got == [R_E_RATIO[n][2] for n in range(1, 7)]

    def test_enumerative_columns(self, capsys):
        code, record = run_json(
            capsys, "table", "--max-n", "7", "--columns", "Bz,G", "--threads", "1"
        )
        assert code == 0
        row7 = record["payload"]["rows"][6]
        assert row7["Bz"] == "349" and row7["G"] == "342"

    def test_budget_guard(self, capsys):
        code, _, err = run_cli(capsys, "table", "--max-n", "16", "--columns", "G")
        assert code == 2
        assert "budget" in err

    def test_rejects_empty_range(self, capsys):
        code, _, err = run_cli(capsys, "table", "--max-n", "0", "--columns", "R")
        assert code == 2 and "error" in err

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--max-n", "3", "--columns", "R,E", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["n,R,E", "1,1,1", "2,3,2", "3,10,6"]

    def test_byte_stable(self, capsys):
        _, first, _ = run_cli(capsys, "table", "--max-n", "8", "--columns", "R,E,ratios")
        _, second, _ = run_cli(capsys, "table", "--max-n", "8", "--columns", "R,E,ratios")
        assert first == second


class TestHistogram:
    def test_egj_rounds(self, capsys):
        code, record = run_json(capsys, "histogram", "--n", "3", "--metric", "egj-rounds")
        assert code == 0
        assert record["payload"]["values"] == ["2"]

    def test_b1(self, capsys):
        code, record = run_json(capsys, "histogram", "--n", "5", "--metric", "b1")
        assert code == 0
        assert record["payload"]["values"] == ["1", "2", "7", "10", "11"]


class TestCount:
    def test_count_with_checkpoint(self, capsys, tmp_path):
        path = str(tmp_path / "cp.log")
        code, record = run_json(
            capsys, "count", "--n", "6", "--threads", "2", "--checkpoint", path
        )
        assert code == 0
        payload = record["payload"]
        assert payload["zerofree_graphical"] == "71"
        assert payload["graphical_total"] == "102"
        lines = open(path).read().splitlines()
        assert lines and all(line.split(",")[1] == "zerofree_even" for line in lines)


class TestFilterCensusCommand:
    def test_row(self, capsys):
        code, record = run_json(capsys, "filter-census", "--n", "6")
        assert code == 0
        payload = record["payload"]
        assert payload["binomial_new"] == "72"
        assert payload["composite_full_new"] == "71"


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "degseq.cli", "test", "--sequence", "2,1,1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["payload"]["graphical"] is True


def test_ratio_string_rounding():
    assert ratio_string(2, 3) == "0.6666666666667"
    assert ratio_string(1, 1) == "1.0000000000000"
    assert ratio_string(19, 35) == "0.5428571428571"
