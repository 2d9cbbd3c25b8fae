import contextlib
import io
import json
import math

import pytest

from srq1.cli import parse_angle, parse_range, run_cli
from srq1.figures import FIGURE_SCANS
from srq1.io import ScanResult, format_number, serialize, write_csv, write_json


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run_cli(argv)
    return code, out.getvalue(), err.getvalue()


def csv_rows(text):
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


# ---------- parsing ----------

def test_parse_angle_symbolic():
    assert parse_angle("pi") == math.pi
    assert parse_angle("pi/2") == math.pi / 2
    assert parse_angle("0.75") == 0.75
    from srq1.errors import DomainError
    with pytest.raises(DomainError):
        parse_angle("one")


def test_parse_range():
    grid = parse_range("0:pi:181")
    assert len(grid) == 181
    assert grid[0] == 0.0 and grid[-1] == math.pi
    assert grid[90] == math.pi / 2  # snapped exactly
    assert parse_range("0.3") == [0.3]
    from srq1.errors import DomainError
    with pytest.raises(DomainError):
        parse_range("0:1:1")
    with pytest.raises(DomainError):
        parse_range("0:1:2:3")


# ---------- serialization ----------

def test_format_number():
    assert format_number(math.inf) == "inf"
    assert format_number(-math.inf) == "-inf"
    assert format_number(float("nan")) == "nan"
    assert format_number("ambiguous") == "ambiguous"
    assert format_number(0.123456789123) == "0.123456789"


def test_csv_empty_rows_is_metadata_only():
    result = ScanResult(metadata={"quantity": "none"}, columns=[], rows=[])
    assert write_csv(result) == "# quantity=none\n"


def test_csv_rows_and_header():
    result = ScanResult(metadata={"a": 1}, columns=["x", "y"],
                        rows=[[1.0, 2.0], [3.0, math.inf], [5.0, 6.0]])
    lines = write_csv(result).splitlines()
    assert lines[0] == "# a=1"
    assert lines[1] == "x,y"
    assert len(lines) == 5
    assert lines[3] == "3,inf"


def test_json_structure():
    result = ScanResult(metadata={"a": 1}, columns=["x"], rows=[[math.inf], ["ambiguous"]])
    doc = json.loads(write_json(result))
    assert doc["rows"] == [["inf"], ["ambiguous"]]
    assert doc["metadata"]["a"] == "1"


def test_serialize_unknown_format():
    with pytest.raises(ValueError):
        serialize(ScanResult(), "xml")


# ---------- subcommands ----------

def test_table1_csv():
    code, out, _ = run(["table1", "--format", "csv"])
    assert code == 0
    cols, rows = csv_rows(out)
    assert cols == ["beta", "f_b", "f_e", "k_minus", "k_plus"]
    assert len(rows) == 11
    assert float(rows[0][1]) == pytest.approx(1.0, abs=1e-8)


def test_table1_json_has_11_rows():
    code, out, _ = run(["table1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 11


def test_crossover_json():
    code, out, _ = run(["crossover"])
    assert code == 0
    doc = json.loads(out)
    beta0, gamma0 = doc["rows"][0]
    assert 0.81999 <= beta0 <= 0.82000
    assert 1.74709 <= gamma0 <= 1.74711


def test_scan_density_zero_in_orbit_plane():
    code, out, _ = run(["scan", "--quantity", "p", "--particle", "boson",
                        "--s", "3", "--beta", "0.9", "--theta", "0:pi:181"])
    assert code == 0
    _, rows = csv_rows(out)
    assert len(rows) == 181
    mid = rows[90]
    assert float(mid[0]) == pytest.approx(math.pi / 2, abs=1e-8)
    assert mid[1] == "0"


def test_scan_power_inf_sentinel():
    code, out, _ = run(["scan", "--quantity", "power", "--particle", "electron",
                        "--beta", "0:1:3"])
    assert code == 0
    _, rows = csv_rows(out)
    assert rows[-1][1] == "inf"


def test_scan_q_local_ambiguous_sentinel():
    code, out, _ = run(["scan", "--quantity", "q_local", "--particle", "electron",
                        "--s", "2", "--beta", "1", "--theta", "0:pi:5",
                        "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    cells = [row[1] for row in doc["rows"]]
    assert cells.count("ambiguous") == 1
    assert doc["rows"][2][1] == "ambiguous"  # the pi/2 grid point


def test_scan_p_beta_one_flags_metadata():
    code, out, _ = run(["scan", "--quantity", "p", "--particle", "electron",
                        "--s", "2", "--beta", "1", "--theta", "0:pi:5"])
    assert code == 0
    assert any(line.startswith("# ambiguous=") for line in out.splitlines())


def test_freq_deg_unit():
    code, out, _ = run(["freq", "--particle", "electron", "--beta", "0.5",
                        "--theta", "0:90:4", "--angle-unit", "deg"])
    assert code == 0
    _, rows = csv_rows(out)
    assert float(rows[-1][0]) == 90.0
    assert float(rows[0][1]) > 0


def test_maxima_subcommand():
    code, out, _ = run(["maxima", "--particle", "electron", "--s", "0",
                        "--beta", "0.6:0.9:2"])
    assert code == 0
    _, rows = csv_rows(out)
    assert rows[0][1] == "false" and rows[1][1] == "true"


def test_polarization_subcommand():
    code, out, _ = run(["polarization", "--particle", "boson", "--beta", "0"])
    assert code == 0
    cols, rows = csv_rows(out)
    assert cols == ["beta", "q_right", "q_left", "q_sigma", "q_pi"]
    assert float(rows[0][3]) == pytest.approx(0.75, abs=1e-8)


def test_limits_subcommand():
    code, out, _ = run(["limits", "--s", "0", "--theta", "0:pi:21"])
    assert code == 0
    _, rows = csv_rows(out)
    assert len(rows) == 21
    assert float(rows[10][1]) == pytest.approx(2.0 / (2 * math.e - 3), rel=1e-8)


# ---------- exit codes and determinism ----------

def test_exit_code_usage_error():
    code, _, err = run(["scan", "--no-such-flag"])
    assert code == 1
    assert err


def test_exit_code_domain_error():
    code, _, err = run(["scan", "--quantity", "p", "--particle", "boson",
                        "--beta", "1.5", "--theta", "0:pi:5"])
    assert code == 1
    assert "domain error" in err


def test_exit_code_convergence_error():
    code, _, err = run(["scan", "--quantity", "q_halfplane", "--particle",
                        "electron", "--s", "2", "--beta", "0.9",
                        "--abs-tol", "1e-300", "--rel-tol", "1e-300",
                        "--max-depth", "10"])
    assert code == 2
    assert "convergence error" in err


def test_determinism_byte_identical():
    argv = ["scan", "--quantity", "p", "--particle", "electron", "--s", "1",
            "--beta", "0.95", "--theta", "0:pi:91"]
    _, out1, _ = run(argv)
    _, out2, _ = run(argv)
    assert out1 == out2


def test_version_exits_zero():
    code, out, _ = run(["--version"])
    assert code == 0


# ---------- figure regeneration ----------

def test_every_figure_scan_runs():
    assert set(FIGURE_SCANS) == set(range(1, 17))
    for fig, scans in FIGURE_SCANS.items():
        for argv in scans:
            code, out, _ = run(argv)
            assert code == 0, (fig, argv)
            _, rows = csv_rows(out)
            assert rows, (fig, argv)
            for row in rows:
                for cell in row[1:]:
                    # every value is finite or an explicit sentinel
                    if cell in ("inf", "ambiguous", "none", "true", "false"):
                        continue
                    assert math.isfinite(float(cell)), (fig, argv, row)
