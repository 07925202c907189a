"""CLI behavior: golden stability, exit codes, determinism, figure output."""

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

from rankmet.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_matches_golden_gabidulin(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--construct", "gabidulin:2^1:3:3:2")
    assert code == 0
    assert out == (GOLDEN / "analyze_gabidulin.json").read_text()


def test_analyze_matches_golden_poly(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--construct",
                           "poly:2^1:3:lambda=auto:t=1,2")
    assert code == 0
    assert out == (GOLDEN / "analyze_poly.json").read_text()


def test_analyze_json_file_and_repeatability(tmp_path, capsys):
    target = tmp_path / "a.json"
    code1, out1, _ = run_cli(capsys, "analyze", "--construct", "redei:2^1:3",
                             "--json", str(target))
    code2, out2, _ = run_cli(capsys, "analyze", "--construct", "redei:2^1:3")
    assert code1 == code2 == 0
    assert out1 == out2
    assert target.read_text() == out1
    record = json.loads(out1)
    assert record["M"] == "406"
    assert record["params"] == {"q": 2, "m": 3, "n": 5, "k": 3, "d": 2}


def test_analyze_matrix_file(tmp_path, capsys):
    mat = tmp_path / "g.mat"
    mat.write_text("1,0,0;\n0,1,z\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "analyze", "--matrix", str(mat),
                           "--field", "2^1:3")
    assert code == 0
    assert json.loads(out)["M"] == "28"


def test_analyze_exit_codes(capsys):
    code, _, err = run_cli(capsys, "analyze", "--construct", "poly:2^1:3:t=9,9")
    assert code == 1 and "error" in err
    code, _, err = run_cli(capsys, "analyze", "--construct", "nonsense")
    assert code == 1
    # 2^22 codewords exceed the enumeration budget
    code, _, err = run_cli(capsys, "analyze", "--construct", "gabidulin:2^1:11:11:2")
    assert code == 2 and "budget" in err


def test_scan_exhaustive_rows(capsys):
    code, out, _ = run_cli(capsys, "scan", "--field", "2^1:2", "--k", "2",
                           "--n", "2", "--exhaustive")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 35
    degenerate = [r for r in rows if r["verdict"] == "degenerate"]
    assert len(degenerate) == 5
    for row in rows:
        if row["M"]:
            assert int(row["lower"]) <= int(row["M"]) <= int(row["upper"])


def test_scan_seeded_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "scan", "--field", "2^1:3", "--k", "2",
                           "--n", "2:3", "--samples", "2", "--seed", "7")
    assert code == 0
    assert out == (GOLDEN / "scan_seed7.csv").read_text()


def test_scan_zero_samples_header_only(capsys):
    code, out, _ = run_cli(capsys, "scan", "--field", "2^1:2", "--k", "2",
                           "--n", "2", "--samples", "0")
    assert code == 0
    assert out == "q,h,m,n,k,d,e,M,bound,lower,upper,verdict\n"


def test_scan_csv_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli(capsys, "scan", "--field", "2^1:2", "--k", "2",
                           "--n", "2", "--samples", "3", "--seed", "1",
                           "--csv", str(target))
    assert code == 0
    assert target.read_text() == out


def test_plots_written(tmp_path, capsys):
    fig1 = tmp_path / "dist.png"
    code, _, _ = run_cli(capsys, "analyze", "--construct", "gabidulin:2^1:3:3:2",
                         "--plot", str(fig1))
    assert code == 0 and fig1.stat().st_size > 0
    fig2 = tmp_path / "scan.png"
    code, _, _ = run_cli(capsys, "scan", "--field", "2^1:2", "--k", "2",
                         "--n", "2", "--exhaustive", "--plot", str(fig2))
    assert code == 0 and fig2.stat().st_size > 0


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "census")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == 1


def test_usage_error_exits_one():
    proc = subprocess.run([sys.executable, "-m", "rankmet.cli", "scan"],
                          capture_output=True, text=True)
    assert proc.returncode == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rankmet.cli", "verify", "census"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "checks passed" in proc.stdout
