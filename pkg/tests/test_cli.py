import io
import json
import subprocess
import sys

import pytest

from spectral_lab.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_construct_rk_and_blowup():
    code, out, _ = run(["construct", "rk", "--k", "1", "--s", "2", "--t", "3"])
    assert code == 0 and out.strip() == "EMq_"
    code, out, _ = run(["construct", "blowup", "--base", "p5k1", "--sizes", "1,2,1,2,1,0"])
    assert code == 0 and len(out.strip().splitlines()) == 1


def test_construct_errors_exit_two():
    code, _, err = run(["construct", "cycle", "--n", "2"])
    assert code == 2 and "n >= 3" in err
    code, _, err = run(["construct", "rk", "--k", "1"])
    assert code == 2 and "--s" in err
    code, _, _ = run(["construct", "dodecahedron"])
    assert code == 2


def test_spectrum_rows():
    code, out, _ = run(["spectrum"], "Dhc\n@\n")
    assert code == 0
    assert out.splitlines() == [
        "2.000000000, 0.618033989, 0.618033989, -1.618033989, -1.618033989",
        "0",
    ]


def test_spectrum_bad_line_and_continue(tmp_path):
    code, out, err = run(["spectrum"], "Dhc\nD?x\n@\n")
    assert code == 2 and "line 2" in err and len(out.splitlines()) == 1
    csv_path = tmp_path / "s.csv"
    code, out, err = run(["spectrum", "--continue-on-error", "--emit-csv", str(csv_path)], "Dhc\nD?x\n@\n")
    assert code == 2 and len(out.splitlines()) == 2
    assert csv_path.read_text().splitlines()[0] == "graph6,index,eigenvalue"


def test_certify_outputs():
    code, out, _ = run(["certify", "--claim", "thm1.1", "--k", "1"], "D]o\n")
    assert code == 0 and json.loads(out)["verdict"] == "holds_equality"
    code, out, _ = run(["certify", "--claim", "all-classical"], "C~\n")
    claims = [json.loads(line)["claim_id"] for line in out.splitlines()]
    assert code == 0 and "wilf" in claims and "hong" in claims
    code, out, _ = run(["certify", "--claim", "thm1.4", "--k", "2"], "D]o\n")
    assert code == 0 and json.loads(out)["verdict"] == "not_applicable"
    code, out, _ = run(["certify", "--claim", "eq10", "--k", "1"], "Dhc\n")
    assert json.loads(out)["claim_id"] == "thm1.04"


def test_certify_is_byte_identical():
    a = run(["certify", "--claim", "all-classical"], "Dhc\nEMq_\n")[1]
    b = run(["certify", "--claim", "all-classical"], "Dhc\nEMq_\n")[1]
    assert a == b


def test_tolerance_flag_is_scoped_to_the_call():
    from spectral_lab import certify

    run(["certify", "--claim", "thm1.1", "--tolerance", "1e-3"], "D]o\n")
    assert certify.EQ_RTOL == 1e-8
    assert run(["certify", "--claim", "thm1.1", "--tolerance", "-1"], "D]o\n")[0] == 2


def test_search_extremal_names_graph():
    code, out, _ = run(["search", "extremal", "--n", "7", "--k", "1"])
    report = json.loads(out)
    assert code == 0
    assert report["checks"]["expected_name"] == "R_1(K_3,3)"
    assert report["extremal_graphs"] == [report["checks"]["expected_graph"]]


def test_search_scan_writes_sidecars(tmp_path):
    out_path = tmp_path / "runs" / "scan.json"
    code, _, _ = run(["search", "scan", "--n", "7", "--k", "1", "--claim", "thm1.1", "--out", str(out_path)])
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["counterexamples"] == []
    eq = (tmp_path / "runs" / "scan.equality.g6").read_text().split()
    assert eq == report["equality_graphs"]
    assert (tmp_path / "runs" / "scan.counterexamples.g6").read_text() == ""


def test_search_usage_errors():
    assert run(["search", "scan", "--n", "5"])[0] == 2
    assert run(["search", "extremal", "--n", "5", "--k", "1"])[0] == 2
    assert run(["search", "census"])[0] == 2
    assert run(["search", "census", "--n", "5", "--workers", "0"])[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spectral_lab.cli", "construct", "cycle", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "Dhc"
