"""CLI contract: exit codes, diagnostics, determinism, emitted files."""

import json
import subprocess
import sys

import pytest

from relage.cli import main

MINMAX_FGM = {
    "structure": {"type": "path_sets", "n": 3, "path_sets": [[1, 2], [1, 3]]},
    "copula": {"type": "fgm", "theta": 0.3},
    "marginal": {"type": "weibull", "rate": 1, "shape": 2},
}
SERIES_FGM = {
    "structure": {"type": "k_out_of_n", "k": 3, "n": 3},
    "copula": {"type": "fgm", "theta": 0.3},
    "marginal": {"type": "weibull", "rate": 1, "shape": 2},
}


@pytest.fixture()
def system_files(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(MINMAX_FGM))
    b.write_text(json.dumps(SERIES_FGM))
    return a, b


def run_cli(args, capsys):
    status = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return status, out, err


def test_check_order_exact(system_files, capsys):
    a, b = system_files
    status, out, err = run_cli(
        ["check-order", "--system-a", a, "--system-b", b, "--order", "afc", "--exact"],
        capsys,
    )
    assert status == 0
    rep = json.loads(out)
    assert rep["verdict"]["conclusion"] == "forward"
    assert rep["order"] == "afc"


def test_check_order_with_marginals(system_files, capsys):
    a, b = system_files
    status, out, _ = run_cli(
        ["check-order", "--system-a", a, "--system-b", b, "--order", "afc"], capsys
    )
    assert status == 0
    rep = json.loads(out)
    assert rep["verdict"]["holds_forward"] is True


def test_exit_zero_even_when_verdict_is_negative(system_files, tmp_path, capsys):
    # theta in the non-monotone regime: analysis completes, exit stays 0
    spec_a = dict(MINMAX_FGM, copula={"type": "fgm", "theta": 0.9})
    spec_b = dict(SERIES_FGM, copula={"type": "fgm", "theta": 0.9})
    a = tmp_path / "na.json"
    b = tmp_path / "nb.json"
    a.write_text(json.dumps(spec_a))
    b.write_text(json.dumps(spec_b))
    status, out, _ = run_cli(
        ["check-order", "--system-a", a, "--system-b", b, "--order", "afc", "--exact"],
        capsys,
    )
    assert status == 0
    assert json.loads(out)["verdict"]["conclusion"] == "neither"


def test_malformed_copula_theta_exit_one(tmp_path, capsys):
    bad = dict(MINMAX_FGM, copula={"type": "fgm", "theta": 2})
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(bad))
    status, out, err = run_cli(
        ["check-order", "--system-a", f, "--system-b", f, "--order", "afc", "--exact"],
        capsys,
    )
    assert status == 1
    assert "copula.theta" in err


def test_missing_file_exit_one(capsys):
    status, _, err = run_cli(
        ["check-order", "--system-a", "/nonexistent.json",
         "--system-b", "/nonexistent.json", "--order", "afc"],
        capsys,
    )
    assert status == 1
    assert "error" in err


def test_unknown_case_exit_two(capsys):
    status, _, err = run_cli(["reproduce", "unknown-id"], capsys)
    assert status == 2


def test_reproduce_case_passes(capsys):
    status, out, _ = run_cli(["--grid", "501", "reproduce", "ex-1.1"], capsys)
    assert status == 0
    rep = json.loads(out)
    assert rep["report"]["failed"] == 0


def test_grid_config_echoed(system_files, capsys):
    a, b = system_files
    status, out, _ = run_cli(
        ["--grid", "101", "check-order", "--system-a", a, "--system-b", b,
         "--order", "afc", "--exact"],
        capsys,
    )
    assert status == 0
    rep = json.loads(out)
    assert rep["config"]["grid"] == 101
    assert "101" in rep["verdict"]["conditions"][0]["verdict"]["grid"]


def test_redundancy_command(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({
        "structure": {"type": "k_out_of_n", "k": 3, "n": 3},
        "copula": {"type": "independence"},
    }))
    status, out, _ = run_cli(
        ["redundancy", "--system", f, "--m", "1", "--mode", "c", "--method", "iff"],
        capsys,
    )
    assert status == 0
    rep = json.loads(out)
    assert rep["verdict"]["conclusion"] == "reverse"


def test_residual_command(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({
        "structure": {"type": "k_out_of_n", "k": 2, "n": 3},
        "copula": {"type": "independence"},
    }))
    status, out, _ = run_cli(
        ["residual", "--system", f, "--mode", "c", "--method", "iff", "--t", "0.7"],
        capsys,
    )
    assert status == 0
    rep = json.loads(out)
    assert rep["verdict"]["conclusion"] == "forward"
    assert rep["verdict"]["metadata"]["cross_validated_t"] == [0.7]


def test_distortion_csv(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps(MINMAX_FGM))
    csv = tmp_path / "h.csv"
    status, out, _ = run_cli(
        ["--grid", "11", "distortion", "--system", f, "--emit-csv", csv], capsys
    )
    assert status == 0
    lines = csv.read_text().strip().splitlines()
    assert lines[0] == "p,h,h_prime,H,R"
    assert len(lines) == 12
    row = [float(v) for v in lines[5].split(",")]
    assert 0 < row[1] < 1 and row[2] > 0 and row[3] > 0 and row[4] > 0


def test_reports_byte_identical(system_files, tmp_path, capsys):
    a, b = system_files
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    for out in (out1, out2):
        status, _, _ = run_cli(
            ["--out", out, "--seed", "5", "check-order", "--system-a", a,
             "--system-b", b, "--order", "afb", "--exact"],
            capsys,
        )
        assert status == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_module_entrypoint_subprocess(system_files, tmp_path):
    a, b = system_files
    res = subprocess.run(
        [sys.executable, "-m", "relage.cli", "check-order", "--system-a", str(a),
         "--system-b", str(b), "--order", "rhr"],
        capture_output=True, text=True, timeout=120,
    )
    assert res.returncode == 0, res.stderr
    rep = json.loads(res.stdout)
    assert "verdict" in rep
    assert "completed in" in res.stderr


def test_no_command_exit_two(capsys):
    assert main([]) == 2
