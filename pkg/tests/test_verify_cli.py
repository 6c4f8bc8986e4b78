import json
import subprocess
import sys

import pytest

from dirac_tensor.cli import main
from dirac_tensor.verify import SUITES, run_verification

FIELD = {"family": "constant-F", "E": ["1/4", 0, 0], "H": [0, 0, 0], "gauge": "temporal"}
GRID = {"Nx": 64, "L": 32.0, "dt": 0.25, "T": 3.0, "stencil": "central-4", "init": {"kind": "packet", "seed": 1}}


@pytest.mark.parametrize("suite", ["algebra", "duality", "basis", "lorentz"])
def test_suites_pass_and_are_sorted(suite):
    rep = run_verification(suite, seed=3)
    assert rep.ok, [c for c in rep.checks if not c.passed]
    ids = [c.id for c in rep.checks]
    assert ids == sorted(ids)
    assert all(c.paper_anchor for c in rep.checks)


def test_required_checks_are_present():
    alg = {c.id: c for c in run_verification("algebra").checks}
    assert "sigma^{mu nu}" in alg["charge.sigma"].paper_anchor
    basis = run_verification("basis")
    assert any("u.w=-8" in c.paper_anchor and "builtin" in c.paper_anchor for c in basis.checks)


def test_exact_reports_are_deterministic():
    a = run_verification("basis", seed=9).dumps()
    b = run_verification("basis", seed=9).dumps()
    assert a == b


def test_report_json_shape():
    data = json.loads(run_verification("duality").dumps())
    assert data["suite"] == "duality"
    assert data["summary"]["failed"] == 0
    assert set(data["checks"][0]) >= {"id", "paper_anchor", "status", "max_error", "tolerance"}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_verification("nope")


# CLI ----------------------------------------------------------------------------


@pytest.fixture
def files(tmp_path):
    (tmp_path / "field.json").write_text(json.dumps(FIELD))
    (tmp_path / "grid.json").write_text(json.dumps(GRID))
    return tmp_path


def test_cli_verify_json(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["verify", "--suite", "duality", "--seed", "1", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["status"] == "pass"
    assert "duality:" in capsys.readouterr().out


def test_cli_solve_check_reconstruct(files, capsys):
    sol = files / "sol"
    assert main(["solve", "--config", str(files / "field.json"), "--grid", str(files / "grid.json"),
                 "--out", str(sol)]) == 0
    assert (sol / "psi.bin").exists() and (sol / "psi.json").exists()
    for form in ("spinor", "tensor", "vec3"):
        assert main(["check", "--solution", str(sol), "--triple", "plus", "--form", form]) == 0
    assert main(["check", "--solution", str(sol), "--triple", "minus", "--csv", str(files / "r.csv")]) == 0
    assert (files / "r.csv").read_text().startswith("t,x,value_re,value_im")
    assert main(["check", "--solution", str(sol), "--tol", "1e-12"]) == 1
    assert main(["reconstruct", "--solution", str(sol), "--out", str(files / "rec")]) == 0
    meta = json.loads((files / "rec" / "psi.json").read_text())
    assert meta["t0"] == pytest.approx(1.0)
    capsys.readouterr()


def test_cli_free_field_check_fails(files):
    (files / "free.json").write_text(json.dumps({"family": "constant-F", "E": [0, 0, 0]}))
    sol = files / "free"
    assert main(["solve", "--config", str(files / "free.json"), "--grid", str(files / "grid.json"),
                 "--out", str(sol)]) == 0
    assert main(["check", "--solution", str(sol)]) == 1


def test_cli_convergence(files, capsys):
    grid = dict(GRID, Nx=128, L=64.0, T=4.0)
    (files / "coarse.json").write_text(json.dumps(grid))
    code = main(["convergence", "--config", str(files / "field.json"), "--levels", "3",
                 "--grid", str(files / "coarse.json"), "--json", str(files / "conv.json")])
    assert code == 0
    data = json.loads((files / "conv.json").read_text())
    assert all(c["status"] == "pass" for c in data["checks"])


def test_cli_usage_errors(files, capsys):
    assert main(["solve", "--config", str(files / "missing.json"), "--grid", str(files / "grid.json"),
                 "--out", str(files / "x")]) == 2
    (files / "bad.json").write_text("{not json")
    assert main(["solve", "--config", str(files / "bad.json"), "--grid", str(files / "grid.json"),
                 "--out", str(files / "x")]) == 2
    (files / "unstable.json").write_text(json.dumps(dict(GRID, dt=3.0, T=6.0)))
    assert main(["solve", "--config", str(files / "field.json"), "--grid", str(files / "unstable.json"),
                 "--out", str(files / "x")]) == 2
    assert main(["convergence", "--config", str(files / "field.json"), "--levels", "2"]) == 2
    assert main(["check", "--solution", str(files / "nowhere")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "dirac_tensor.cli", "verify", "--suite", "algebra"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "algebra: 15/15 passed" in proc.stdout


def test_all_suite_names():
    assert set(SUITES) == {"algebra", "duality", "basis", "lorentz", "oracle"}
