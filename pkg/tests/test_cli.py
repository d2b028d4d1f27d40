import json

import numpy as np
import pytest

from qboundary.cli import main
from qboundary.states import DensityMatrix, basis_ket, bell_state, maximally_mixed
from qboundary.stateio import load_state, save_basis, save_state


@pytest.fixture()
def phi_plus_file(tmp_path):
    path = tmp_path / "phi_plus.jsonl"
    save_state(path, DensityMatrix.from_vector(bell_state("phi+"), (2, 2)))
    return str(path)


def test_list_runs(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for eid in ("pps2", "thermal-n", "gb-ball", "eps-discord"):
        assert eid in out


def test_reproduce_pass_and_exit_code(capsys):
    assert main(["--json", "reproduce", "pps-n", "--param", "N=5"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["all_pass"] is True
    assert parsed["params"] == {"N": 5}


def test_reproduce_csv(capsys):
    assert main(["--csv", "reproduce", "void2", "--param", "eps=0.2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("experiment_id,comparison")
    assert any(",pt_eigenvalue_0," in ln for ln in lines)


def test_reproduce_known_thermal_discrepancy_fails(capsys):
    # the quoted distance series for the thermal family disagrees with the
    # trace-distance definition at second order, so this run must exit 1
    assert main(["--json", "reproduce", "thermal2"]) == 1
    parsed = json.loads(capsys.readouterr().out)
    flags = parsed["pass"]
    assert flags["t_b"] and flags["two_qubit_condition"] and flags["delta_thermal_to_boundary"]
    assert not flags["delta_thermal_to_boundary_series"]


def test_reproduce_unknown_exits_2(capsys):
    assert main(["reproduce", "unknown-id"]) == 2
    assert "error:" in capsys.readouterr().err


def test_certify_verb(phi_plus_file, capsys):
    assert main(["--json", "certify", "--in", phi_plus_file]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["info"]["peres_verdict"] == "NPT"
    assert parsed["info"]["gurvits_barnum"] == "Outside"


def test_certify_with_candidate_basis(tmp_path, capsys):
    state_path = tmp_path / "mixed.jsonl"
    save_state(state_path, maximally_mixed((2, 2)))
    basis_path = tmp_path / "basis.jsonl"
    save_basis(basis_path, np.eye(2, dtype=complex))
    assert main(["--json", "certify", "--in", str(state_path), "--basis", str(basis_path)]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["info"]["classicality"] == "ClassicalWrtA"


def test_certify_raw_diagnostics(tmp_path, capsys):
    mat = np.diag([0.7, 0.5, -0.2]).astype(complex)
    path = tmp_path / "raw.jsonl"
    save_state(path, mat)
    assert main(["--json", "certify", "--in", str(path), "--raw"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["info"]["psd"] is False


def test_boundary_verb(tmp_path, capsys):
    rho0 = tmp_path / "rho0.jsonl"
    rho1 = tmp_path / "rho1.jsonl"
    out = tmp_path / "boundary.jsonl"
    save_state(rho0, maximally_mixed((2, 2)))
    save_state(rho1, DensityMatrix.from_vector(basis_ket([1, 1], [2, 2]), (2, 2)))
    assert main(["--json", "boundary", "--rho0", str(rho0), "--rho1", str(rho1), "--out", str(out)]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert abs(parsed["info"]["t_b"] + 1 / 3) <= 1e-10
    assert parsed["info"]["void_degree"] == 1
    saved = load_state(out)
    assert np.allclose(saved.mat, np.diag([1 / 3, 1 / 3, 1 / 3, 0]), atol=1e-10)


def test_boundary_degenerate_exits_2(tmp_path, capsys):
    rho = tmp_path / "rho.jsonl"
    save_state(rho, maximally_mixed((2, 2)))
    assert main(["boundary", "--rho0", str(rho), "--rho1", str(rho)]) == 2


def test_discord_verb(tmp_path, capsys):
    from qboundary.states import zero_plus_mixture

    path = tmp_path / "overlap.jsonl"
    save_state(path, zero_plus_mixture())
    assert main(["--json", "discord", "--in", str(path)]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["info"]["status"] == "Discordant"
    assert parsed["info"]["residual"] > 1e-3
