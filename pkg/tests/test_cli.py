"""Tests for the `repc` command."""

# External Libraries
import json

import pytest

# Local Libraries
from src.constants.sources import CONFIGS_DIR
from src.frontend.cli import EXIT_OK, EXIT_RUNTIME, EXIT_VALIDATION, main
from src.frontend.presets import PRESET_NAMES, sweep_grid


@pytest.fixture
def out(tmp_path):
    return tmp_path / "out"


### --- RUN --- ###
def test_run_writes_every_artifact(out, capsys):
    code = main(["run", str(CONFIGS_DIR / "k5_no_attack.json"), "--out", str(out)])
    assert code == EXIT_OK
    target = out / "k5_no_attack"
    for name in ("states.csv", "reputations.csv", "states.svg", "summary.json"):
        assert (target / name).exists()
    summary = json.loads((target / "summary.json").read_text(encoding="utf-8"))
    assert summary["seed_defaulted"] is True
    assert summary["stop_reason"] == "delta_converged"
    assert "(default)" in capsys.readouterr().out


def test_run_without_plot(out):
    assert main(["run", str(CONFIGS_DIR / "k5_gaussian_attack.json"), "--out", str(out), "--no-plot"]) == EXIT_OK
    assert not (out / "k5_gaussian_attack" / "states.svg").exists()


def test_run_uses_the_environment_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("REPC_OUT", str(tmp_path / "env"))
    assert main(["run", str(CONFIGS_DIR / "k5_no_attack.json"), "--no-plot"]) == EXIT_OK
    assert (tmp_path / "env" / "k5_no_attack" / "summary.json").exists()


def test_invalid_config_exits_with_validation_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"graph": {"generator": "complete", "n": 5}, "x0": [1, 2], "epsilon": 3}))
    assert main(["run", str(path)]) == EXIT_VALIDATION
    assert "epsilon must lie in (0,1)" in capsys.readouterr().err


def test_missing_config_exits_with_runtime_code(tmp_path):
    assert main(["run", str(tmp_path / "missing.json")]) == EXIT_RUNTIME


def test_bad_usage_exits_with_validation_code():
    assert main(["launch"]) == EXIT_VALIDATION
    assert main(["--help"]) == EXIT_OK


### --- PRESETS --- ###
def test_unknown_preset(capsys):
    assert main(["preset", "no_such_preset"]) == EXIT_VALIDATION
    err = capsys.readouterr().err
    assert "usage:" in err
    assert "no_attack" in err


def test_preset_reruns_are_byte_identical(out):
    for folder in ("a", "b"):
        assert main(["preset", "near_consensus_attacker", "--out", str(out / folder)]) == EXIT_OK
    for name in ("states.csv", "reputations.csv", "states.svg", "summary.json"):
        first = (out / "a" / "near_consensus_attacker" / name).read_bytes()
        assert first == (out / "b" / "near_consensus_attacker" / name).read_bytes()


def test_baseline_preset_writes_both_algorithms(out):
    assert main(["preset", "vs_baseline_stubborn", "--out", str(out)]) == EXIT_OK
    for algorithm in ("repc", "trimmed"):
        assert (out / "vs_baseline_stubborn" / algorithm / "summary.json").exists()


@pytest.mark.parametrize(
    "name",
    [
        pytest.param(name, marks=pytest.mark.slow) if name == "error_sweep" else name
        for name in PRESET_NAMES
    ],
)
def test_every_preset_runs(name, out):
    assert main(["preset", name, "--out", str(out), "--seed", "1"]) == EXIT_OK
    assert any((out / name).rglob("*.csv"))


def test_desk_scale_grid_shape():
    assert len(sweep_grid()) == 15
    assert len(sweep_grid(full_grid=True)) == 201 * 181


### --- SWEEP --- ###
def test_sweep_command(tmp_path, out):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"axes": {"attack.strategies.0.mu": [0.5, 1.0]}}))
    code = main(
        ["sweep", str(CONFIGS_DIR / "k5_gaussian_attack.json"), str(grid), "--out", str(out), "--repeats", "2"]
    )
    assert code == EXIT_OK
    lines = (out / "k5_gaussian_attack" / "sweep.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    runs = (out / "k5_gaussian_attack" / "sweep_runs.csv").read_text(encoding="utf-8").splitlines()
    assert len(runs) == 5


def test_sweep_rejects_zero_repeats(tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"cells": [{}]}))
    args = ["sweep", str(CONFIGS_DIR / "k5_no_attack.json"), str(grid), "--repeats", "0"]
    assert main(args) == EXIT_VALIDATION
