"""Tests for trace, plot and summary emitters."""

# External Libraries
import json
from dataclasses import replace

import numpy as np
import pytest

# Local Libraries
from src.frontend.emit import emit_metrics, emit_plot, emit_trace, plot_series, read_trace
from src.frontend.presets import preset_config
from src.netcore import TopologySchedule, make_complete
from src.repcore import AttackSpec, Constant
from src.simcore import SimConfig, run
from src.utilities.errors import ArgumentError


@pytest.fixture
def attacked_run(k5_config):
    return run(replace(k5_config, attack=AttackSpec(strategies={0: Constant(0.9)})))


### --- TRACES --- ###
def test_single_round_trace_layout(tmp_path):
    config = SimConfig(schedule=TopologySchedule.static(make_complete(2)), x0=(0.0, 1.0), round_cap=1)
    result = run(config)
    states_path, reputations_path = emit_trace(result, tmp_path)
    lines = states_path.read_text(encoding="utf-8").splitlines()
    assert lines == ["k,agent,x", "0,0,0", "0,1,1"]
    assert reputations_path.read_text(encoding="utf-8").splitlines()[0] == "k,agent,neighbor,c"


def test_trace_reads_back_exactly(attacked_run, tmp_path):
    emit_trace(attacked_run, tmp_path)
    restored = read_trace(tmp_path)
    assert len(restored) == len(attacked_run.trace)
    for original, loaded in zip(attacked_run.trace, restored, strict=True):
        assert loaded.k == original.k
        np.testing.assert_array_equal(loaded.x, original.x)
        np.testing.assert_array_equal(loaded.c, original.c)


def test_reruns_write_identical_files(k5_config, tmp_path):
    config = replace(k5_config, attack=AttackSpec(strategies={0: Constant(0.9)}), seed=4)
    for folder in ("first", "second"):
        result = run(config)
        emit_trace(result, tmp_path / folder)
        emit_plot(result, tmp_path / folder, reference=1.5)
    for name in ("states.csv", "reputations.csv", "states.svg"):
        assert (tmp_path / "first" / name).read_bytes() == (tmp_path / "second" / name).read_bytes()


### --- PLOTS --- ###
def test_plot_ends_at_the_final_states(k5_config):
    result = run(k5_config)
    series = plot_series(result)
    assert sorted(series) == [0, 1, 2, 3, 4]
    final = np.array([values[-1] for values in series.values()])
    np.testing.assert_allclose(final, result.final_x_denormalized)
    assert all(len(values) == result.rounds_executed + 1 for values in series.values())


def test_empty_trace_is_not_plotted(attacked_run, tmp_path):
    target = tmp_path / "empty.svg"
    with pytest.raises(ArgumentError):
        emit_plot(replace(attacked_run, trace=[]), target)
    assert not target.exists()


def test_plot_path_can_be_a_file(attacked_run, tmp_path):
    path = emit_plot(attacked_run, tmp_path / "custom.svg", title="custom")
    assert path == tmp_path / "custom.svg"
    assert path.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_trimmed_baseline_follows_a_stubborn_attacker():
    config = replace(preset_config("vs_baseline_stubborn"), algorithm="trimmed")
    result = run(config)
    np.testing.assert_allclose(result.final_x_denormalized[result.regular], 0.7, atol=1e-3)


### --- SUMMARIES --- ###
def test_metrics_json_converts_numpy_values(tmp_path):
    path = emit_metrics({"b": np.float64(1.5), "a": {3, 1}, "c": np.arange(2)}, tmp_path / "s.json")
    text = path.read_text(encoding="utf-8")
    assert json.loads(text) == {"a": [1, 3], "b": 1.5, "c": [0, 1]}
    assert text.index('"a"') < text.index('"b"')
