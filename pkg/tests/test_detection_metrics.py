"""Tests for attacker detection and run metrics."""

# External Libraries
from dataclasses import replace

import numpy as np
import pytest

# Local Libraries
from src.netcore import TopologySchedule, make_circulant
from src.repcore import AttackSpec, Constant, RepcParams
from src.simcore import DetectionParams, RoundTrace, SimConfig, compute_metrics, detect_attacked, run
from src.utilities.errors import ArgumentError

X10 = (1.0, 0.0, 3.0, 1.2, 2.5, 0.5, 2.2, 1.7, 0.8, 2.9)


def _trace(x_final, floored_rounds):
    """Trace of 3 agents where `floored_rounds[k]` lists the (reader, neighbor) floors of round k."""
    entries = []
    for k, pairs in enumerate(floored_rounds):
        floored = np.zeros((3, 3), dtype=bool)
        for i, j in pairs:
            floored[i, j] = True
        entries.append(RoundTrace(k=k, x=np.array(x_final), c=np.ones((3, 3)), floored=floored))
    return entries


def _two_attacker_config(values):
    return SimConfig(
        schedule=TopologySchedule.static(make_circulant(10, range(1, 6))),
        x0=X10,
        params=RepcParams(f=2),
        attack=AttackSpec(strategies={0: Constant(values[0]), 7: Constant(values[1])}),
        name="circulant",
    )


### --- DETECTION --- ###
def test_empty_trace_is_rejected():
    with pytest.raises(ArgumentError):
        detect_attacked([])


def test_sustained_floor_with_disagreement_is_flagged():
    trace = _trace([0.9, 0.4, 0.4], [[(1, 0), (2, 0)]] * 12)
    detection = detect_attacked(trace)
    assert detection.flags == {0: set(), 1: {0}, 2: {0}}
    assert not detection.low_confidence


def test_broken_floor_streak_is_not_flagged():
    rounds = [[(1, 0)]] * 12
    rounds[5] = []
    assert detect_attacked(_trace([0.9, 0.4, 0.4], rounds)).flags[1] == set()


def test_floor_without_disagreement_is_not_flagged():
    trace = _trace([0.4, 0.4, 0.4 + 1e-9], [[(1, 2), (0, 2)]] * 12)
    assert all(not flagged for flagged in detect_attacked(trace).flags.values())


def test_round_zero_is_not_evidence():
    # Agent 1 only floors agent 0 once attacks are possible
    trace = _trace([0.9, 0.4, 0.4], [[], [(1, 0)], [(1, 0)]])
    detection = detect_attacked(trace)
    assert detection.flags[1] == {0}
    assert detection.low_confidence


def test_single_round_trace_uses_round_zero():
    detection = detect_attacked(_trace([0.9, 0.4, 0.4], [[(2, 0)]]))
    assert detection.flags[2] == {0}
    assert detection.low_confidence


def test_horizon_is_configurable():
    rounds = [[]] * 5 + [[(1, 0)]] * 3
    trace = _trace([0.9, 0.4, 0.4], rounds)
    assert detect_attacked(trace, DetectionParams(horizon=3)).flags[1] == {0}
    assert detect_attacked(trace, DetectionParams(horizon=4)).flags[1] == set()


### --- METRICS --- ###
def test_identical_runs_score_zero_error(k5_config):
    result = run(k5_config)
    metrics = compute_metrics(result, run(k5_config), AttackSpec.none())
    assert metrics.consensus_error == 0.0
    assert metrics.false_positives == 0
    assert metrics.false_negatives == 0
    assert metrics.valid
    assert metrics.to_dict()["consensus"] == pytest.approx(result.consensus)


def test_unflagged_attacker_counts_once_per_reader(k5_config):
    config = replace(
        k5_config,
        attack=AttackSpec(strategies={0: Constant(0.9)}),
        detection=DetectionParams(state_tol=10.0),
    )
    metrics = compute_metrics(run(config), run(config.without_attack()), config.attack)
    assert metrics.false_negatives == 4
    assert metrics.false_positives == 0


@pytest.mark.parametrize(
    ("values", "expected_error"),
    [((0.1, 0.25), 1.355 - 1.2966), ((0.1, 0.9), 1.4662 - 1.355)],
)
def test_two_attackers_are_both_flagged(values, expected_error):
    config = _two_attacker_config(values)
    result = run(config)
    metrics = compute_metrics(result, run(config.without_attack()), config.attack)
    assert result.converged
    assert metrics.false_positives == 0
    assert metrics.false_negatives == 0
    assert metrics.agreement_spread < 1e-6
    assert metrics.consensus_error_raw == pytest.approx(expected_error, abs=0.01)
    assert metrics.consensus_error == pytest.approx(metrics.consensus_error_raw / 3.0)
