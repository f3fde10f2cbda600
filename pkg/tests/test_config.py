"""Tests for experiment document parsing."""

# External Libraries
import json

import pytest
from conftest import K5_CONSENSUS, K5_TOLERANCE

# Local Libraries
from src.constants.sources import CONFIGS_DIR
from src.frontend.config import load_json, parse_config
from src.repcore import Constant, Converging, GaussianNoise, Replay, UniformNoise
from src.simcore import run
from src.utilities.errors import ConfigError


def _doc(**overrides):
    doc = {"graph": {"generator": "complete", "n": 5}, "x0": [1, 0, 3, 1.2, 2.5]}
    return doc | overrides


def _errors(document):
    with pytest.raises(ConfigError) as info:
        parse_config(document)
    return info.value.errors


### --- BUNDLED CONFIGS --- ###
def test_bundled_no_attack_config_runs():
    config = parse_config(load_json(CONFIGS_DIR / "k5_no_attack.json"))
    assert config.n == 5
    assert config.seed == 0
    assert config.seed_defaulted
    assert run(config).consensus_raw == pytest.approx(K5_CONSENSUS, abs=K5_TOLERANCE)


def test_bundled_attack_config_uses_raw_units():
    config = parse_config(load_json(CONFIGS_DIR / "k5_gaussian_attack.json"))
    assert config.attack.units == "raw"
    assert config.attack.strategies == {0: GaussianNoise(0.5, 0.5)}
    assert config.seed == 7
    assert not config.seed_defaulted


def test_text_and_mapping_documents_agree():
    assert parse_config(json.dumps(_doc(seed=3))) == parse_config(_doc(seed=3))


### --- VALIDATION --- ###
def test_epsilon_range_message():
    [message] = _errors(_doc(epsilon=1.5))
    assert message.startswith("epsilon:")
    assert "epsilon must lie in (0,1)" in message


def test_unknown_keys_are_rejected():
    [message] = _errors(_doc(epsilonn=0.2))
    assert "epsilonn" in message


def test_every_problem_is_reported():
    errors = _errors(_doc(epsilon=2.0, f=0, delta=-1))
    assert len(errors) == 3
    assert {e.split(":")[0] for e in errors} == {"epsilon", "f", "delta"}


def test_attacker_outside_the_network():
    attack = {"strategies": [{"agent": 9, "kind": "constant", "value": 0.5}]}
    assert _errors(_doc(attack=attack)) == ["attacked agent 9 out of range 0..4"]


def test_initial_states_must_match_the_network():
    [message] = _errors(_doc(x0=[1.0, 2.0]))
    assert "x0 has 2 entries" in message


def test_graph_and_schedule_are_exclusive():
    schedule = {"pieces": [{"from": 0, "graph": {"generator": "complete", "n": 5}}]}
    assert _errors(_doc(schedule=schedule))
    assert _errors({"x0": [1, 2]})


def test_generator_failures_become_config_errors():
    [message] = _errors(_doc(graph={"generator": "wheel", "n": 3}, x0=[1, 2, 3]))
    assert "wheel" in message


def test_duplicate_attackers_are_rejected():
    strategies = [
        {"agent": 1, "kind": "constant", "value": 0.5},
        {"agent": 1, "kind": "constant", "value": 0.7},
    ]
    assert _errors(_doc(attack={"strategies": strategies}))


@pytest.mark.parametrize("document", ["{not json", "[1, 2]"])
def test_malformed_documents(document):
    assert _errors(document)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_json(path)


### --- STRUCTURE --- ###
def test_time_varying_schedule():
    schedule = {
        "pieces": [
            {"from": 0, "graph": {"generator": "circulant", "n": 6, "offsets": [1, 2, 3]}},
            {"from": 11, "graph": {"n": 6, "edges": [[1, 0], [2, 1], [3, 2], [4, 3], [5, 4], [0, 5]]}},
        ]
    }
    config = parse_config({"schedule": schedule, "x0": [0, 1, 2, 3, 4, 5]})
    assert config.schedule.starts == (0, 11)
    assert config.schedule.lookup(12).proper_neighbors(0) == (1,)


def test_random_graph_generator_needs_its_probability():
    assert _errors(_doc(graph={"generator": "random_strongly_connected", "n": 5}))
    config = parse_config(
        _doc(graph={"generator": "random_strongly_connected", "n": 5, "extra_edge_prob": 0.5, "seed": 4})
    )
    assert config.n == 5


def test_every_strategy_kind():
    strategies = [
        {"agent": 0, "kind": "constant", "value": 0.9},
        {"agent": 1, "kind": "converging", "target": 0.2, "rate": 0.5},
        {"agent": 2, "kind": "gaussian", "mu": 0.5, "sigma": 0.2},
        {"agent": 3, "kind": "uniform", "mean": 0.5, "half_width": 0.1},
        {"agent": 4, "kind": "replay", "values": [0.1, 0.2]},
    ]
    graph = {"generator": "complete", "n": 9}
    config = parse_config(
        {"graph": graph, "x0": list(range(9)), "attack": {"start_round": 3, "strategies": strategies}}
    )
    assert config.attack.strategies == {
        0: Constant(0.9),
        1: Converging(0.2, 0.5),
        2: GaussianNoise(0.5, 0.2),
        3: UniformNoise(0.5, 0.1),
        4: Replay((0.1, 0.2)),
    }
    assert config.attack.start_round == 3


def test_scheduler_and_stopping_fields():
    config = parse_config(
        _doc(
            scheduler={"kind": "async_random_subset", "min_active": 3},
            round_cap=50,
            stop_patience=4,
            algorithm="trimmed",
            f_trim=2,
            outputs={"dir": "somewhere", "plot": False},
        )
    )
    assert config.scheduler.randomized
    assert config.patience == 4
    assert config.trim.f_trim == 2
    assert str(config.out_dir) == "somewhere"
