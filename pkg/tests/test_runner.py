"""Tests for the round loop, stopping rules and schedulers."""

# External Libraries
from collections import Counter
from dataclasses import replace

import numpy as np
import pytest
from conftest import X5

# Local Libraries
from src.constants import defaults
from src.netcore import Topology, TopologySchedule, make_complete
from src.repcore import AttackSpec, Constant, GaussianNoise, normalize_initial
from src.simcore import (
    Scheduler,
    SimConfig,
    StopReason,
    min_neighborhood_size,
    rate_lambda,
    resolve_round_cap,
    run,
    sample_round,
)
from src.utilities.common import derive_rng
from src.utilities.errors import ArgumentError, ConfigError


@pytest.fixture
def attacked_k5(k5_config):
    return replace(k5_config, attack=AttackSpec(strategies={0: Constant(0.9)}), name="k5-attacked")


### --- ROUND LOOP --- ###
def test_run_without_attack_reaches_agreement(k5_config):
    result = run(k5_config)
    assert result.stop_reason is StopReason.DELTA_CONVERGED
    assert result.agreement_spread < 1e-6
    assert all(not flagged for flagged in result.detected.values())
    assert result.rounds_executed == len(result.trace)


def test_trace_records_broadcast_states_in_order(k5_config):
    result = run(k5_config)
    np.testing.assert_array_equal(result.trace[0].x, normalize_initial(X5)[0])
    assert [entry.k for entry in result.trace] == list(range(result.rounds_executed))
    assert result.final_state.k == result.rounds_executed
    np.testing.assert_allclose(result.final_x_denormalized, result.affine.inverse(result.final_state.x))


def test_runs_are_deterministic(attacked_k5):
    first, second = run(attacked_k5), run(attacked_k5)
    assert first.rounds_executed == second.rounds_executed
    np.testing.assert_array_equal(first.final_state.x, second.final_state.x)
    np.testing.assert_array_equal(first.final_state.c, second.final_state.c)


def test_invalid_config_fails_before_running(k5):
    config = SimConfig(schedule=TopologySchedule.static(k5), x0=(1.0, 2.0, 3.0), delta=-1.0)
    with pytest.raises(ConfigError) as info:
        run(config)
    assert len(info.value.errors) == 2


def test_round_cap_stops_the_run(k5_config):
    result = run(replace(k5_config, round_cap=1, stop_patience=10_000))
    assert result.rounds_executed == 30
    assert result.stop_reason is StopReason.ROUND_CAP
    assert not result.converged


### --- ROUND CAP --- ###
def test_default_round_cap_is_ten_times_the_rate_bound(k5_config):
    assert resolve_round_cap(k5_config) == 300


def test_configured_round_cap_never_undercuts_the_bound(k5_config):
    assert resolve_round_cap(replace(k5_config, round_cap=10)) == 30
    assert resolve_round_cap(replace(k5_config, round_cap=4000)) == 4000


def test_sparse_networks_fall_back_to_the_fixed_cap():
    cycle = Topology(n=3, edges={(0, 1), (1, 2), (2, 0)})
    config = SimConfig(schedule=TopologySchedule.static(cycle), x0=(0.0, 1.0, 2.0))
    assert resolve_round_cap(config) == 5000
    assert resolve_round_cap(replace(config, round_cap=12)) == 12


def test_round_cap_ignores_the_neighborhoods_of_attacked_agents():
    # Agent 0 hears only agent 1; every other agent hears everyone
    edges = {(u, v) for u in range(5) for v in range(1, 5) if u != v} | {(1, 0)}
    config = SimConfig(
        schedule=TopologySchedule.static(Topology(n=5, edges=edges)),
        x0=X5,
        attack=AttackSpec(strategies={0: Constant(0.9)}),
    )
    assert min_neighborhood_size(config.schedule) == 2
    assert min_neighborhood_size(config.schedule, {0}) == 5
    assert rate_lambda(config.schedule, {0}) == 0.5
    assert resolve_round_cap(config) == 300
    assert resolve_round_cap(replace(config, attack=AttackSpec.none())) == 5000


### --- ATTACKED AGENTS --- ###
def test_minority_attacker_loses_its_reputation(attacked_k5):
    result = run(attacked_k5)
    assert result.converged
    c = result.final_state.c
    for i in range(1, 5):
        assert c[i, 0] < defaults.REP_TOL
        for j in range(1, 5):
            assert c[i, j] > 1 - defaults.REP_TOL
    assert all(result.detected[i] == {0} for i in range(1, 5))


def test_every_neighbor_either_agrees_or_is_discounted(attacked_k5):
    result = run(attacked_k5)
    x, c = result.trace[-1].x, result.final_state.c
    for i in result.regular:
        for j in range(5):
            assert abs(x[j] - x[i]) < defaults.STATE_TOL or c[i, j] < defaults.REP_TOL


def test_broadcast_states_stay_in_the_unit_interval(k5_config):
    config = replace(k5_config, attack=AttackSpec(strategies={2: GaussianNoise(0.5, 0.4)}), seed=3)
    result = run(config)
    for entry in result.trace:
        assert np.all((entry.x >= 0.0) & (entry.x <= 1.0))


### --- SCHEDULERS --- ###
def test_asynchronous_run_converges_and_flags_the_attacker(attacked_k5):
    config = replace(
        attacked_k5, scheduler=Scheduler(kind="async_random_subset", min_active=3), round_cap=3000
    )
    result = run(config)
    assert result.converged
    assert result.agreement_spread < 1e-6
    assert all(result.detected[i] <= {0} for i in result.regular)
    assert any(entry.active is not None and len(entry.active) < 5 for entry in result.trace)


def test_stochastic_edges_run_has_no_false_positives():
    topo = make_complete(7)
    config = SimConfig(
        schedule=TopologySchedule.static(topo),
        x0=(0.3, 1.1, 0.2, 0.9, 0.5, 0.7, 0.0),
        attack=AttackSpec(strategies={0: Constant(0.95)}),
        scheduler=Scheduler(kind="stochastic_edges", edge_prob=0.9),
        round_cap=3000,
        seed=11,
    )
    result = run(config)
    assert result.converged
    assert result.agreement_spread < 1e-6
    assert all(result.detected[i] <= {0} for i in result.regular)


def test_stochastic_edges_keep_each_edge_with_the_given_probability():
    topo = make_complete(5)
    scheduler = Scheduler(kind="stochastic_edges", edge_prob=0.9)
    rng = derive_rng(123, 1)
    rounds = 10_000
    kept = Counter()
    for _ in range(rounds):
        sampled, active = sample_round(scheduler, topo, rng)
        assert active is None
        assert sampled.edges <= topo.edges
        kept.update(sampled.edges)

    p = scheduler.edge_prob
    pooled_sigma = np.sqrt(p * (1 - p) / (rounds * len(topo.edges)))
    assert abs(sum(kept.values()) / (rounds * len(topo.edges)) - p) <= 3 * pooled_sigma
    edge_sigma = np.sqrt(p * (1 - p) / rounds)
    for edge in topo.edges:
        assert abs(kept[edge] / rounds - p) <= 4.5 * edge_sigma


def test_async_subsets_respect_the_minimum_size():
    topo = make_complete(5)
    scheduler = Scheduler(kind="async_random_subset", min_active=3)
    rng = derive_rng(7, 1)
    draws = [sample_round(scheduler, topo, rng)[1] for _ in range(4000)]
    assert {len(active) for active in draws} == {3, 4, 5}
    # 11 of the 16 admissible subsets contain any given agent
    for agent in range(5):
        share = sum(agent in active for active in draws) / len(draws)
        assert share == pytest.approx(11 / 16, abs=0.03)


def test_async_subsets_near_the_full_network_are_drawn_directly():
    topo = make_complete(40)
    rng = derive_rng(3, 1)
    everyone = sample_round(Scheduler(kind="async_random_subset", min_active=40), topo, rng)[1]
    assert everyone == frozenset(range(40))

    scheduler = Scheduler(kind="async_random_subset", min_active=38)
    sizes = Counter(len(sample_round(scheduler, topo, rng)[1]) for _ in range(2000))
    assert set(sizes) <= {38, 39, 40}
    # C(40, 38) = 780 of the 821 admissible subsets have 38 agents
    assert sizes[38] / 2000 == pytest.approx(780 / 821, abs=0.03)


def test_synchronous_scheduler_returns_the_network_unchanged(k5):
    assert sample_round(Scheduler(), k5, derive_rng(0)) == (k5, None)


@pytest.mark.parametrize(
    "kwargs",
    [{"kind": "round_robin"}, {"min_active": 0}, {"edge_prob": 1.2}],
)
def test_scheduler_parameters_are_checked(kwargs):
    with pytest.raises(ArgumentError):
        Scheduler(**kwargs)


def test_scheduler_rejects_oversized_minimum(k5):
    with pytest.raises(ArgumentError):
        sample_round(Scheduler(kind="async_random_subset", min_active=6), k5, derive_rng(0))
