"""Tests for the trimmed-mean baseline."""

# External Libraries
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

# Local Libraries
from src.netcore import Topology, make_complete
from src.repcore import TrimParams, initial_state, trimmed_mean, trimmed_step
from src.utilities.errors import ArgumentError


def test_trimmed_mean_drops_one_value_at_each_end():
    assert trimmed_mean(np.array([0.0, 1.0, 2.0, 3.0, 4.0]), range(5), 1) == 2.0


def test_ties_drop_exactly_one_copy_per_end():
    x = np.array([1.0, 1.0, 1.0, 5.0, 5.0])
    assert trimmed_mean(x, range(5), 1) == pytest.approx(7 / 3)


def test_pool_must_outnumber_the_trim():
    with pytest.raises(ArgumentError):
        trimmed_mean(np.zeros(4), range(4), 2)
    with pytest.raises(ArgumentError):
        TrimParams(f_trim=0)


def test_equal_states_are_unchanged():
    topo = make_complete(4)
    state = initial_state(topo, np.full(4, 0.6))
    assert np.array_equal(trimmed_step(state, topo, TrimParams()).x, state.x)


def test_small_neighborhoods_hold_and_are_reported():
    cycle = Topology(n=3, edges={(0, 1), (1, 2), (2, 0)})
    state = initial_state(cycle, [0.0, 0.5, 1.0])
    after = trimmed_step(state, cycle, TrimParams())
    assert after.held == frozenset({0, 1, 2})
    assert np.array_equal(after.x, state.x)
    assert after.k == 1


def test_reputations_are_untouched():
    topo = make_complete(5)
    state = initial_state(topo, np.linspace(0.0, 1.0, 5))
    after = trimmed_step(state, topo, TrimParams())
    assert np.array_equal(after.c, state.c)
    assert np.array_equal(after.x, np.full(5, 0.5))


def test_inactive_agents_hold_silently():
    topo = make_complete(5)
    state = initial_state(topo, np.linspace(0.0, 1.0, 5))
    after = trimmed_step(state, topo, TrimParams(), active={0, 1, 2, 3})
    assert after.x[4] == 1.0
    assert after.x[0] == pytest.approx(0.375)
    assert after.held == frozenset()


@given(
    x=st.lists(st.floats(0.0, 1.0), min_size=3, max_size=9),
    f_trim=st.integers(1, 4),
)
def test_trimmed_mean_stays_within_the_kept_values(x, f_trim):
    if len(x) <= 2 * f_trim:
        return
    kept = sorted(x)[f_trim : len(x) - f_trim]
    result = trimmed_mean(np.array(x), range(len(x)), f_trim)
    assert min(kept) - 1e-12 <= result <= max(kept) + 1e-12
