"""
Runner

Drives a simulation: normalizes the initial states, then each round samples who communicates, injects the attack and runs one protocol step, until the regular agents stop moving or the round cap is hit.

Functions:
    rate_lambda: Convergence rate 3 / (N + 1) for the smallest neighborhood size N.
    round_bound: Rounds ⌈log_λ δ⌉ needed to reach δ at rate λ.
    resolve_round_cap: The round cap a config runs under.
    run: Execute one experiment.
"""

# External Libraries
import logging
import math
from collections.abc import Iterable

import numpy as np

# Local Libraries
from src.constants import defaults
from src.netcore.assumptions import validate_assumptions
from src.netcore.schedule import TopologySchedule
from src.netcore.topology import Topology
from src.repcore.adversary import inject
from src.repcore.baseline import trimmed_step
from src.repcore.reputation import OperationCounter
from src.repcore.state import denormalize, initial_state, normalize_initial
from src.repcore.step import step
from src.utilities.common import derive_rng
from src.utilities.errors import ArgumentError

from .config import SimConfig
from .detection import detect_attacked
from .scheduler import SCHEDULER_STREAM, sample_round
from .trace import RoundTrace, RunResult, StopReason

logger = logging.getLogger(__name__)


### --- FUNCTIONS --- ###
def min_neighborhood_size(network: Topology | TopologySchedule, attacked: Iterable[int] = ()) -> int:
    """
    Smallest |N_i| (self included) over the regular agents of every schedule piece. If every agent is attacked the minimum runs over all of them.
    """
    pieces = [network] if isinstance(network, Topology) else [p.topology for p in network.pieces]
    excluded = frozenset(attacked)
    regular = [v for v in range(pieces[0].n) if v not in excluded] or range(pieces[0].n)
    return min(len(topo.neighbors(v)) for topo in pieces for v in regular)


def rate_lambda(network: Topology | TopologySchedule, attacked: Iterable[int] = ()) -> float:
    """
    Convergence rate λ = 3 / (N + 1), N being the smallest neighborhood size among regular agents.
    """
    return 3.0 / (min_neighborhood_size(network, attacked) + 1)


def round_bound(lam: float, delta: float) -> int:
    """
    Number of rounds ⌈log_λ δ⌉ after which λ^k drops below δ.

    Args:
        lam (float): Rate in (0, 1).
        delta (float): Target in (0, 1).

    Returns:
        int: The round bound.
    """
    if not 0.0 < lam < 1.0:
        msg = f"The rate must lie in (0, 1), got {lam}"
        raise ArgumentError(msg)
    if not 0.0 < delta < 1.0:
        msg = f"delta must lie in (0, 1), got {delta}"
        raise ArgumentError(msg)
    return math.ceil(math.log(delta) / math.log(lam))


def resolve_round_cap(config: SimConfig) -> int:
    """
    Round cap of a run. When the rate bound applies (min |N_i| > 3 over regular agents) the cap is never below ⌈log_λ δ⌉; without a configured cap it defaults to ten times the bound, or 5000 when the bound does not apply.
    """
    bound = None
    attacked = config.attack.attacked
    if min_neighborhood_size(config.schedule, attacked) > 3 and config.delta < 1.0:
        bound = round_bound(rate_lambda(config.schedule, attacked), config.delta)
    if config.round_cap is None:
        return defaults.ROUND_CAP_MULTIPLIER * bound if bound else defaults.ROUND_CAP
    return max(bound or 0, config.round_cap)


def run(config: SimConfig, counter: OperationCounter | None = None) -> RunResult:
    """
    Execute one experiment. The result is fully determined by the config and its seed.

    Args:
        config (SimConfig): The experiment.
        counter (OperationCounter, optional): Tally of protocol work.

    Returns:
        RunResult: Trace, final state, stop reason and detections.

    Raises:
        ConfigError: If the config is inconsistent; raised before any round runs.
    """
    config.validate()
    schedule = config.schedule
    attacked = config.attack.attacked
    regular = np.array([v for v in range(config.n) if v not in attacked], dtype=int)

    validate_assumptions(schedule, attacked)
    x_norm, affine = normalize_initial(config.x0)
    attack = config.attack.bind(affine, x_norm)
    state = initial_state(schedule.lookup(0), x_norm)
    cap = resolve_round_cap(config)
    patience = config.patience
    rng = derive_rng(config.seed, SCHEDULER_STREAM)

    logger.info(
        "Running %s: n=%d, algorithm=%s, scheduler=%s, attacked=%s, cap=%d",
        config.name,
        config.n,
        config.algorithm,
        config.scheduler.kind,
        sorted(attacked),
        cap,
    )

    trace: list[RoundTrace] = []
    stop_reason = StopReason.ROUND_CAP
    calm = 0
    for k in range(cap):
        topo, active = sample_round(config.scheduler, schedule.lookup(k), rng)
        broadcast = inject(attack, state, k, config.seed)
        if config.algorithm == "trimmed":
            produced = trimmed_step(broadcast, topo, config.trim, active)
        else:
            produced = step(broadcast, topo, config.params, active, counter)
        trace.append(RoundTrace.from_states(broadcast, produced, active))

        change = float(np.max(np.abs(produced.x[regular] - broadcast.x[regular]), initial=0.0))
        logger.debug("Round %d: max regular change %.3e", k, change)
        state = produced
        calm = calm + 1 if change < config.delta else 0
        if calm >= patience:
            stop_reason = StopReason.DELTA_CONVERGED
            break

    if stop_reason is StopReason.ROUND_CAP:
        logger.warning("%s hit the round cap of %d rounds without converging", config.name, cap)
    else:
        logger.info("%s converged after %d rounds", config.name, len(trace))

    detection = detect_attacked(trace, config.detection)
    return RunResult(
        config=config,
        trace=trace,
        final_state=state,
        rounds_executed=len(trace),
        stop_reason=stop_reason,
        affine=affine,
        detected=detection.flags,
        detection_low_confidence=detection.low_confidence,
        final_x_denormalized=denormalize(state.x, affine),
    )
