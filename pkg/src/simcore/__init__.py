"""
Simulation Core Package

This package contains the simulation harness: experiment configs, schedulers, the round loop, traces, attacker detection, metrics and parameter sweeps.
"""

from .config import DetectionParams, SimConfig
from .detection import Detection, detect_attacked
from .metrics import Metrics, compute_metrics
from .runner import min_neighborhood_size, rate_lambda, resolve_round_cap, round_bound, run
from .scheduler import Scheduler, sample_round
from .sweep import SweepTable, apply_override, apply_overrides, expand_grid, sweep
from .trace import RoundTrace, RunResult, StopReason

__all__ = [
    "Detection",
    "DetectionParams",
    "Metrics",
    "RoundTrace",
    "RunResult",
    "Scheduler",
    "SimConfig",
    "StopReason",
    "SweepTable",
    "apply_override",
    "apply_overrides",
    "compute_metrics",
    "detect_attacked",
    "expand_grid",
    "min_neighborhood_size",
    "rate_lambda",
    "resolve_round_cap",
    "round_bound",
    "run",
    "sample_round",
    "sweep",
]
