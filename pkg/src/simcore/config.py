"""
Simulation Config

The full description of one experiment: network schedule, initial states, protocol parameters, attack, scheduler, algorithm, stopping rule and seed.

Classes:
    DetectionParams: Horizon and tolerance of attacker detection.
    SimConfig: One experiment.
"""

# External Libraries
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Literal

import numpy as np

# Local Libraries
from src.constants import defaults
from src.netcore.schedule import TopologySchedule
from src.repcore.adversary import AttackSpec
from src.repcore.baseline import TrimParams
from src.repcore.reputation import RepcParams
from src.utilities.errors import ConfigError

from .scheduler import Scheduler

### --- TYPE ALIASES --- ###
type Algorithm = Literal["repc", "trimmed"]


### --- CLASSES --- ###
@dataclass(frozen=True)
class DetectionParams:
    """
    Attacker detection settings.

    Attributes:
        horizon (int): Consecutive final rounds a reputation must sit on the floor (M).
        state_tol (float): Minimum final disagreement between reader and flagged neighbor.
    """

    horizon: int = defaults.DETECTION_HORIZON
    state_tol: float = defaults.STATE_TOL


@dataclass(frozen=True)
class SimConfig:
    """
    One experiment.

    Attributes:
        schedule (TopologySchedule): The network, possibly time-varying.
        x0 (tuple[float, ...]): Raw initial states, one per agent.
        params (RepcParams): Protocol parameters.
        attack (AttackSpec): Attacked agents and their strategies.
        scheduler (Scheduler): Who communicates each round.
        algorithm (Algorithm): "repc" or "trimmed".
        trim (TrimParams): Baseline parameters.
        delta (float): Stopping threshold on the regular agents' state change.
        round_cap (int | None): Configured cap; None picks the default rule.
        stop_patience (int | None): Consecutive calm rounds needed to stop; None picks 1 for synchronous runs, more for randomized schedulers.
        detection (DetectionParams): Attacker detection settings.
        seed (int): Root seed.
        seed_defaulted (bool): True when the seed was not given and fell back to the default.
        out_dir (Path | None): Where outputs go.
        name (str): Label used in logs and summaries.
    """

    schedule: TopologySchedule
    x0: tuple[float, ...]
    params: RepcParams = field(default_factory=RepcParams)
    attack: AttackSpec = field(default_factory=AttackSpec)
    scheduler: Scheduler = field(default_factory=Scheduler)
    algorithm: Algorithm = "repc"
    trim: TrimParams = field(default_factory=TrimParams)
    delta: float = defaults.DELTA
    round_cap: int | None = None
    stop_patience: int | None = None
    detection: DetectionParams = field(default_factory=DetectionParams)
    seed: int = defaults.SEED
    seed_defaulted: bool = False
    out_dir: Path | None = None
    name: str = "run"

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", tuple(float(v) for v in self.x0))

    @property
    def n(self) -> int:
        """Number of agents."""
        return self.schedule.n

    @property
    def patience(self) -> int:
        """Consecutive calm rounds required to stop."""
        if self.stop_patience is not None:
            return self.stop_patience
        if self.scheduler.randomized:
            return defaults.RANDOM_STOP_PATIENCE
        return defaults.SYNC_STOP_PATIENCE

    def errors(self) -> list[str]:
        """Every inconsistency in the configuration; empty when valid."""
        problems = []
        if len(self.x0) != self.n:
            problems.append(f"x0 has {len(self.x0)} entries but the network has {self.n} agents")
        if not np.all(np.isfinite(self.x0)):
            problems.append("x0 entries must be finite")
        problems.extend(self.attack.check_agents(self.n))
        if not self.delta > 0:
            problems.append(f"delta must be positive, got {self.delta}")
        if self.round_cap is not None and self.round_cap < 1:
            problems.append(f"round_cap must be at least 1, got {self.round_cap}")
        if self.stop_patience is not None and self.stop_patience < 1:
            problems.append(f"stop_patience must be at least 1, got {self.stop_patience}")
        if self.detection.horizon < 1:
            problems.append(f"detection horizon must be at least 1, got {self.detection.horizon}")
        if self.algorithm not in ("repc", "trimmed"):
            problems.append(f"algorithm must be 'repc' or 'trimmed', got {self.algorithm!r}")
        if self.scheduler.kind == "async_random_subset" and self.scheduler.min_active > self.n:
            problems.append(
                f"min_active={self.scheduler.min_active} exceeds the {self.n} agents"
            )
        if not 0 <= self.seed < 2**64:
            problems.append(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        return problems

    def validate(self) -> "SimConfig":
        """
        Raise a ConfigError listing every inconsistency, else return self.
        """
        if problems := self.errors():
            raise ConfigError(problems)
        return self

    def without_attack(self) -> "SimConfig":
        """The reference experiment: same config with no attacked agents."""
        return replace(self, attack=AttackSpec.none(), name=f"{self.name}-reference")
