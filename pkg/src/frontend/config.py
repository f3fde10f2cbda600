"""
Config Parsing

JSON experiment documents, validated with pydantic and turned into a SimConfig. Validation collects every problem in the document rather than stopping at the first one, and unknown keys are rejected so typos in experiment files surface immediately.

Example document:
    {
        "name": "k5_no_attack",
        "graph": {"generator": "complete", "n": 5},
        "x0": [1, 0, 3, 1.2, 2.5],
        "epsilon": 0.1,
        "f": 1,
        "attack": {"strategies": [{"agent": 0, "kind": "gaussian", "mu": 0.5, "sigma": 0.2}]},
        "seed": 7
    }

Classes:
    GraphModel: A single network, given by edges or by a generator.
    ScheduleModel: A time-varying network.
    AttackModel: Attack start, units, clamping and per-agent strategies.
    SchedulerModel: Scheduling policy.
    ConfigModel: The whole document.

Functions:
    load_json: Load a JSON file into a dictionary.
    parse_config: Validate a document (text or mapping) into a SimConfig.
"""

# External Libraries
import json
from collections.abc import Mapping
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

# Local Libraries
from src.constants import defaults
from src.netcore.schedule import SchedulePiece, TopologySchedule
from src.netcore.topology import (
    Topology,
    make_circulant,
    make_complete,
    make_random_strongly_connected,
    make_wheel,
)
from src.repcore.adversary import AttackSpec, Constant, Converging, GaussianNoise, Replay, UniformNoise
from src.repcore.baseline import TrimParams
from src.repcore.reputation import RepcParams
from src.simcore.config import DetectionParams, SimConfig
from src.simcore.scheduler import Scheduler
from src.utilities.errors import ArgumentError, ConfigError


### --- MODELS --- ###
class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class GraphModel(_Strict):
    """A network given either by an explicit edge list or by a named generator."""

    n: int = Field(ge=1)
    edges: list[tuple[int, int]] | None = None
    generator: Literal["complete", "wheel", "circulant", "random_strongly_connected"] | None = None
    offsets: list[int] | None = None
    extra_edge_prob: float | None = Field(default=None, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _edges_or_generator(self) -> "GraphModel":
        if (self.edges is None) == (self.generator is None):
            msg = "graph needs exactly one of 'edges' or 'generator'"
            raise ValueError(msg)
        if self.generator == "circulant" and not self.offsets:
            msg = "circulant graphs need 'offsets'"
            raise ValueError(msg)
        if self.generator == "random_strongly_connected" and self.extra_edge_prob is None:
            msg = "random_strongly_connected graphs need 'extra_edge_prob'"
            raise ValueError(msg)
        return self

    def build(self) -> Topology:
        """Construct the Topology."""
        match self.generator:
            case "complete":
                return make_complete(self.n)
            case "wheel":
                return make_wheel(self.n)
            case "circulant":
                return make_circulant(self.n, self.offsets or [])
            case "random_strongly_connected":
                return make_random_strongly_connected(self.n, self.extra_edge_prob or 0.0, self.seed)
            case _:
                return Topology(n=self.n, edges=frozenset(self.edges or []))


class PieceModel(_Strict):
    start: int = Field(alias="from", ge=0)
    graph: GraphModel


class ScheduleModel(_Strict):
    """A time-varying network: `{"pieces": [{"from": k, "graph": {...}}]}`."""

    pieces: list[PieceModel] = Field(min_length=1)

    def build(self) -> TopologySchedule:
        """Construct the TopologySchedule."""
        return TopologySchedule(
            pieces=tuple(SchedulePiece(p.start, p.graph.build()) for p in self.pieces)
        )


class ConstantModel(_Strict):
    agent: int = Field(ge=0)
    kind: Literal["constant"]
    value: float

    def build(self) -> Constant:
        return Constant(self.value)


class ConvergingModel(_Strict):
    agent: int = Field(ge=0)
    kind: Literal["converging"]
    target: float
    rate: float = Field(ge=0.0, lt=1.0)
    origin: float | None = None

    def build(self) -> Converging:
        return Converging(self.target, self.rate, self.origin)


class GaussianModel(_Strict):
    agent: int = Field(ge=0)
    kind: Literal["gaussian"]
    mu: float
    sigma: float = Field(ge=0.0)

    def build(self) -> GaussianNoise:
        return GaussianNoise(self.mu, self.sigma)


class UniformModel(_Strict):
    agent: int = Field(ge=0)
    kind: Literal["uniform"]
    mean: float
    half_width: float = Field(ge=0.0)

    def build(self) -> UniformNoise:
        return UniformNoise(self.mean, self.half_width)


class ReplayModel(_Strict):
    agent: int = Field(ge=0)
    kind: Literal["replay"]
    values: list[float] = Field(min_length=1)

    def build(self) -> Replay:
        return Replay(tuple(self.values))


StrategyModel = Annotated[
    ConstantModel | ConvergingModel | GaussianModel | UniformModel | ReplayModel,
    Field(discriminator="kind"),
]


class AttackModel(_Strict):
    """Attack start, units, clamping and one strategy per attacked agent."""

    start_round: int = Field(default=1, ge=1)
    units: Literal["normalized", "raw"] = "normalized"
    clamp: bool = True
    strategies: list[StrategyModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_strategy_per_agent(self) -> "AttackModel":
        agents = [s.agent for s in self.strategies]
        if len(agents) != len(set(agents)):
            msg = "each attacked agent may have only one strategy"
            raise ValueError(msg)
        return self

    def build(self) -> AttackSpec:
        """Construct the AttackSpec."""
        return AttackSpec(
            strategies={model.agent: model.build() for model in self.strategies},
            start_round=self.start_round,
            units=self.units,
            clamp=self.clamp,
        )


class SchedulerModel(_Strict):
    kind: Literal["synchronous", "async_random_subset", "stochastic_edges"] = "synchronous"
    min_active: int = Field(default=1, ge=1)
    edge_prob: float = Field(default=1.0, ge=0.0, le=1.0)


class DetectionModel(_Strict):
    horizon: int = Field(default=defaults.DETECTION_HORIZON, ge=1)
    state_tol: float = Field(default=defaults.STATE_TOL, gt=0.0)


class OutputsModel(_Strict):
    dir: str | None = None
    plot: bool = True


class ConfigModel(_Strict):
    """The whole experiment document."""

    name: str = "run"
    graph: GraphModel | None = None
    schedule: ScheduleModel | None = None
    x0: list[float] = Field(min_length=1)
    epsilon: float = defaults.EPSILON
    f: int = Field(default=defaults.F, ge=1)
    include_self_in_discrepancy: bool = defaults.INCLUDE_SELF_IN_DISCREPANCY
    fresh_reputation_in_update: bool = defaults.FRESH_REPUTATION_IN_UPDATE
    include_self_in_update: bool = defaults.INCLUDE_SELF_IN_UPDATE
    attack: AttackModel = Field(default_factory=AttackModel)
    scheduler: SchedulerModel = Field(default_factory=SchedulerModel)
    algorithm: Literal["repc", "trimmed"] = "repc"
    f_trim: int = Field(default=1, ge=1)
    delta: float = Field(default=defaults.DELTA, gt=0.0)
    round_cap: int | None = Field(default=None, ge=1)
    stop_patience: int | None = Field(default=None, ge=1)
    detection: DetectionModel = Field(default_factory=DetectionModel)
    seed: int | None = Field(default=None, ge=0, lt=2**64)
    outputs: OutputsModel = Field(default_factory=OutputsModel)

    @field_validator("epsilon")
    @classmethod
    def _epsilon_range(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            msg = "epsilon must lie in (0,1)"
            raise ValueError(msg)
        return value

    @model_validator(mode="after")
    def _graph_or_schedule(self) -> "ConfigModel":
        if (self.graph is None) == (self.schedule is None):
            msg = "config needs exactly one of 'graph' or 'schedule'"
            raise ValueError(msg)
        return self


### --- FUNCTIONS --- ###
def load_json(file_path: str | Path, encoding: str = "utf-8") -> dict:
    """
    Load a JSON file into a dictionary.

    Args:
        file_path (str | Path): The path to the JSON file.
        encoding (str): The encoding of the file.

    Returns:
        dict: The JSON data as a dictionary.

    Raises:
        ConfigError: If the file is not valid JSON.
    """
    with open(file_path, encoding=encoding) as file:
        text = file.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        msg = f"{file_path}: invalid JSON ({exc})"
        raise ConfigError(msg) from exc


def _format_error(error: Mapping) -> str:
    location = ".".join(str(part) for part in error.get("loc", ())) or "config"
    return f"{location}: {error['msg']}"


def parse_config(document: str | Mapping) -> SimConfig:
    """
    Validate an experiment document and build the SimConfig. A missing seed defaults to 0 and is flagged through `seed_defaulted`.

    Args:
        document (str | Mapping): JSON text or an already decoded mapping.

    Returns:
        SimConfig: The validated experiment.

    Raises:
        ConfigError: With every problem found in the document.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            msg = f"invalid JSON: {exc}"
            raise ConfigError(msg) from exc
    if not isinstance(document, Mapping):
        msg = "a config document must be a JSON object"
        raise ConfigError(msg)

    try:
        model = ConfigModel.model_validate(document)
    except ValidationError as exc:
        raise ConfigError([_format_error(e) for e in exc.errors()]) from exc

    try:
        schedule = (
            model.schedule.build()
            if model.schedule is not None
            else TopologySchedule.static(model.graph.build())
        )
        params = RepcParams(
            epsilon=model.epsilon,
            f=model.f,
            include_self_in_discrepancy=model.include_self_in_discrepancy,
            fresh_reputation_in_update=model.fresh_reputation_in_update,
            include_self_in_update=model.include_self_in_update,
        )
        scheduler = Scheduler(
            kind=model.scheduler.kind,
            min_active=model.scheduler.min_active,
            edge_prob=model.scheduler.edge_prob,
        )
        attack = model.attack.build()
    except ArgumentError as exc:
        raise ConfigError(str(exc)) from exc

    config = SimConfig(
        schedule=schedule,
        x0=tuple(model.x0),
        params=params,
        attack=attack,
        scheduler=scheduler,
        algorithm=model.algorithm,
        trim=TrimParams(model.f_trim),
        delta=model.delta,
        round_cap=model.round_cap,
        stop_patience=model.stop_patience,
        detection=DetectionParams(model.detection.horizon, model.detection.state_tol),
        seed=defaults.SEED if model.seed is None else model.seed,
        seed_defaulted=model.seed is None,
        out_dir=Path(model.outputs.dir) if model.outputs.dir else None,
        name=model.name,
    )
    return config.validate()
