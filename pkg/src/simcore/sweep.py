"""
Sweep

Runs a base experiment over a grid of parameter overrides, several independent repeats per cell, and aggregates the metrics per cell. Every run gets a seed derived from `(seed, cell, repeat)`, so tables do not depend on execution order.

Classes:
    SweepTable: Per-run rows and per-cell aggregates.

Functions:
    apply_override: Replace one dotted-path field of a config.
    apply_overrides: Replace several dotted-path fields of a config.
    expand_grid: Turn a grid document into a list of override cells.
    sweep: Run the grid and aggregate.
"""

# External Libraries
import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, fields, is_dataclass, replace
from typing import Any

import numpy as np
import pandas as pd

# Local Libraries
from src.utilities.common import can_cast_to_int, derive_seed
from src.utilities.errors import ConfigError, RepcError

from .config import SimConfig
from .metrics import compute_metrics
from .runner import run
from .trace import RunResult

logger = logging.getLogger(__name__)

### --- CONSTANTS --- ###
AGGREGATED = ["consensus_error", "consensus_error_raw", "false_positives", "false_negatives", "agreement_spread"]


### --- CLASSES --- ###
@dataclass(frozen=True)
class SweepTable:
    """
    Sweep output.

    Attributes:
        runs (pd.DataFrame): One row per (cell, repeat) with its overrides, seed, metrics and error message.
        cells (pd.DataFrame): One row per cell with mean, std and standard error of each metric.
    """

    runs: pd.DataFrame
    cells: pd.DataFrame


### --- FUNCTIONS --- ###
def apply_override(obj: Any, path: str, value: Any) -> Any:
    """
    Return a copy of `obj` with the field at dotted `path` replaced by `value`, e.g. `"attack.strategies.0.mu"` or `"params.epsilon"`. Integer path segments index mappings and sequences.

    Raises:
        ConfigError: If the path does not name an existing field.
    """
    head, _, rest = path.partition(".")
    if is_dataclass(obj) and not isinstance(obj, type):
        if head not in {f.name for f in fields(obj)}:
            msg = f"Unknown override field {head!r} on {type(obj).__name__}"
            raise ConfigError(msg)
        current = getattr(obj, head)
        return replace(obj, **{head: apply_override(current, rest, value) if rest else value})
    if isinstance(obj, Mapping):
        key = int(head) if can_cast_to_int(head) else head
        if key not in obj:
            msg = f"Unknown override key {head!r}"
            raise ConfigError(msg)
        updated = dict(obj)
        updated[key] = apply_override(obj[key], rest, value) if rest else value
        return updated
    if isinstance(obj, tuple | list) and can_cast_to_int(head):
        items = list(obj)
        index = int(head)
        if not -len(items) <= index < len(items):
            msg = f"Override index {index} out of range"
            raise ConfigError(msg)
        items[index] = apply_override(items[index], rest, value) if rest else value
        return type(obj)(items)
    msg = f"Cannot apply override {path!r} to {type(obj).__name__}"
    raise ConfigError(msg)


def apply_overrides(config: SimConfig, overrides: Mapping[str, Any]) -> SimConfig:
    """Apply every dotted-path override in order."""
    for path, value in overrides.items():
        config = apply_override(config, path, value)
    return config


def expand_grid(doc: Mapping | Sequence) -> list[dict[str, Any]]:
    """
    Turn a grid document into override cells. Accepted shapes are `{"axes": {path: [values, ...]}}` (cartesian product, first axis varying slowest), `{"cells": [{path: value}, ...]}`, or a bare list of cells.

    Raises:
        ConfigError: If the grid is empty or malformed.
    """
    if isinstance(doc, Mapping) and "axes" in doc:
        axes = dict(doc["axes"])
        if not axes or any(len(values) == 0 for values in axes.values()):
            msg = "Grid axes must be nonempty"
            raise ConfigError(msg)
        cells = [dict(zip(axes, combo, strict=True)) for combo in itertools.product(*axes.values())]
    elif isinstance(doc, Mapping) and "cells" in doc:
        cells = [dict(cell) for cell in doc["cells"]]
    elif isinstance(doc, Sequence) and not isinstance(doc, str):
        cells = [dict(cell) for cell in doc]
    else:
        msg = "A grid needs an 'axes' or 'cells' entry"
        raise ConfigError(msg)
    if not cells:
        msg = "A sweep grid needs at least one cell"
        raise ConfigError(msg)
    return cells


def _reference_key(config: SimConfig, overrides: Mapping[str, Any]) -> tuple | None:
    # Randomized schedules make the reference depend on the run seed
    if config.scheduler.randomized:
        return None
    return tuple(sorted((k, repr(v)) for k, v in overrides.items() if not k.startswith("attack")))


def sweep(
    base_config: SimConfig,
    grid: Sequence[Mapping[str, Any]],
    repeats: int = 1,
    seed: int = 0,
) -> SweepTable:
    """
    Run `repeats` independent runs of every grid cell and aggregate the metrics per cell. Per-run failures are recorded in the `error` column instead of aborting the sweep.

    Args:
        base_config (SimConfig): The experiment every cell starts from.
        grid (Sequence[Mapping[str, Any]]): Dotted-path overrides per cell, nonempty.
        repeats (int): Runs per cell.
        seed (int): Root seed; run (cell, repeat) uses `derive_seed(seed, cell, repeat)`.

    Returns:
        SweepTable: Per-run rows and per-cell aggregates.
    """
    if not grid:
        msg = "A sweep grid needs at least one cell"
        raise ConfigError(msg)
    if repeats < 1:
        msg = f"repeats must be at least 1, got {repeats}"
        raise ConfigError(msg)

    references: dict[tuple, RunResult] = {}
    rows = []
    for cell, overrides in enumerate(grid):
        for repeat in range(repeats):
            run_seed = derive_seed(seed, cell, repeat)
            row: dict[str, Any] = {"cell": cell, "repeat": repeat, "seed": run_seed, **overrides}
            try:
                config = replace(apply_overrides(base_config, overrides), seed=run_seed)
                key = _reference_key(config, overrides)
                reference = references.get(key) if key is not None else None
                if reference is None:
                    reference = run(config.without_attack())
                    if key is not None:
                        references[key] = reference
                metrics = compute_metrics(run(config), reference, config.attack)
                row |= metrics.to_dict() | {"error": ""}
            except RepcError as exc:
                logger.warning("Sweep cell %d repeat %d failed: %s", cell, repeat, exc)
                row |= {name: np.nan for name in AGGREGATED} | {"error": str(exc)}
            rows.append(row)
        logger.info("Sweep cell %d/%d done", cell + 1, len(grid))

    runs = pd.DataFrame(rows)
    return SweepTable(runs=runs, cells=_aggregate(runs, grid))


def _aggregate(runs: pd.DataFrame, grid: Sequence[Mapping[str, Any]]) -> pd.DataFrame:
    grouped = runs.groupby("cell", sort=True)
    stats = grouped[AGGREGATED].agg(["mean", "std", "count"])
    stats.columns = [f"{metric}_{stat}" for metric, stat in stats.columns]
    for metric in AGGREGATED:
        count = stats[f"{metric}_count"].clip(lower=1)
        stats[f"{metric}_stderr"] = stats[f"{metric}_std"].fillna(0.0) / np.sqrt(count)
    stats["failed"] = grouped["error"].apply(lambda errors: int((errors != "").sum()))
    labels = pd.DataFrame([dict(cell) for cell in grid], index=pd.RangeIndex(len(grid), name="cell"))
    return labels.join(stats).reset_index()
