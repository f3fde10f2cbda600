"""
Presets

Bundled experiments reproducing the standard attack scenarios: a reference run without attack, attackers close to the consensus, several attackers with different values, asynchronous, dynamic and stochastic networks, the trimmed-mean comparison, and the consensus-error sweep.

Functions:
    preset_config: Parse the config of a named preset.
    run_single: Run one attacked experiment with its reference and write its artifacts.
    run_baseline_comparison: Run RepC and the trimmed baseline side by side.
    run_error_sweep: Run the (mu, sigma) error sweep.
    run_preset: Run a preset by name and return an exit code.
"""

# External Libraries
import copy
import logging
from dataclasses import replace
from pathlib import Path

import numpy as np

# Local Libraries
from src.constants import defaults
from src.constants.scenarios import BASELINE_PRESETS, SCENARIOS, SWEEP_PRESETS
from src.constants.sources import SUMMARY_FILE, SWEEP_FILE, SWEEP_RUNS_FILE, resolve_out_dir
from src.simcore.config import SimConfig
from src.simcore.metrics import Metrics, compute_metrics
from src.simcore.runner import run
from src.simcore.sweep import SweepTable, sweep
from src.simcore.trace import RunResult

from .config import parse_config
from .emit import emit_metrics, emit_plot, emit_trace

logger = logging.getLogger(__name__)

### --- CONSTANTS --- ###
PRESET_NAMES = tuple(SCENARIOS)


### --- FUNCTIONS --- ###
def preset_config(name: str, seed: int | None = None) -> SimConfig:
    """
    Parse the config of a named preset, optionally overriding its seed.

    Raises:
        KeyError: If the preset does not exist.
    """
    document = copy.deepcopy(SCENARIOS[name])
    if seed is not None:
        document["seed"] = seed
    return parse_config(document)


def summarize(result: RunResult, reference: RunResult, metrics: Metrics) -> dict:
    """Summary of one attacked run for `summary.json` and the console."""
    return {
        "name": result.config.name,
        "algorithm": result.config.algorithm,
        "seed": result.config.seed,
        "seed_defaulted": result.config.seed_defaulted,
        "attacked": sorted(result.config.attack.attacked),
        "rounds_executed": result.rounds_executed,
        "stop_reason": str(result.stop_reason),
        "consensus_raw": result.consensus_raw,
        "reference_consensus_raw": reference.consensus_raw,
        "detected": {str(i): sorted(flags) for i, flags in result.detected.items()},
        "detection_low_confidence": result.detection_low_confidence,
        "metrics": metrics.to_dict(),
    }


def print_summary(summary: dict) -> None:
    """Print the headline numbers of a summary."""
    seed_note = " (default)" if summary["seed_defaulted"] else ""
    print(f"[{summary['name']}] algorithm={summary['algorithm']} seed={summary['seed']}{seed_note}")
    print(
        f"  rounds={summary['rounds_executed']} stop={summary['stop_reason']}"
        f" consensus={summary['consensus_raw']:.4f}"
        f" reference={summary['reference_consensus_raw']:.4f}"
    )
    metrics = summary["metrics"]
    print(
        f"  consensus_error={metrics['consensus_error']:.3e}"
        f" (raw {metrics['consensus_error_raw']:.3e})"
        f" spread={metrics['agreement_spread']:.3e}"
        f" false_positives={metrics['false_positives']}"
        f" false_negatives={metrics['false_negatives']}"
    )


def run_single(
    config: SimConfig,
    out_dir: Path,
    reference: RunResult | None = None,
    plot: bool = True,
) -> dict:
    """
    Run an experiment and its no-attack reference, then write the trace, plot and summary.

    Args:
        config (SimConfig): The attacked experiment.
        out_dir (Path): Directory for this experiment's artifacts.
        reference (RunResult, optional): Precomputed reference run.
        plot (bool): Whether to write the SVG plot.

    Returns:
        dict: The summary written to `summary.json`.
    """
    result = run(config)
    if reference is None:
        reference = run(config.without_attack())
    metrics = compute_metrics(result, reference, config.attack)

    emit_trace(result, out_dir)
    if plot:
        emit_plot(result, out_dir, reference=reference.consensus_raw)
    summary = summarize(result, reference, metrics)
    emit_metrics(summary, out_dir / SUMMARY_FILE)
    print_summary(summary)
    return summary


def run_baseline_comparison(config: SimConfig, out_dir: Path) -> dict:
    """
    Run RepC and the trimmed-mean baseline on the same attacked network. Both are scored against the RepC no-attack reference.
    """
    reference = run(config.without_attack())
    summaries = {
        algorithm: run_single(
            replace(config, algorithm=algorithm, name=f"{config.name}-{algorithm}"),
            out_dir / algorithm,
            reference=reference,
        )
        for algorithm in ("repc", "trimmed")
    }
    ratio = summaries["trimmed"]["metrics"]["consensus_error"] / max(
        summaries["repc"]["metrics"]["consensus_error"], np.finfo(float).tiny
    )
    print(f"  trimmed/repc consensus error ratio: {ratio:.3g}")
    return summaries


def sweep_grid(full_grid: bool = False) -> list[dict]:
    """
    The (mu, sigma) grid in raw units: the desk-scale 5 x 3 grid, or the full grid in steps of 0.005.
    """
    if full_grid:
        mus = np.round(np.arange(0.0, 1.0 + 1e-9, defaults.FULL_GRID_STEP), 3)
        sigmas = np.round(np.arange(0.1, 1.0 + 1e-9, defaults.FULL_GRID_STEP), 3)
    else:
        mus, sigmas = defaults.DESK_SCALE_MU, defaults.DESK_SCALE_SIGMA
    return [
        {"attack.strategies.0.mu": float(mu), "attack.strategies.0.sigma": float(sigma)}
        for mu in mus
        for sigma in sigmas
    ]


def run_error_sweep(
    config: SimConfig,
    out_dir: Path,
    full_grid: bool = False,
    repeats: int = defaults.SWEEP_REPEATS,
) -> SweepTable:
    """
    Run the consensus-error sweep of a Gaussian attacker over (mu, sigma) and write the per-cell and per-run tables.
    """
    grid = sweep_grid(full_grid)
    if full_grid:
        logger.warning(
            "Full grid requested: %d cells x %d repeats; this takes hours", len(grid), repeats
        )
    table = sweep(config, grid, repeats=repeats, seed=config.seed)
    out_dir.mkdir(parents=True, exist_ok=True)
    table.cells.to_csv(out_dir / SWEEP_FILE, index=False, float_format="%.17g", lineterminator="\n")
    table.runs.to_csv(out_dir / SWEEP_RUNS_FILE, index=False, float_format="%.17g", lineterminator="\n")

    print(f"[{config.name}] {len(grid)} cells x {repeats} repeats, seed={config.seed}")
    for _, row in table.cells.iterrows():
        print(
            f"  mu={row['attack.strategies.0.mu']:.3f} sigma={row['attack.strategies.0.sigma']:.3f}"
            f" error={row['consensus_error_mean']:.4f} +/- {row['consensus_error_stderr']:.4f}"
        )
    return table


def run_preset(
    name: str,
    out_dir: str | Path | None = None,
    seed: int | None = None,
    desk_scale: bool = True,
    full_grid: bool = False,
) -> int:
    """
    Run a preset by name and write its artifacts under `<out_dir>/<name>/`.

    Args:
        name (str): One of `PRESET_NAMES`.
        out_dir (str | Path, optional): Output root; defaults to `REPC_OUT` or `outputs/`.
        seed (int, optional): Seed override.
        desk_scale (bool): Use the reduced sweep grid (ignored by non-sweep presets).
        full_grid (bool): Use the full sweep grid; overrides `desk_scale`.

    Returns:
        int: 0 on success, 1 for an unknown preset.
    """
    if name not in SCENARIOS:
        logger.error("Unknown preset %r; choose one of: %s", name, ", ".join(PRESET_NAMES))
        return 1

    config = preset_config(name, seed)
    target = resolve_out_dir(out_dir) / name
    logger.info("Running preset %s into %s", name, target)
    if name in SWEEP_PRESETS:
        run_error_sweep(config, target, full_grid=full_grid or not desk_scale)
    elif name in BASELINE_PRESETS:
        run_baseline_comparison(config, target)
    else:
        run_single(config, target)
    return 0
