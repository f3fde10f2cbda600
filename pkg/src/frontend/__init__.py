"""
Frontend Package

This package contains the modules that are responsible for the project's user-facing surface: parsing experiment configs, running presets, writing traces, plots and summaries, and the `repc` command-line entry point.
"""

from .config import load_json, parse_config
from .emit import emit_metrics, emit_plot, emit_trace, plot_series, read_trace
from .presets import PRESET_NAMES, run_preset

__all__ = [
    "PRESET_NAMES",
    "emit_metrics",
    "emit_plot",
    "emit_trace",
    "load_json",
    "parse_config",
    "plot_series",
    "read_trace",
    "run_preset",
]
