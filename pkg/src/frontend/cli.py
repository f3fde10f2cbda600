"""
Command-Line Interface

Entry point of the `repc` command.

Usage:
    repc run <config.json> [--out DIR] [--no-plot]
    repc preset <name> [--out DIR] [--seed N] [--desk-scale | --full-grid]
    repc sweep <config.json> <grid.json> [--out DIR] [--repeats N] [--seed N]

Exit codes: 0 success, 1 validation error, 2 runtime error.

Functions:
    build_parser: Build the argument parser.
    main: Parse arguments, dispatch, and map failures to exit codes.
"""

# External Libraries
import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv

# Local Libraries
from src.constants import defaults
from src.constants.sources import OUT_DIR_ENV, SWEEP_FILE, SWEEP_RUNS_FILE, resolve_out_dir
from src.simcore.sweep import expand_grid, sweep
from src.utilities.errors import ConfigError
from src.utilities.logs import configure_logging

from .config import load_json, parse_config
from .presets import PRESET_NAMES, run_preset, run_single

logger = logging.getLogger(__name__)

### --- CONSTANTS --- ###
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


### --- FUNCTIONS --- ###
def build_parser() -> argparse.ArgumentParser:
    """Build the `repc` argument parser."""
    parser = argparse.ArgumentParser(
        prog="repc",
        description="Reputation-based resilient consensus simulator.",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="Logging level (default: $REPC_LOG_LEVEL or INFO).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run_cmd = commands.add_parser("run", help="Run one experiment from a JSON config.")
    run_cmd.add_argument("config", type=Path)
    run_cmd.add_argument("--out", type=Path, default=None, help=f"Output directory (default: ${OUT_DIR_ENV}).")
    run_cmd.add_argument("--no-plot", action="store_true", help="Skip the SVG plot.")

    preset_cmd = commands.add_parser("preset", help=f"Run a bundled scenario: {', '.join(PRESET_NAMES)}.")
    preset_cmd.add_argument("name")
    preset_cmd.add_argument("--out", type=Path, default=None)
    preset_cmd.add_argument("--seed", type=int, default=None)
    scale = preset_cmd.add_mutually_exclusive_group()
    scale.add_argument("--desk-scale", action="store_true", help="Reduced sweep grid (default).")
    scale.add_argument("--full-grid", action="store_true", help="Full sweep grid; slow.")

    sweep_cmd = commands.add_parser("sweep", help="Sweep a config over a grid of overrides.")
    sweep_cmd.add_argument("config", type=Path)
    sweep_cmd.add_argument("grid", type=Path)
    sweep_cmd.add_argument("--out", type=Path, default=None)
    sweep_cmd.add_argument("--repeats", type=int, default=defaults.SWEEP_REPEATS)
    sweep_cmd.add_argument("--seed", type=int, default=None)
    return parser


def _run(args: argparse.Namespace) -> int:
    config = parse_config(load_json(args.config))
    out_dir = resolve_out_dir(args.out or config.out_dir) / config.name
    if config.seed_defaulted:
        logger.info("No seed given; using the default seed %d", config.seed)
    run_single(config, out_dir, plot=not args.no_plot)
    return EXIT_OK


def _sweep(args: argparse.Namespace) -> int:
    config = parse_config(load_json(args.config))
    grid = expand_grid(load_json(args.grid))
    if args.repeats < 1:
        msg = f"--repeats must be at least 1, got {args.repeats}"
        raise ConfigError(msg)
    seed = config.seed if args.seed is None else args.seed
    table = sweep(config, grid, repeats=args.repeats, seed=seed)

    out_dir = resolve_out_dir(args.out or config.out_dir) / config.name
    out_dir.mkdir(parents=True, exist_ok=True)
    table.cells.to_csv(out_dir / SWEEP_FILE, index=False, float_format="%.17g", lineterminator="\n")
    table.runs.to_csv(out_dir / SWEEP_RUNS_FILE, index=False, float_format="%.17g", lineterminator="\n")
    print(table.cells.to_string(index=False))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the `repc` command.

    Args:
        argv (Sequence[str], optional): Arguments without the program name; defaults to `sys.argv[1:]`.

    Returns:
        int: 0 on success, 1 on validation errors (bad config, unknown preset, bad usage), 2 on runtime errors.
    """
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_VALIDATION

    configure_logging(args.log_level)
    try:
        match args.command:
            case "run":
                return _run(args)
            case "preset":
                if args.name not in PRESET_NAMES:
                    parser.print_usage(sys.stderr)
                    print(f"error: unknown preset {args.name!r}; choose one of: {', '.join(PRESET_NAMES)}", file=sys.stderr)
                    return EXIT_VALIDATION
                return run_preset(
                    args.name,
                    out_dir=args.out,
                    seed=args.seed,
                    desk_scale=not args.full_grid,
                    full_grid=args.full_grid,
                )
            case "sweep":
                return _sweep(args)
    except ConfigError as exc:
        for message in exc.errors:
            print(f"error: {message}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001
        logger.exception("Run failed")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
