"""Command-line harness.

Commands:

    forager run --config FILE [--seed N] --out FILE
    forager preset NAME [--seed N] [--scripted] --out FILE
    forager sweep --spec FILE --out FILE [--workers N]
    forager plotdata --trace FILE --out-dir DIR
    forager validate --config FILE

Exit codes: 0 success, 2 configuration error, 3 schedule violation at
run time, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, parse_config
from .engine import run
from .environment import ScheduleError
from .presets import PRESET_NAMES, PresetError, run_preset
from .sweep import parse_sweep_spec, run_sweep, sweep_to_csv
from .traceio import atomic_write_text, read_trace, trace_to_csv, write_plotdata, \
    write_trace

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SCHEDULE = 3
EXIT_IO = 4


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from exc


class _IOFailure(RuntimeError):
    pass


def _cmd_run(args) -> int:
    config = parse_config(_read_text(args.config))
    if args.seed is not None:
        config = config.with_seed(args.seed)
        config.validate()
    trace = run(config)
    write_trace(trace, args.out)
    print(f"wrote {len(trace)} iterations to {args.out}")
    return EXIT_OK


def _cmd_preset(args) -> int:
    result = run_preset(args.name, seed=args.seed, scripted=args.scripted)
    write_trace(result.trace, args.out)
    print(json.dumps(result.summary, indent=2))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spec = parse_sweep_spec(_read_text(args.spec))
    result = run_sweep(spec, workers=args.workers)
    atomic_write_text(args.out, sweep_to_csv(result))
    n_data = sum(1 for row in result["rows"] if row[1] != "mean")
    print(f"wrote {n_data} runs ({len(result['rows'])} rows) to {args.out}")
    return EXIT_OK


def _cmd_plotdata(args) -> int:
    try:
        trace = read_trace(args.trace)
    except OSError as exc:
        raise _IOFailure(f"cannot read {args.trace}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    paths = write_plotdata(trace, args.out_dir)
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    parse_config(_read_text(args.config))
    print(f"{args.config}: OK")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forager",
        description="Deterministic two-drive foraging animat simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one configuration file")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--seed", type=int, default=None,
                       help="override the seed in the config file")
    p_run.add_argument("--out", required=True, help="trace CSV destination")
    p_run.set_defaults(func=_cmd_run)

    p_preset = sub.add_parser("preset", help="run a canonical scenario")
    p_preset.add_argument("name", choices=PRESET_NAMES)
    p_preset.add_argument("--seed", type=int, default=None)
    p_preset.add_argument("--scripted", action="store_true",
                          help="use the fixed-schedule twin of the preset")
    p_preset.add_argument("--out", required=True, help="trace CSV destination")
    p_preset.set_defaults(func=_cmd_preset)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep")
    p_sweep.add_argument("--spec", required=True)
    p_sweep.add_argument("--out", required=True, help="summary CSV destination")
    p_sweep.add_argument("--workers", type=int, default=None)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_plot = sub.add_parser("plotdata", help="emit plot-ready files for a trace")
    p_plot.add_argument("--trace", required=True)
    p_plot.add_argument("--out-dir", required=True)
    p_plot.set_defaults(func=_cmd_plotdata)

    p_val = sub.add_parser("validate", help="check a configuration file")
    p_val.add_argument("--config", required=True)
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, PresetError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ScheduleError as exc:
        print(f"schedule violation: {exc}", file=sys.stderr)
        return EXIT_SCHEDULE
    except _IOFailure as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
