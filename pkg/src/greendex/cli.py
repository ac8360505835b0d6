"""Command-line interface: fetch, analyze, sensitivity.

Exit codes: 0 success, 1 usage or configuration error, 2 ingestion or
I/O error, 3 computation error. All commands are non-interactive.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .chart import render_chart
from .config import RunConfig, default_config, load_config
from .errors import (
    ConfigError,
    ConstantColumnError,
    DecodeError,
    DegenerateInputError,
    DegenerateMatrixError,
    EmptySelectionError,
    FormatError,
    MissingDataError,
    MissingDatasetError,
    NetworkError,
    UpstreamError,
)
from .ingest import assemble_matrix, parse_fixture_csv, serialize_fixture_csv
from .ingest.client import Transport
from .measure import run_pipeline
from .model import ObservationMatrix, apply_missing_policy
from .report import FORMATS, render_analysis, render_leave_one_out, render_perturbation
from .robustness import leave_one_out, perturb

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INGEST = 2
EXIT_COMPUTE = 3

_INGEST_ERRORS = (FormatError, EmptySelectionError, MissingDatasetError,
                  NetworkError, UpstreamError, DecodeError)
_COMPUTE_ERRORS = (MissingDataError, DegenerateMatrixError,
                   DegenerateInputError, ConstantColumnError)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="greendex",
                     description="Synthetic development measures from "
                                 "multi-indicator country data")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--config", type=Path, default=None,
                       help="TOML run configuration (default: built-in EU-28/2019)")
        p.add_argument("--format", choices=FORMATS, default="md",
                       help="output format (default: md)")
        p.add_argument("--output", type=Path, default=None,
                       help="write to this file instead of stdout")

    p_fetch = sub.add_parser("fetch", help="assemble the matrix and write it as CSV")
    common(p_fetch)

    p_analyze = sub.add_parser("analyze", help="run the full analysis")
    common(p_analyze)
    p_analyze.add_argument("--input", type=Path, default=None,
                           help="analyze this fixture CSV instead of the "
                                "configured source")
    p_analyze.add_argument("--chart", type=Path, default=None,
                           help="also write an SVG bar chart here")

    p_sens = sub.add_parser("sensitivity", help="rank-stability diagnostics")
    common(p_sens)
    p_sens.add_argument("--mode", choices=("loo", "perturb"), default="loo")
    p_sens.add_argument("--noise", type=float, default=0.01,
                        help="relative perturbation amplitude (default: 0.01)")
    p_sens.add_argument("--trials", type=int, default=100)
    p_sens.add_argument("--seed", type=int, default=0)
    p_sens.add_argument("--workers", type=int, default=1,
                        help="thread count for perturbation trials "
                             "(results are identical for any value)")
    return parser


def _load(args, env) -> RunConfig:
    if args.config is not None:
        return load_config(args.config, env=env)
    return default_config()


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_bytes(text.encode("utf-8"))


def _source_matrix(config: RunConfig, transport) -> ObservationMatrix:
    return assemble_matrix(config.indicators, config.year, config.geos,
                           config.source, transport=transport)


def _cmd_fetch(args, config: RunConfig, transport) -> int:
    if args.output is None:
        raise ConfigError("fetch requires --output")
    matrix = _source_matrix(config, transport)
    args.output.write_bytes(serialize_fixture_csv(matrix))
    missing = len(matrix.missing_cells())
    print(f"wrote {args.output}: {matrix.n_units} units x "
          f"{matrix.n_indicators} indicators, {missing} missing cells")
    return EXIT_OK


def _cmd_analyze(args, config: RunConfig, transport) -> int:
    if args.input is not None:
        matrix = parse_fixture_csv(args.input.read_bytes(),
                                   specs=config.indicators, year=config.year)
    else:
        matrix = _source_matrix(config, transport)
    result = run_pipeline(matrix, config.settings())
    _emit(render_analysis(result, args.format, config.name, config.year),
          args.output)
    if args.chart is not None:
        args.chart.write_bytes(
            render_chart(result, f"{config.name} ({config.year})").encode("utf-8"))
    return EXIT_OK


def _cmd_sensitivity(args, config: RunConfig, transport) -> int:
    matrix = _source_matrix(config, transport)
    settings = config.settings()
    if args.mode == "loo":
        report = leave_one_out(matrix, settings)
        text = render_leave_one_out(report, args.format, config.name, config.year)
    else:
        complete = apply_missing_policy(matrix, settings.missing)
        result = perturb(complete, noise=args.noise, trials=args.trials,
                         seed=args.seed, settings=settings, workers=args.workers)
        text = render_perturbation(result, args.format, config.name, config.year)
    _emit(text, args.output)
    return EXIT_OK


def run(argv=None, transport: Transport | None = None, env=None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # raised by --help and by _Parser.error
        return int(exit_.code or 0)

    try:
        config = _load(args, env)
        if args.command == "fetch":
            return _cmd_fetch(args, config, transport)
        if args.command == "analyze":
            return _cmd_analyze(args, config, transport)
        return _cmd_sensitivity(args, config, transport)
    except ConfigError as err:
        print(f"greendex: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except _COMPUTE_ERRORS as err:
        print(f"greendex: error: {err}", file=sys.stderr)
        return EXIT_COMPUTE
    except (*_INGEST_ERRORS, OSError) as err:
        print(f"greendex: error: {err}", file=sys.stderr)
        return EXIT_INGEST


def main() -> None:
    sys.exit(run())
