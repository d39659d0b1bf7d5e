"""
Tropical Rating - Main Entry Point
==================================

Rates alternatives from a pairwise comparison matrix:
every log-Chebyshev optimal score vector, plus the least and most
differentiating ones.

Usage:
    python main.py rate samples/four_alternatives.csv
    python main.py rate samples/four_alternatives.json --out json
    python main.py rate matrix.csv --arith float --cap 1000 --labels a,b,c,d
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from rating.comparison import validate
from rating.report import rate
from tropical.errors import LimitExceededError, TropicalError
from tropical.scalars import Arithmetic
from tropical.solvers import DEFAULT_SELECTION_CAP
from utils.logger import get_logger, set_level
from utils.matrix_io import parse_matrix_csv, parse_matrix_json, render_json, render_text

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_LIMIT = 2

INPUT_FORMATS = ("csv", "json", "auto")
OUTPUT_FORMATS = ("text", "json")

logger = get_logger("main")


@dataclass
class CliConfig:
    """Settings for one `rate` run"""
    input_path: str
    input_format: str = "auto"               # csv | json | auto (by extension)
    arithmetic: Arithmetic = Arithmetic.RATIONAL
    output_format: str = "text"              # text | json
    selection_cap: int = DEFAULT_SELECTION_CAP
    auto_symmetrize: bool = False
    labels: Optional[List[str]] = None
    verbosity: int = logging.INFO

    def __post_init__(self):
        if self.input_format not in INPUT_FORMATS:
            raise ValueError(f"input_format must be one of {INPUT_FORMATS}, got {self.input_format!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.selection_cap < 1:
            raise ValueError(f"selection_cap must be >= 1, got {self.selection_cap}")
        self.arithmetic = Arithmetic(self.arithmetic)

    def resolved_format(self) -> str:
        """csv or json; auto looks at the file extension (.json, else csv)"""
        if self.input_format != "auto":
            return self.input_format
        ext = os.path.splitext(self.input_path)[1].lower()
        return "json" if ext == ".json" else "csv"


def run(config: CliConfig, out: TextIO = None, err: TextIO = None) -> int:
    """
    Execute one rating run

    Args:
        config: CLI settings
        out: stream for the report (default stdout)
        err: stream for error messages (default stderr)

    Returns:
        Exit code: 0 success, 1 invalid input, 2 limit hit (report still
        printed when the selection cap truncated the search)
    """
    out = out or sys.stdout
    err = err or sys.stderr
    set_level(config.verbosity)

    try:
        with open(config.input_path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        print(f"❌ Cannot read {config.input_path}: {e.strerror or e}", file=err)
        return EXIT_INVALID
    except UnicodeDecodeError as e:
        print(f"❌ Cannot read {config.input_path}: not UTF-8 text (byte {e.start})", file=err)
        return EXIT_INVALID

    try:
        fmt = config.resolved_format()
        logger.debug(f"reading {config.input_path} as {fmt} ({config.arithmetic.value})")
        if fmt == "json":
            raw, labels = parse_matrix_json(text, config.arithmetic)
        else:
            raw, labels = parse_matrix_csv(text, config.arithmetic), None
        if config.labels is not None:
            labels = config.labels
        comparison = validate(raw, labels, auto_symmetrize=config.auto_symmetrize)
        report = rate(comparison, config.selection_cap)
    except LimitExceededError as e:
        print(f"❌ Limit exceeded: {e}", file=err)
        return EXIT_LIMIT
    except TropicalError as e:
        print(f"❌ Invalid input: {e}", file=err)
        return EXIT_INVALID

    rendered = render_json(report) if config.output_format == "json" else render_text(report)
    out.write(rendered)

    if report.truncated:
        print(f"⚠️ Selection cap {config.selection_cap} reached; families are incomplete", file=err)
        return EXIT_LIMIT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Tropical rating of alternatives from pairwise comparisons')
    commands = parser.add_subparsers(dest='command', required=True)

    rate_cmd = commands.add_parser('rate', help='Rate alternatives from a comparison matrix')
    rate_cmd.add_argument('input', help='CSV or JSON file with the comparison matrix')
    rate_cmd.add_argument('--format', choices=INPUT_FORMATS, default='auto', help='Input format')
    rate_cmd.add_argument('--arith', choices=[a.value for a in Arithmetic], default=Arithmetic.RATIONAL.value,
                          help='Scalar arithmetic')
    rate_cmd.add_argument('--out', choices=OUTPUT_FORMATS, default='text', help='Report format')
    rate_cmd.add_argument('--cap', type=int, default=DEFAULT_SELECTION_CAP, help='Max row selections enumerated')
    rate_cmd.add_argument('--auto-symmetrize', action='store_true',
                          help='Rebuild the lower triangle from the upper one')
    rate_cmd.add_argument('--labels', help='Comma-separated alternative names')
    noise = rate_cmd.add_mutually_exclusive_group()
    noise.add_argument('--verbose', action='store_true', help='Debug logging')
    noise.add_argument('--quiet', action='store_true', help='Warnings and errors only')
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    verbosity = logging.INFO
    if args.verbose:
        verbosity = logging.DEBUG
    elif args.quiet:
        verbosity = logging.WARNING
    labels = [x.strip() for x in args.labels.split(',')] if args.labels else None
    return CliConfig(
        input_path=args.input,
        input_format=args.format,
        arithmetic=Arithmetic(args.arith),
        output_format=args.out,
        selection_cap=args.cap,
        auto_symmetrize=args.auto_symmetrize,
        labels=labels,
        verbosity=verbosity,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as e:
        print(f"❌ Configuration Error: {e}", file=sys.stderr)
        return EXIT_INVALID
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
