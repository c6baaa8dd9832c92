# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Command-line interface for higgs-betti.

Exit codes: 0 on success, 1 on usage or input errors, 2 when the ring and
Morse sides disagree, the restriction maps fail to be surjective, or a
verified cache entry differs from recomputation.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
import sys
from typing import TYPE_CHECKING, NoReturn

from cohomology.types import CommandName, CommandOutcome, ExitCode, OutputFormat, Side
from commands import command_handlers
from commands.cache import cache_get, cache_key, cache_put
from commands.common import message_for_error
from config import CACHE_VERSION, RunConfig, env_cache_dir, env_no_cache, log_level_for


if TYPE_CHECKING:
    from collections.abc import Sequence


logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code on bad flags."""

    def error(self, message: str) -> NoReturn:
        """Print usage and exit with the usage exit code."""
        self.print_usage(sys.stderr)
        self.exit(ExitCode.usage, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    """Parser with one subcommand per command and shared output/cache flags."""
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", dest="output_format", type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.table)
    shared.add_argument("--cache-dir", type=Path, default=None, help="defaults to $HIGGS_BETTI_CACHE_DIR")
    shared.add_argument("--no-cache", action="store_true", help="bypass the result cache")
    shared.add_argument("--verify-cache", action="store_true", help="recompute cache hits and exit 2 on any difference")
    shared.add_argument("--verbose", "-v", action="count", default=0)

    parser = CliParser(prog="higgs-betti", description="Exact Betti numbers of rank-2 Higgs bundle moduli spaces.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    betti = sub.add_parser(CommandName.betti, parents=[shared], help="ring-side and Morse-side Poincaré series")
    betti.add_argument("--g", type=int, required=True)
    betti.add_argument("--n", type=int, default=0)
    betti.add_argument("--d", type=int, default=1)
    betti.add_argument("--side", type=Side, choices=list(Side), default=Side.both)
    betti.add_argument("--maxdeg", type=int, default=None, help="truncate both sides to this degree")

    strata = sub.add_parser(CommandName.strata, parents=[shared], help="Harder-Narasimhan types and codimensions")
    strata.add_argument("--g", type=int, required=True)
    strata.add_argument("--n", type=int, default=0)
    strata.add_argument("--r", type=int, default=2)
    strata.add_argument("--d", type=int, default=1)
    strata.add_argument("--max", dest="max_top_degree", type=int, default=3, help="largest d_1 to enumerate")

    stabilize = sub.add_parser(CommandName.stabilize, parents=[shared], help="Betti numbers as n grows")
    stabilize.add_argument("--g", type=int, required=True)
    stabilize.add_argument("--d", type=int, default=1)
    stabilize.add_argument("--maxn", type=int, default=6)
    stabilize.add_argument("--deg", dest="through_degree", type=int, default=6)

    dims = sub.add_parser(CommandName.dims, parents=[shared], help="dimensions of H_n and M_n")
    dims.add_argument("--r", type=int, default=2)
    dims.add_argument("--g", type=int, required=True)
    dims.add_argument("--n", type=int, default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Fold parsed flags and environment defaults into a RunConfig."""
    options = {
        key: value
        for key, value in vars(args).items()
        if key not in {"command", "cache_dir", "no_cache", "verbose"} and value is not None
    }
    return RunConfig(
        command=CommandName(args.command),
        cache_dir=args.cache_dir or env_cache_dir(),
        use_cache=not (args.no_cache or env_no_cache()),
        verbosity=args.verbose,
        **options,
    )


def run_command(config: RunConfig) -> CommandOutcome:
    """Dispatch to the command handler through the result cache."""
    handler = command_handlers[config.command]
    if not config.use_cache:
        return handler(config)
    key = cache_key(config.command.value, config.cache_params(), CACHE_VERSION)
    cached = cache_get(config.cache_dir, key)
    if cached is not None and not config.verify_cache:
        return cached
    outcome = handler(config)
    if cached is not None:
        if cached != outcome:
            logger.error("cache entry %s differs from recomputation", key[:12])
            return CommandOutcome(output=outcome.output, exit_code=ExitCode.mismatch)
        return outcome
    try:
        cache_put(config.cache_dir, key, outcome)
    except OSError as exc:
        logger.warning("could not write cache entry: %s", exc)
    return outcome


def main(argv: Sequence[str] | None = None) -> int:
    """Parse flags, run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(log_level_for(args.verbose))
    try:
        outcome = run_command(config_from_args(args))
    except (ValueError, ArithmeticError, NotImplementedError) as exc:
        print(f"error: {message_for_error(exc)}", file=sys.stderr)
        return ExitCode.usage
    print(outcome.output)
    return outcome.exit_code
