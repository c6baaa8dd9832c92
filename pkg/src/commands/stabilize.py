# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Betti numbers of H_n as n grows, against the classifying space B𝒢̄."""

from __future__ import annotations

from itertools import pairwise
import logging
from typing import TYPE_CHECKING

from cohomology.morse import ModuliParams, classifying_space_poincare, higgs_poincare_morse
from cohomology.series import coeffwise_leq
from cohomology.types import CommandOutcome, ExitCode, OutputFormat, StabilizeResult
from commands.common import render_csv, render_json, render_table


if TYPE_CHECKING:
    from config import RunConfig


logger = logging.getLogger(__name__)

LIMIT_LABEL = "BG"


def compute_stabilize(config: RunConfig) -> StabilizeResult:
    """Coefficients through ``through_degree`` for n = 0..maxn, the limit row and per-degree flags.

    A degree counts as stabilized once the n = maxn row agrees with the limit there.
    """
    top = config.through_degree
    series = [higgs_poincare_morse(ModuliParams(g=config.g, n=n, d=config.d)) for n in range(config.maxn + 1)]
    limit = classifying_space_poincare(config.g, top)
    monotone = all(coeffwise_leq(lower, upper, top) for lower, upper in pairwise(series))
    if not monotone:
        logger.warning("restriction H_(n+1) -> H_n is not surjective on some degree through %d", top)
    rows = {str(n): [s.coefficient(i) for i in range(top + 1)] for n, s in enumerate(series)}
    limit_row = [limit.coefficient(i) for i in range(top + 1)]
    last = rows[str(config.maxn)]
    return StabilizeResult(
        g=config.g,
        d=config.d,
        through_degree=top,
        rows=rows,
        limit=limit_row,
        stabilized=[a == b for a, b in zip(last, limit_row, strict=True)],
        monotone=monotone,
    )


def cmd_stabilize(config: RunConfig) -> CommandOutcome:
    """Morse-side coefficients for n = 0..maxn against the classifying-space limit."""
    result = compute_stabilize(config)
    header = ["n", *(f"t^{i}" for i in range(result.through_degree + 1))]
    body = [[n, *coeffs] for n, coeffs in result.rows.items()]
    body.append([LIMIT_LABEL, *result.limit])
    match config.output_format:
        case OutputFormat.json:
            output = render_json(result)
        case OutputFormat.csv:
            output = render_csv(header, body)
        case OutputFormat.table:
            flags = ["stable", *("*" if flag else "" for flag in result.stabilized)]
            output = render_table(header, [*body, flags])
    exit_code = ExitCode.ok if result.monotone else ExitCode.mismatch
    return CommandOutcome(output=output, exit_code=exit_code)
