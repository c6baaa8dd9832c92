# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Complex dimensions of H_n and of its fixed-determinant part."""

from __future__ import annotations

from typing import TYPE_CHECKING

from cohomology.shatz import moduli_dims
from cohomology.types import CommandOutcome, DimsResult, OutputFormat
from commands.common import render_csv, render_json, render_table


if TYPE_CHECKING:
    from config import RunConfig


def cmd_dims(config: RunConfig) -> CommandOutcome:
    """Complex dimensions of the full and fixed-determinant moduli spaces."""
    dims = moduli_dims(config.r, config.g, config.n)
    result = DimsResult(r=config.r, g=config.g, n=config.n, full=dims.full, fixed_det=dims.fixed_det)
    header = ("r", "g", "n", "full", "fixed_det")
    row = (result.r, result.g, result.n, result.full, result.fixed_det)
    match config.output_format:
        case OutputFormat.json:
            output = render_json(result)
        case OutputFormat.csv:
            output = render_csv(header, [row])
        case OutputFormat.table:
            output = render_table(header, [row])
    return CommandOutcome(output=output)
