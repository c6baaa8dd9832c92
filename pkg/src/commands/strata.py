# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Harder-Narasimhan types with their polygons and stratum codimensions."""

from __future__ import annotations

from typing import TYPE_CHECKING

from cohomology.guards import ensure_genus, ensure_odd
from cohomology.shatz import HNType, bundle_stratum_codim, enum_hn_types, polygon, stratum_codim
from cohomology.types import CommandOutcome, OutputFormat, StrataRow
from commands.common import render_csv, render_json, render_table


if TYPE_CHECKING:
    from config import RunConfig


HEADER = ("type", "polygon", "chi_bound", "exact_codim", "bundle_codim")


def strata_row(mu: HNType, g: int, n: int) -> StrataRow:
    """One output row for the HN type ``mu``."""
    vertices = [list(vertex) for vertex in polygon(mu).vertices]
    parts = [list(part) for part in mu.parts]
    if mu.is_semistable:
        return StrataRow(hn_type=parts, polygon=vertices, semistable=True)
    codim = stratum_codim(mu, g, n)
    return StrataRow(
        hn_type=parts,
        polygon=vertices,
        semistable=False,
        chi_bound=codim.chi_bound,
        exact_codim=codim.exact,
        bundle_codim=bundle_stratum_codim(mu, g),
    )


def compute_strata(config: RunConfig) -> list[StrataRow]:
    """Rows for every HN type of rank r and degree d up to the requested bound."""
    ensure_genus(config.g)
    ensure_odd("d", config.d)
    types = enum_hn_types(config.r, config.d, config.max_top_degree)
    return [strata_row(mu, config.g, config.n) for mu in types]


def _cell(value: int | None) -> str:
    """Table cell text; ``-`` for a missing value."""
    return "-" if value is None else str(value)


def cmd_strata(config: RunConfig) -> CommandOutcome:
    """Table of HN types with polygons and stratum codimensions."""
    rows = compute_strata(config)
    flat = [
        (
            " ".join(f"({r},{d})" for r, d in row.hn_type),
            " ".join(f"({x},{y})" for x, y in row.polygon),
            _cell(row.chi_bound),
            _cell(row.exact_codim),
            _cell(row.bundle_codim),
        )
        for row in rows
    ]
    match config.output_format:
        case OutputFormat.json:
            output = render_json(rows, list[StrataRow])
        case OutputFormat.csv:
            output = render_csv(HEADER, flat)
        case OutputFormat.table:
            output = render_table(HEADER, flat)
    return CommandOutcome(output=output)
