# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Betti numbers of H_n from the ring presentation and from Morse theory."""

from __future__ import annotations

import logging
import time
from typing import TYPE_CHECKING

from cohomology.guards import ensure_genus, ensure_odd
from cohomology.ideal import full_h_series
from cohomology.morse import ModuliParams, higgs_poincare_morse
from cohomology.series import PoincareSeries, series_to_json
from cohomology.types import BettiResult, CommandOutcome, ExitCode, OutputFormat, Side
from commands.common import render_csv, render_json, render_series


if TYPE_CHECKING:
    from config import RunConfig


logger = logging.getLogger(__name__)


def ring_side(g: int, n: int, d: int, maxdeg: int | None = None) -> PoincareSeries:
    """Poincaré series of H_0 from generators and relations; only n = 0 has a presentation."""
    ensure_genus(g)
    ensure_odd("d", d)
    if n > 0:
        message = f"ring side needs n=0: no ring presentation of H_n is available for n={n} > 0"
        raise ValueError(message)
    return full_h_series(g, maxdeg)


def morse_side(g: int, n: int, d: int, maxdeg: int | None = None) -> PoincareSeries:
    """Morse-side series of H_n, cut at ``maxdeg`` when given."""
    series = higgs_poincare_morse(ModuliParams(g=g, n=n, d=d))
    if maxdeg is None:
        return series
    return PoincareSeries(series.coeffs, exact_through=maxdeg)


def compute_betti(config: RunConfig) -> tuple[BettiResult, PoincareSeries | None, PoincareSeries | None]:
    """Run the requested sides; ``side=both`` with n > 0 reports the Morse side alone."""
    started = time.perf_counter()
    want_ring = config.side is Side.ring or (config.side is Side.both and config.n == 0)
    want_morse = config.side in (Side.morse, Side.both)
    ring = ring_side(config.g, config.n, config.d, config.maxdeg) if want_ring else None
    morse = morse_side(config.g, config.n, config.d, config.maxdeg) if want_morse else None
    match = ring == morse if ring is not None and morse is not None else None
    logger.info("betti g=%d n=%d d=%d took %.3fs", config.g, config.n, config.d, time.perf_counter() - started)
    result = BettiResult(
        g=config.g,
        n=config.n,
        d=config.d,
        side=config.side,
        ring=series_to_json(ring) if ring is not None else None,
        morse=series_to_json(morse) if morse is not None else None,
        match=match,
    )
    return result, ring, morse


def cmd_betti(config: RunConfig) -> CommandOutcome:
    """Ring and Morse series side by side with a match verdict."""
    result, ring, morse = compute_betti(config)
    columns = {name: series for name, series in (("ring", ring), ("morse", morse)) if series is not None}
    match config.output_format:
        case OutputFormat.json:
            output = render_json(result)
        case OutputFormat.csv:
            top = max(s.degree if s.is_polynomial else s.exact_through or 0 for s in columns.values())
            rows = ([i, *(s.coefficient(i) for s in columns.values())] for i in range(top + 1))
            output = render_csv(["degree", *columns], rows)
        case OutputFormat.table:
            lines = [f"{name}: {render_series(series)}" for name, series in columns.items()]
            if result.match is not None:
                lines.append("MATCH" if result.match else "MISMATCH")
            output = "\n".join(lines)
    exit_code = ExitCode.mismatch if result.match is False else ExitCode.ok
    return CommandOutcome(output=output, exit_code=exit_code)
