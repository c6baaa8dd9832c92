# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Relation ideals I^{g'}_{k'} and the ring-side Poincaré series.

The ideal is generated by γ^{g'+1} and the admissible ρ^c_{r,s,t}. Its
quotient is handled one graded slice at a time: the slice dimension is the
number of monomials minus the rank of the ideal's spanning set there.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
import logging
from math import factorial
from typing import TYPE_CHECKING, Annotated

from pydantic import Field
from pydantic.dataclasses import dataclass

from cohomology.algebra import (
    ALPHA_DEGREE,
    BETA_DEGREE,
    GAMMA_DEGREE,
    PSI_DEGREE,
    EvenMonomial,
    RingElement,
    even_mul,
    graded_slice_rank,
    monomials_of_degree,
    primitive_dim,
)
from cohomology.guards import ensure_genus, ensure_non_negative
from cohomology.series import (
    PoincareSeries,
    polynomial,
    require_betti,
    series_mul,
    series_pow,
    series_scale,
    series_shift,
    series_sum,
    to_polynomial,
)


if TYPE_CHECKING:
    from collections.abc import Iterator


logger = logging.getLogger(__name__)

# Degrees past 6g-6 computed to certify that the ring vanishes there.
VANISHING_MARGIN = 6


class InadmissibleTripleError(ValueError):
    """(r, s, t) violates one of the inequalities defining the generators."""


@dataclass(frozen=True)
class IdealSpec:
    """Parameters (g', k') of the ideal I^{g'}_{k'} in Q[α, β, γ]."""

    genus: Annotated[int, Field(ge=0)]
    summand: Annotated[int, Field(ge=0)]

    def weight(self, r: int, s: int, t: int) -> int:
        """c = r + 3s + 2t - 2g' + 2 - k'."""
        return r + 3 * s + 2 * t - 2 * self.genus + 2 - self.summand

    def admissibility_error(self, r: int, s: int, t: int) -> str | None:
        """Name the violated inequality, or ``None`` when (r, s, t) is admissible."""
        lhs, rhs = r + 3 * s + 3 * t, 3 * self.genus - 3 + self.summand
        if lhs <= rhs:
            return f"r+3s+3t = {lhs} must exceed 3g'-3+k' = {rhs}"
        lhs, rhs = r + 2 * s + 2 * t, 2 * self.genus - 2 + self.summand
        if lhs < rhs:
            return f"r+2s+2t = {lhs} must be >= 2g'-2+k' = {rhs}"
        return None


def triple_degree(r: int, s: int, t: int) -> int:
    """Degree of α^r β^s γ^t."""
    return ALPHA_DEGREE * r + BETA_DEGREE * s + GAMMA_DEGREE * t


@cache
def rho(spec: IdealSpec, r: int, s: int, t: int) -> RingElement:
    """ρ^c_{r,s,t} = Σ_i (c-i)! α^{r-i}/(r-i)! β^{s-i}/(s-i)! (2γ)^{t+i}/i!."""
    for name, value in (("r", r), ("s", s), ("t", t)):
        ensure_non_negative(name, value)
    violation = spec.admissibility_error(r, s, t)
    if violation is not None:
        message = f"({r}, {s}, {t}) is inadmissible for I^{spec.genus}_{spec.summand}: {violation}"
        raise InadmissibleTripleError(message)
    c = spec.weight(r, s, t)
    assert c >= s, f"weight {c} below s={s} for an admissible triple"
    element = RingElement.from_terms(
        (
            EvenMonomial(r - i, s - i, t + i),
            Fraction(factorial(c - i) * 2 ** (t + i), factorial(r - i) * factorial(s - i) * factorial(i)),
        )
        for i in range(min(c, r, s) + 1)
    )
    degree = element.degree
    assert degree in (None, triple_degree(r, s, t)), f"rho({r},{s},{t}) has degree {degree}"
    return element


def admissible_triples(spec: IdealSpec, max_degree: int) -> Iterator[tuple[int, int, int]]:
    """Admissible (r, s, t) with 2r + 4s + 6t <= max_degree."""
    for t in range(max_degree // GAMMA_DEGREE + 1):
        for s in range((max_degree - GAMMA_DEGREE * t) // BETA_DEGREE + 1):
            for r in range((max_degree - GAMMA_DEGREE * t - BETA_DEGREE * s) // ALPHA_DEGREE + 1):
                if spec.admissibility_error(r, s, t) is None:
                    yield r, s, t


def ideal_generators(spec: IdealSpec, max_degree: int) -> list[RingElement]:
    """γ^{g'+1} and every admissible ρ of degree at most ``max_degree``."""
    generators = [rho(spec, r, s, t) for r, s, t in admissible_triples(spec, max_degree)]
    if GAMMA_DEGREE * (spec.genus + 1) <= max_degree:
        generators.append(RingElement.monomial(c=spec.genus + 1))
    return generators


def ideal_basis_in_degree(spec: IdealSpec, d: int) -> list[RingElement]:
    """Spanning set of the degree-``d`` slice of the ideal: monomial multiples of generators."""
    ensure_non_negative("d", d)
    basis: list[RingElement] = []
    for generator in ideal_generators(spec, d):
        cofactor_degree = d - (generator.degree or 0)
        basis.extend(
            even_mul(RingElement.from_terms([(mono, 1)]), generator) for mono in monomials_of_degree(cofactor_degree)
        )
    return basis


@cache
def quotient_slice_dim(spec: IdealSpec, d: int) -> int:
    """Dimension of the degree-``d`` slice of Q[α, β, γ]/I."""
    monomials = monomials_of_degree(d)
    if not monomials:
        return 0
    rank = graded_slice_rank(ideal_basis_in_degree(spec, d), d)
    return len(monomials) - rank


def quotient_hilbert(spec: IdealSpec, maxdeg: int) -> PoincareSeries:
    """Hilbert series of Q[α, β, γ]/I^{g'}_{k'}, exact through ``maxdeg``."""
    ensure_non_negative("maxdeg", maxdeg)
    coeffs = tuple(quotient_slice_dim(spec, d) for d in range(maxdeg + 1))
    return PoincareSeries(coeffs, exact_through=maxdeg)


def top_degree(g: int) -> int:
    """Real dimension bound 6g-6 above which the Σ-invariant ring vanishes."""
    return 6 * g - 6


def dd_rhs_series(g: int, maxdeg: int | None = None) -> PoincareSeries:
    """Σ_k t^{3k} dim Λ^k_0 · Hilbert(Q[α, β, γ]/I^{g-k}_k).

    Without ``maxdeg`` the sum is computed a few degrees past 6g-6, checked to
    vanish there, and returned as an exact polynomial.
    """
    ensure_genus(g)
    bound = top_degree(g) + VANISHING_MARGIN if maxdeg is None else ensure_non_negative("maxdeg", maxdeg)
    terms = []
    for k in range(g + 1):
        shift = PSI_DEGREE * k
        if shift > bound:
            continue
        hilbert = quotient_hilbert(IdealSpec(g - k, k), bound - shift)
        terms.append(series_shift(series_scale(hilbert, primitive_dim(g, k)), shift))
    total = require_betti(series_sum(terms), f"ring side g={g}")
    if maxdeg is not None:
        return total
    logger.debug("checking ring side for g=%d vanishes in degrees %d..%d", g, top_degree(g) + 1, bound)
    return to_polynomial(total, top_degree(g))


def full_h_series(g: int, maxdeg: int | None = None) -> PoincareSeries:
    """(1+t)^{2g} times the Σ-invariant ring series: Poincaré series of H_0."""
    ensure_genus(g)
    return series_mul(series_pow(polynomial(1, 1), 2 * g), dd_rhs_series(g, maxdeg))
