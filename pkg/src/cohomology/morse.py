# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Morse-side assembly of the Poincaré series of H_n.

The circle action λ·(E, φ) = (E, λφ) has a perfect Bott-Morse moment map.
Its critical submanifolds are the stable-bundle moduli space (j = 0) and
products Jac × Sym^m C (j >= 1), so P_t(H_n) = Σ_j t^{index_j} P_t(F_n^j).
"""

from __future__ import annotations

from functools import cache
import logging
from math import comb
from typing import Annotated

from pydantic import Field
from pydantic.dataclasses import dataclass

from cohomology.guards import ensure_genus, ensure_non_negative, ensure_odd, ensure_positive_int, ensure_rank
from cohomology.series import (
    PoincareSeries,
    expand_rational,
    monomial,
    polynomial,
    series_div,
    series_mul,
    series_pow,
    series_shift,
    series_sub,
    series_sum,
    to_polynomial,
)
from cohomology.shatz import bundle_stratum_codim, enum_hn_types, negative_line_bundle_h1
from cohomology.types import StratumKind


logger = logging.getLogger(__name__)

# Degrees past the top one kept in the HN recursion before the vanishing check.
RECURSION_MARGIN = 4
GAUGE_DENOMINATOR = (2, 2, 4)


@dataclass(frozen=True)
class ModuliParams:
    """(g, n, d, r) for H_n = rank-r degree-d Higgs bundles with φ ∈ H^0(End E ⊗ K(n))."""

    g: Annotated[int, Field(ge=1)]
    n: Annotated[int, Field(ge=0)] = 0
    d: int = 1
    r: int = 2

    def __post_init__(self) -> None:
        ensure_odd("d", self.d)
        ensure_rank(self.r)
        ensure_positive_int("r", self.r, minimum=2)

    @property
    def max_stratum(self) -> int:
        """Upper index g + ⌊(n-1)/2⌋ of the critical submanifolds."""
        return self.g + (self.n - 1) // 2


@dataclass(frozen=True)
class CriticalStratum:
    """Critical submanifold F_n^j with its Morse index and Poincaré series."""

    j: Annotated[int, Field(ge=0)]
    kind: StratumKind
    factors: tuple[str, ...]
    complex_dim: int
    morse_index: int
    poincare: PoincareSeries


def jacobian_poincare(g: int) -> PoincareSeries:
    """(1+t)^{2g}."""
    ensure_non_negative("g", g)
    return series_pow(polynomial(1, 1), 2 * g)


def sym_poincare(g: int, k: int) -> PoincareSeries:
    """Poincaré polynomial of Sym^k C, the q^k coefficient of (1+qt)^{2g}/((1-q)(1-qt^2)).

    Taking i odd classes from H^1 and k - i points split between H^0 and H^2
    gives Σ_{i <= min(k, 2g)} C(2g, i) t^i Σ_{b <= k-i} t^{2b}.
    """
    ensure_non_negative("g", g)
    ensure_non_negative("k", k)
    coeffs = [0] * (2 * k + 1)
    for i in range(min(k, 2 * g) + 1):
        for b in range(k - i + 1):
            coeffs[i + 2 * b] += comb(2 * g, i)
    return PoincareSeries(tuple(coeffs))


def gauge_group_poincare(g: int, trunc_n: int) -> PoincareSeries:
    """P_t(B𝒢) = (1+t)^{2g}(1+t^3)^{2g} / ((1-t^2)^2 (1-t^4)) for rank 2."""
    ensure_genus(g)
    numerator = series_mul(jacobian_poincare(g), series_pow(polynomial(1, 0, 0, 1), 2 * g))
    return expand_rational(numerator, GAUGE_DENOMINATOR, trunc_n)


def classifying_space_poincare(g: int, trunc_n: int) -> PoincareSeries:
    """P_t(B𝒢̄) = (1 - t^2) P_t(B𝒢), the limit of H_n as n grows."""
    ensure_non_negative("trunc_n", trunc_n)
    return series_mul(polynomial(1, 0, -1), gauge_group_poincare(g, trunc_n))


@cache
def stable_bundles_poincare(g: int, d: int = 1) -> PoincareSeries:
    """Poincaré polynomial of the moduli of rank-2 degree-d stable bundles.

    Equivariantly perfect HN stratification: the semistable stratum gets
    P(B𝒢) minus t^{2 codim} ((1+t)^{2g}/(1-t^2))^2 over unstable types, and
    dividing out B U(1) multiplies by 1 - t^2.
    """
    ensure_genus(g)
    ensure_odd("d", d)
    top = 2 * (4 * g - 3)
    bound = top + RECURSION_MARGIN
    split_type = expand_rational(series_pow(polynomial(1, 1), 4 * g), (2, 2), bound)
    max_top_degree = (bound // 2 - g + 1 + d) // 2
    unstable = [
        series_shift(split_type, 2 * bundle_stratum_codim(mu, g))
        for mu in enum_hn_types(2, d, max_top_degree)
        if not mu.is_semistable
    ]
    logger.debug("HN recursion for g=%d d=%d uses %d unstable types", g, d, len(unstable))
    semistable = series_sub(gauge_group_poincare(g, bound), series_sum(unstable))
    return to_polynomial(series_mul(polynomial(1, 0, -1), semistable), top)


def stable_bundles_fixed_det_poincare(g: int, d: int = 1) -> PoincareSeries:
    """Fixed-determinant stable bundles: stable_bundles_poincare / (1+t)^{2g}."""
    full = stable_bundles_poincare(g, d)
    quotient = series_div(full, jacobian_poincare(g), full.degree)
    return to_polynomial(quotient, full.degree - 2 * g)


def morse_index(g: int, j: int) -> int:
    """Real index 2 h^1 of a line bundle of degree 1 - 2j: 0 for j = 0, else 2(g + 2j - 2)."""
    ensure_genus(g)
    ensure_non_negative("j", j)
    if j == 0:
        return 0
    return 2 * negative_line_bundle_h1(1 - 2 * j, g)


def _sym_degree(p: ModuliParams, j: int) -> int:
    return 2 * p.g + p.n - 1 - 2 * j


def critical_manifolds(p: ModuliParams) -> list[CriticalStratum]:
    """F_n^0 = N(2, d) and F_n^j = Jac^{(d+1)/2-j} × Sym^{2g+n-1-2j} for 1 <= j <= g + ⌊(n-1)/2⌋."""
    strata = [
        CriticalStratum(
            j=0,
            kind=StratumKind.stable_bundles,
            factors=(f"N(2,{p.d})",),
            complex_dim=4 * p.g - 3,
            morse_index=0,
            poincare=stable_bundles_poincare(p.g, p.d),
        )
    ]
    for j in range(1, p.max_stratum + 1):
        m = _sym_degree(p, j)
        strata.append(
            CriticalStratum(
                j=j,
                kind=StratumKind.jacobian_symmetric,
                factors=(f"Jac^{(p.d + 1) // 2 - j}", f"Sym^{m}"),
                complex_dim=p.g + m,
                morse_index=morse_index(p.g, j),
                poincare=series_mul(jacobian_poincare(p.g), sym_poincare(p.g, m)),
            )
        )
    return strata


def higgs_poincare_morse(p: ModuliParams) -> PoincareSeries:
    """P_t(H_n) = Σ_j t^{index_j} P_t(F_n^j)."""
    strata = critical_manifolds(p)
    logger.debug("assembling %d critical submanifolds for g=%d n=%d d=%d", len(strata), p.g, p.n, p.d)
    return series_sum(series_shift(stratum.poincare, stratum.morse_index) for stratum in strata)


def fixed_det_poincare_morse(p: ModuliParams) -> PoincareSeries:
    """Σ-invariant fixed-determinant part: higgs_poincare_morse(p) = (1+t)^{2g} times this."""
    terms = [stable_bundles_fixed_det_poincare(p.g, p.d)]
    terms.extend(
        series_mul(monomial(morse_index(p.g, j)), sym_poincare(p.g, _sym_degree(p, j)))
        for j in range(1, p.max_stratum + 1)
    )
    return series_sum(terms)
