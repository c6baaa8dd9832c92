# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Unit tests for critical submanifolds and the Morse-side assembly."""

from __future__ import annotations

from itertools import pairwise
from typing import TYPE_CHECKING

import pytest
import sympy

from cohomology.morse import (
    ModuliParams,
    classifying_space_poincare,
    critical_manifolds,
    fixed_det_poincare_morse,
    gauge_group_poincare,
    higgs_poincare_morse,
    jacobian_poincare,
    morse_index,
    stable_bundles_fixed_det_poincare,
    stable_bundles_poincare,
    sym_poincare,
)
from cohomology.series import (
    ONE,
    coeffwise_leq,
    euler_characteristic,
    expand_rational,
    is_palindromic,
    polynomial,
    series_mul,
    series_pow,
    series_shift,
    series_sub,
    to_polynomial,
)
from cohomology.types import StratumKind


if TYPE_CHECKING:
    from collections.abc import Callable

    from cohomology.series import PoincareSeries


def test_sym_poincare_small_cases() -> None:
    assert sym_poincare(3, 0) == ONE
    assert sym_poincare(3, 1) == polynomial(1, 6, 1)
    assert sym_poincare(2, 2) == polynomial(1, 4, 7, 4, 1)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_sym_poincare_matches_generating_function(g: int) -> None:
    q, t = sympy.symbols("q t")
    generating = (1 + q * t) ** (2 * g) / ((1 - q) * (1 - q * t**2))
    expansion = sympy.expand(sympy.series(generating, q, 0, 7).removeO())
    for k in range(7):
        expected = sympy.Poly(expansion.coeff(q, k), t).all_coeffs()[::-1]
        assert list(sym_poincare(g, k).coeffs) == expected


@pytest.mark.parametrize("g", [1, 2, 3])
def test_sym_poincare_palindromic_and_surjective(g: int) -> None:
    for k in range(9):
        assert is_palindromic(sym_poincare(g, k), 2 * k)
        assert coeffwise_leq(sym_poincare(g, k), sym_poincare(g, k + 1), 2 * k)


def test_jacobian_poincare() -> None:
    assert jacobian_poincare(1) == polynomial(1, 2, 1)
    assert jacobian_poincare(2) == polynomial(1, 4, 6, 4, 1)
    assert euler_characteristic(jacobian_poincare(3)) == 0


def test_stable_bundles_genus_one_and_two(golden: Callable[[str], PoincareSeries]) -> None:
    assert stable_bundles_poincare(1) == polynomial(1, 2, 1)
    assert stable_bundles_poincare(2) == golden("stable_bundles_g2")
    assert stable_bundles_poincare(2, 3) == stable_bundles_poincare(2, -1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_stable_bundles_poincare_duality(g: int) -> None:
    series = stable_bundles_poincare(g)
    assert series.degree == 2 * (4 * g - 3)
    assert is_palindromic(series, 2 * (4 * g - 3))
    assert series.coefficient(0) == 1
    assert series.coefficient(1) == 2 * g


@pytest.mark.parametrize("g", [2, 3, 4])
def test_fixed_determinant_closed_form(g: int) -> None:
    numerator = series_sub(
        series_pow(polynomial(1, 0, 0, 1), 2 * g),
        series_shift(jacobian_poincare(g), 2 * g),
    )
    top = 6 * g - 6
    closed_form = to_polynomial(expand_rational(numerator, [2, 4], top + 8), top)
    assert stable_bundles_fixed_det_poincare(g) == closed_form
    assert series_mul(jacobian_poincare(g), closed_form) == stable_bundles_poincare(g)


def test_gauge_group_and_classifying_space(golden: Callable[[str], PoincareSeries]) -> None:
    assert gauge_group_poincare(2, 6).coeffs == (1, 4, 8, 16, 33, 56, 86)
    assert classifying_space_poincare(2, 6) == golden("classifying_space_g2")
    assert classifying_space_poincare(3, 4).coefficient(1) == 6


def test_morse_index() -> None:
    assert morse_index(2, 0) == 0
    assert morse_index(2, 1) == 4
    assert morse_index(3, 2) == 10


def test_moduli_params_validation() -> None:
    with pytest.raises(ValueError, match="d must be odd"):
        ModuliParams(g=2, d=2)
    with pytest.raises(ValueError):
        ModuliParams(g=0)
    assert ModuliParams(g=2, n=0).max_stratum == 1
    assert ModuliParams(g=2, n=1).max_stratum == 2


def test_critical_manifolds_genus_two() -> None:
    strata = critical_manifolds(ModuliParams(g=2, n=0, d=1))
    assert [s.j for s in strata] == [0, 1]
    minimum, upper = strata
    assert minimum.kind is StratumKind.stable_bundles
    assert minimum.complex_dim == 5
    assert minimum.morse_index == 0
    assert upper.kind is StratumKind.jacobian_symmetric
    assert upper.factors == ("Jac^0", "Sym^1")
    assert upper.complex_dim == 3
    assert upper.morse_index == 4
    assert upper.poincare == series_mul(polynomial(1, 4, 6, 4, 1), polynomial(1, 4, 1))
    assert [s.j for s in critical_manifolds(ModuliParams(g=2, n=1, d=1))] == [0, 1, 2]


def test_higgs_poincare_small_genus(golden: Callable[[str], PoincareSeries]) -> None:
    assert higgs_poincare_morse(ModuliParams(g=1)) == polynomial(1, 2, 1)
    assert higgs_poincare_morse(ModuliParams(g=2)) == golden("full_h_g2")
    for n in range(4):
        series = higgs_poincare_morse(ModuliParams(g=2, n=n))
        assert series.coefficient(0) == 1
        assert euler_characteristic(series) == 0


def test_restriction_surjectivity_genus_two() -> None:
    series = [higgs_poincare_morse(ModuliParams(g=2, n=n)) for n in range(6)]
    for lower, upper in pairwise(series):
        assert coeffwise_leq(lower, upper, 8)


def test_stabilization_to_classifying_space() -> None:
    limit = classifying_space_poincare(2, 6)
    for n in range(1, 7):
        series = higgs_poincare_morse(ModuliParams(g=2, n=n))
        assert [series.coefficient(i) for i in range(7)] == list(limit.coeffs)


def test_fixed_determinant_assembly(golden: Callable[[str], PoincareSeries]) -> None:
    assert fixed_det_poincare_morse(ModuliParams(g=2)) == golden("dd_rhs_g2")
    params = ModuliParams(g=3, n=2)
    assert series_mul(jacobian_poincare(3), fixed_det_poincare_morse(params)) == higgs_poincare_morse(params)
