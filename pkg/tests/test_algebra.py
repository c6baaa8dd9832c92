# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Unit tests for the graded algebra and exact slice ranks."""

from __future__ import annotations

from fractions import Fraction
from math import comb
import random

import pytest
import sympy

from cohomology.algebra import (
    EvenMonomial,
    ExteriorElement,
    GeneratorSpec,
    GenusMismatchError,
    InhomogeneousError,
    RingElement,
    even_add,
    even_mul,
    even_pow,
    exterior_basis,
    gamma_element,
    graded_slice_rank,
    monomials_of_degree,
    normalized_generators,
    primitive_dim,
    universal_generators,
    wedge_mul,
    wedge_power,
)
from cohomology.ideal import IdealSpec, ideal_basis_in_degree
from cohomology.linalg import bareiss_rank, integer_row
from cohomology.types import Parity


def test_universal_generators_rank_two() -> None:
    table = universal_generators(2)
    names = [spec.name for spec in table]
    assert len(table) == 10
    assert names[:4] == ["eps_1", "eps_2", "eps_3", "eps_4"]
    degrees = {spec.name: spec.degree for spec in table}
    assert degrees["alpha_2"] == 2
    assert degrees["beta_2"] == 4
    assert degrees["psi_2,3"] == 3


def test_normalized_generators_degrees() -> None:
    table = normalized_generators(1)
    assert [(spec.name, spec.degree, spec.parity) for spec in table[:3]] == [
        ("alpha", 2, Parity.even),
        ("beta", 4, Parity.even),
        ("gamma", 6, Parity.even),
    ]
    assert all(spec.parity is Parity.odd for spec in table[3:])


def test_generator_parity_must_match_degree() -> None:
    with pytest.raises(ValueError, match="parity"):
        GeneratorSpec("bad", 3, Parity.even)


def test_monomials_of_degree() -> None:
    slice_12 = monomials_of_degree(12)
    assert len(slice_12) == 7
    assert slice_12[0] == EvenMonomial(6, 0, 0)
    assert slice_12[-1] == EvenMonomial(0, 0, 2)
    assert all(mono.degree == 12 for mono in slice_12)
    assert monomials_of_degree(7) == []
    assert monomials_of_degree(0) == [EvenMonomial()]


def test_even_ring_arithmetic() -> None:
    alpha = RingElement.monomial(a=1)
    beta = RingElement.monomial(b=1)
    assert even_mul(alpha, beta) == even_mul(beta, alpha)
    square = even_pow(even_add(alpha, alpha), 2)
    assert square.terms == {EvenMonomial(2, 0, 0): Fraction(4)}
    with pytest.raises(InhomogeneousError):
        _ = even_add(alpha, beta).degree
    assert RingElement().degree is None


def test_wedge_is_anticommutative() -> None:
    psi1 = ExteriorElement.psi(2, 1)
    psi2 = ExteriorElement.psi(2, 2)
    assert wedge_mul(psi1, psi2).terms == {(1, 2): Fraction(1)}
    assert wedge_mul(psi2, psi1).terms == {(1, 2): Fraction(-1)}
    assert wedge_mul(psi1, psi1).is_zero


def test_wedge_rejects_mixed_genera() -> None:
    with pytest.raises(GenusMismatchError):
        wedge_mul(ExteriorElement.psi(1, 1), ExteriorElement.psi(2, 1))


def test_gamma_nilpotence() -> None:
    gamma = gamma_element(2)
    assert not wedge_power(gamma, 2).is_zero
    assert wedge_power(gamma, 3).is_zero
    assert len(exterior_basis(3, 2)) == 15


@pytest.mark.parametrize(
    ("g", "k", "expected"),
    [(1, 0, 1), (1, 1, 2), (2, 0, 1), (2, 1, 4), (2, 2, 5), (3, 2, 14), (3, 3, 14)],
)
def test_primitive_dim(g: int, k: int, expected: int) -> None:
    assert primitive_dim(g, k) == expected


def test_primitive_dim_needs_k_at_most_g() -> None:
    with pytest.raises(ValueError, match="k must be <= g"):
        primitive_dim(2, 3)


def test_bareiss_rank() -> None:
    assert bareiss_rank([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2
    assert bareiss_rank([[0, 1], [0, 2]]) == 1
    assert bareiss_rank([[0, 0]]) == 0
    assert integer_row([Fraction(1, 2), Fraction(2, 3)]) == [3, 4]


def test_slice_rank_matches_sympy() -> None:
    spec = IdealSpec(genus=3, summand=0)
    for degree in (12, 14, 16):
        vectors = ideal_basis_in_degree(spec, degree)
        basis = monomials_of_degree(degree)
        rows = [[v.terms.get(m, Fraction(0)) for m in basis] for v in vectors]
        matrix = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])
        expected = matrix.rank() if vectors else 0
        assert graded_slice_rank(vectors, degree) == expected


def test_slice_rank_rejects_wrong_degree() -> None:
    with pytest.raises(InhomogeneousError):
        graded_slice_rank([RingElement.monomial(a=1)], 4)


def test_wedge_sign_counts_inversions() -> None:
    left = ExteriorElement.basis_element(2, (1, 3))
    right = ExteriorElement.basis_element(2, (2, 4))
    assert wedge_mul(left, right).terms == {(1, 2, 3, 4): Fraction(-1)}
    assert wedge_mul(right, left).terms == {(1, 2, 3, 4): Fraction(-1)}


def _random_exterior(rng: random.Random, g: int) -> ExteriorElement:
    k = rng.randint(0, 2 * g)
    keys = rng.sample(exterior_basis(g, k), rng.randint(1, min(3, len(exterior_basis(g, k)))))
    return ExteriorElement.from_terms(g, ((key, rng.randint(-3, 3) or 1) for key in keys))


@pytest.mark.parametrize("seed", range(50))
def test_wedge_is_graded_commutative(seed: int) -> None:
    rng = random.Random(seed)
    x, y = _random_exterior(rng, 3), _random_exterior(rng, 3)
    (kx,) = {len(key) for key in x.terms}
    (ky,) = {len(key) for key in y.terms}
    sign = (-1) ** (kx * ky)
    swapped = wedge_mul(y, x)
    assert wedge_mul(x, y).terms == {key: sign * coeff for key, coeff in swapped.terms.items()}


@pytest.mark.parametrize("seed", range(10))
def test_slice_rank_ignores_row_scaling_and_order(seed: int) -> None:
    rng = random.Random(seed)
    vectors = ideal_basis_in_degree(IdealSpec(genus=2, summand=0), 12)
    rank = graded_slice_rank(vectors, 12)
    scaled = []
    for vector in vectors:
        factor = Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4))
        scaled.append(RingElement.from_terms((mono, coeff * factor) for mono, coeff in vector.terms.items()))
    rng.shuffle(scaled)
    assert graded_slice_rank(scaled, 12) == rank


def test_wedge_power_matches_repeated_product() -> None:
    gamma = gamma_element(3)
    assert wedge_power(gamma, 2) == wedge_mul(gamma, gamma)
    assert wedge_power(gamma, 0) == ExteriorElement.unit(3)
    cube = wedge_power(gamma, 3)
    assert not cube.is_zero
    assert all(len(key) == 6 for key in cube.terms)


@pytest.mark.parametrize(("g", "k"), [(g, k) for g in range(1, 4) for k in range(g + 1)])
def test_primitive_dim_kernel_matches_closed_form(g: int, k: int) -> None:
    expected = comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)
    assert primitive_dim(g, k) == expected
