"""Exact cohomology of rank-2 Higgs bundle moduli spaces."""

from cohomology.algebra import GeneratorSpec, primitive_dim, universal_generators
from cohomology.ideal import IdealSpec, dd_rhs_series, full_h_series, quotient_hilbert
from cohomology.morse import (
    CriticalStratum,
    ModuliParams,
    classifying_space_poincare,
    critical_manifolds,
    fixed_det_poincare_morse,
    higgs_poincare_morse,
    stable_bundles_poincare,
)
from cohomology.series import PoincareSeries, series_from_json, series_to_json
from cohomology.shatz import HNType, enum_hn_types, moduli_dims, polygon, stratum_codim


__all__ = [
    "CriticalStratum",
    "GeneratorSpec",
    "HNType",
    "IdealSpec",
    "ModuliParams",
    "PoincareSeries",
    "classifying_space_poincare",
    "critical_manifolds",
    "dd_rhs_series",
    "enum_hn_types",
    "fixed_det_poincare_morse",
    "full_h_series",
    "higgs_poincare_morse",
    "moduli_dims",
    "polygon",
    "primitive_dim",
    "quotient_hilbert",
    "series_from_json",
    "series_to_json",
    "stable_bundles_poincare",
    "stratum_codim",
    "universal_generators",
]
