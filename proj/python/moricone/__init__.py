"""Exact analysis of exceptional-curve and extremal-ray configurations."""

from ._core import (
    bounds,
    catalog_entry,
    catalog_names,
    classify,
    cone,
    cy3,
    definiteness,
    distance_surrogate,
    export_dot,
    face_polynomial,
    narrow,
    signature,
    surface_rho_bound,
    threefold_rho_bound,
)

__all__ = [
    "bounds",
    "catalog_entry",
    "catalog_names",
    "classify",
    "cone",
    "cy3",
    "definiteness",
    "distance_surrogate",
    "export_dot",
    "face_polynomial",
    "narrow",
    "signature",
    "surface_rho_bound",
    "threefold_rho_bound",
]
