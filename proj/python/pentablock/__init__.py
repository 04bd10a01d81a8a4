"""Pentablock and symmetrized bidisc geometry.

Points are tuples of complex numbers: (s, p) for the symmetrized bidisc and
(a, s, p) for the pentablock.
"""

from ._core import (
    EXACT_TOL,
    PROPAGATED_TOL,
    Automorphism,
    PentablockError,
    classify,
    fibre_bound,
    g2_classify,
    in_pentablock,
    levi_flat_check,
    levi_rank,
    lift_blaschke,
    matrix_witness,
    minkowski,
    parse_point,
    penta_from_matrix,
    radius_via_parametrization,
    roots,
    sample,
    scale,
    sigma,
    suite_names,
    u_potential,
    verify,
)

__all__ = [
    "EXACT_TOL",
    "PROPAGATED_TOL",
    "Automorphism",
    "PentablockError",
    "classify",
    "fibre_bound",
    "g2_classify",
    "in_pentablock",
    "levi_flat_check",
    "levi_rank",
    "lift_blaschke",
    "matrix_witness",
    "minkowski",
    "parse_point",
    "penta_from_matrix",
    "radius_via_parametrization",
    "roots",
    "sample",
    "scale",
    "sigma",
    "suite_names",
    "u_potential",
    "verify",
]
