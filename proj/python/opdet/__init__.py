"""Exact determinant identities for orthogonal polynomials."""

from ._opdet import (
    DegenerateMeasure,
    InfeasiblePlan,
    InsufficientMoments,
    Measure,
    cli,
    hankel_r_det,
    identities,
    jensen_convergence,
    orth_poly,
    positivity_scan,
    q_poly,
    r_poly,
    selberg_integral,
    slater,
    slater_general,
    symmetrized,
    verify,
    wronskian,
)

__all__ = [
    "DegenerateMeasure",
    "InfeasiblePlan",
    "InsufficientMoments",
    "Measure",
    "cli",
    "hankel_r_det",
    "identities",
    "jensen_convergence",
    "orth_poly",
    "positivity_scan",
    "q_poly",
    "r_poly",
    "selberg_integral",
    "slater",
    "slater_general",
    "symmetrized",
    "verify",
    "wronskian",
]
