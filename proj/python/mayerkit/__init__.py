"""Mayer cluster integrals and virial coefficients of hard convex bodies.

Shapes and graphs may be passed as objects or as their text forms,
e.g. ``"ball:r=0.5"`` and ``"order:4;edges:1-2,2-3,3-4,4-1,2-4"``.
"""

from ._core import (
    ClusterGraph,
    MCEstimate,
    MinkowskiData,
    NoIntersection,
    NumericFailure,
    ParseError,
    Shape,
    ShapeKind,
    StarGraph,
    UnsupportedGraph,
    automorphism_order,
    boundary_expand,
    boundary_formula,
    cli,
    cluster_integral_mc,
    curvature_measure,
    enumerate_stars,
    excluded_volume,
    f_decomposition_residual,
    f_fourier,
    kinematic_b2,
    loop_evaluate,
    minkowski_functionals,
    ring_integral,
    verify,
    vertex_split,
    virial_coefficient_mc,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
