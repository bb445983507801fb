"""Exact cross covariogram computations for planar convex polygons and cones.

The cross covariogram of convex bodies K and L assigns to each translation
x the area of K intersected with L + x.  This package evaluates it exactly
over the rationals, decides when two pairs share a covariogram, recovers a
pair from oracle access to its covariogram, and produces the parallelogram
and cone families that make the inverse problem non-unique.

Point evaluation lives at covariogram.eval (kept off the package root so it
never shadows the builtin).
"""

from . import (
    catalog,
    cones,
    covariogram,
    formats,
    geometry,
    reconstruct,
    render,
    synisothesis,
)
from .catalog import (
    EqualityReport,
    Parall12Params,
    Parall34Params,
    make_cone_counterexample,
    make_pair,
    verify_equal_covariogram,
)
from .cones import (
    ConeOracle,
    ConePair,
    ConeRecoveryResult,
    cone_cov_eval,
    cone_quad_identity_residual,
    oracle_from_pair,
    recover_cone_pair,
)
from .covariogram import (
    GridSample,
    MonteCarloResult,
    edge_length_pair,
    eval_many,
    monte_carlo_check,
    sample_grid,
    second_singular_set,
    support,
)
from .errors import (
    AssemblyFailed,
    BadParams,
    BadResolution,
    CollinearTriple,
    CrossCovError,
    FaceNotOnPolygon,
    HypothesisViolated,
    NotConvex,
    OracleInconsistent,
    TooFewVertices,
    UnboundedIntersection,
    ZeroArea,
)
from .geometry import (
    ConvexPolygon,
    Direction,
    Face,
    PlanarCone,
    Point2,
    convex_hull,
    intersect_convex,
    minkowski_sum,
    point,
    polygon,
    reflect,
    validate_polygon,
)
from .rational import RationalBackend, rational
from .reconstruct import (
    PolygonCovOracle,
    ReconstructionResult,
    assemble,
    decompose_support_edges,
    recover_edge_pairs,
    recover_vertex_cones,
)
from .synisothesis import (
    PairOfBodies,
    TrivialAssociateWitness,
    isothetic,
    symmetry_point,
    symmetry_witness,
    synisothetic,
    trivial_associates,
)

__version__ = "0.1.0"

__all__ = [
    "AssemblyFailed",
    "BadParams",
    "BadResolution",
    "CollinearTriple",
    "ConeOracle",
    "ConePair",
    "ConeRecoveryResult",
    "ConvexPolygon",
    "CrossCovError",
    "Direction",
    "EqualityReport",
    "Face",
    "FaceNotOnPolygon",
    "GridSample",
    "HypothesisViolated",
    "MonteCarloResult",
    "NotConvex",
    "OracleInconsistent",
    "PairOfBodies",
    "Parall12Params",
    "Parall34Params",
    "PlanarCone",
    "Point2",
    "PolygonCovOracle",
    "RationalBackend",
    "ReconstructionResult",
    "TooFewVertices",
    "TrivialAssociateWitness",
    "UnboundedIntersection",
    "ZeroArea",
    "assemble",
    "catalog",
    "cone_cov_eval",
    "cone_quad_identity_residual",
    "cones",
    "convex_hull",
    "covariogram",
    "decompose_support_edges",
    "edge_length_pair",
    "eval_many",
    "formats",
    "geometry",
    "intersect_convex",
    "isothetic",
    "make_cone_counterexample",
    "make_pair",
    "minkowski_sum",
    "monte_carlo_check",
    "oracle_from_pair",
    "point",
    "polygon",
    "rational",
    "reconstruct",
    "recover_cone_pair",
    "recover_edge_pairs",
    "recover_vertex_cones",
    "reflect",
    "render",
    "sample_grid",
    "second_singular_set",
    "support",
    "symmetry_point",
    "symmetry_witness",
    "synisothesis",
    "synisothetic",
    "trivial_associates",
    "validate_polygon",
    "verify_equal_covariogram",
]
