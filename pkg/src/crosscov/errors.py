"""Domain error types shared across the package.

The CLI maps any CrossCovError to exit code 1; usage errors exit 2.
"""


class CrossCovError(Exception):
    """Base class for all domain errors raised by this package."""


class TooFewVertices(CrossCovError):
    """Polygon input has fewer than three vertices."""


class CollinearTriple(CrossCovError):
    """Three consecutive vertices are collinear (polygon not strictly convex)."""


class NotConvex(CrossCovError):
    """Vertex sequence is not the boundary walk of a convex polygon."""


class ZeroArea(CrossCovError):
    """Polygon degenerates to a segment or point."""


class FaceNotOnPolygon(CrossCovError):
    """The supplied face is not a vertex or edge of the polygon."""


class BadResolution(CrossCovError):
    """Grid resolution below 2 or bounds degenerate."""


class BadParams(CrossCovError):
    """Catalog family parameters violate the family's constraints."""


class UnboundedIntersection(CrossCovError):
    """Cone covariogram value is +infinity (support hull not pointed)."""


class OracleInconsistent(CrossCovError):
    """Oracle answers are not consistent with any admissible covariogram."""


class HypothesisViolated(CrossCovError):
    """Cone quadruple violates the positional hypotheses of the identity test."""


class AssemblyFailed(CrossCovError):
    """Boundary assembly found no candidate (or too many) consistent with the oracle."""
