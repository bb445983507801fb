"""Exact planar convex geometry over the rationals.

Conventions used throughout the package:

* Vertices are exact rationals; there is no floating point anywhere in this
  module.
* Polygons are stored counterclockwise, strictly convex (no three collinear
  vertices), starting at the lexicographically smallest vertex (by x, then y).
* Directions are primitive integer vectors: gcd(|dx|, |dy|) == 1.  Angular
  comparisons start at the positive x-axis and run counterclockwise through
  [0, 2*pi), implemented with sign tests only.
* A cone lives at the origin and is one of: the origin alone, a single ray, a
  pointed cone spanning less than pi (upper ray strictly follows the lower ray
  counterclockwise), or a closed halfplane (upper == -lower).
* Segment lengths are reported as the rational multiple of the segment's
  primitive direction vector.  Euclidean length of a rational segment is
  usually irrational; this per-direction unit keeps every length in Q, and the
  package only ever adds or compares lengths of parallel segments, where the
  two notions agree up to the same constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    CollinearTriple,
    FaceNotOnPolygon,
    NotConvex,
    TooFewVertices,
    ZeroArea,
)
from .rational import ZERO, rational


@dataclass(frozen=True)
class Point2:
    """Exact rational point (also used for free vectors)."""

    x: object
    y: object

    def __add__(self, other):
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return Point2(-self.x, -self.y)

    def scaled(self, factor):
        return Point2(self.x * factor, self.y * factor)

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def is_origin(self):
        return self.x == 0 and self.y == 0


ORIGIN = Point2(ZERO, ZERO)


def point(x, y):
    """Point2 from ints, strings, or rationals."""
    return Point2(rational(x), rational(y))


def orient(o, a, b):
    """Twice the signed area of triangle (o, a, b): >0 iff counterclockwise."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class Direction:
    """Primitive integer direction vector."""

    dx: int
    dy: int

    @staticmethod
    def of(dx, dy=None):
        """Canonicalize a nonzero rational vector (or Point2) to primitive form."""
        if dy is None:
            dx, dy = dx.x, dx.y
        nx, dxden = dx.numerator, dx.denominator
        ny, dyden = dy.numerator, dy.denominator
        ax = int(nx) * int(dyden)
        ay = int(ny) * int(dxden)
        if ax == 0 and ay == 0:
            raise ValueError("zero vector has no direction")
        g = gcd(abs(ax), abs(ay))
        return Direction(ax // g, ay // g)

    def __neg__(self):
        return Direction(-self.dx, -self.dy)

    def perp_ccw(self):
        """Rotate by +90 degrees."""
        return Direction(-self.dy, self.dx)

    def perp_cw(self):
        """Rotate by -90 degrees."""
        return Direction(self.dy, -self.dx)

    def as_point(self):
        return point(self.dx, self.dy)

    def cross(self, other):
        return self.dx * other.dy - self.dy * other.dx

    def dot(self, other):
        return self.dx * other.dx + self.dy * other.dy

    def half(self):
        """0 for angle in [0, pi), 1 for [pi, 2*pi)."""
        if self.dy > 0 or (self.dy == 0 and self.dx > 0):
            return 0
        return 1


def ccw_less(a: Direction, b: Direction) -> bool:
    """Strict angular order in [0, 2*pi) starting at the positive x-axis."""
    ha, hb = a.half(), b.half()
    if ha != hb:
        return ha < hb
    return a.cross(b) > 0


def direction_between(d: Direction, lower: Direction, upper: Direction) -> bool:
    """True iff d lies in the closed arc from lower ccw to upper (arc < pi)."""
    return lower.cross(d) >= 0 and d.cross(upper) >= 0


@dataclass(frozen=True)
class Face:
    """Exposed face of a polygon: a single vertex or a ccw-ordered edge."""

    kind: str  # "vertex" | "edge"
    points: tuple

    @staticmethod
    def vertex(p):
        return Face("vertex", (p,))

    @staticmethod
    def edge(a, b):
        return Face("edge", (a, b))

    def length_units(self):
        """Rational length in units of the primitive direction (0 for a vertex)."""
        if self.kind == "vertex":
            return rational(0)
        return segment_length_units(self.points[0], self.points[1])


def segment_length_units(a: Point2, b: Point2):
    """Length of [a, b] as a rational multiple of its primitive direction."""
    w = b - a
    d = Direction.of(w)
    if d.dx != 0:
        return w.x / d.dx
    return w.y / d.dy


@dataclass(frozen=True)
class PlanarCone:
    """Closed convex cone at the origin.

    kind is one of "zero", "ray", "pointed", "halfplane".  For "pointed" the
    upper ray strictly follows the lower ray counterclockwise by less than pi;
    for "halfplane" the cone is {x : cross(lower, x) >= 0} and upper == -lower.
    """

    kind: str
    lower: Direction | None
    upper: Direction | None

    @staticmethod
    def zero():
        return PlanarCone("zero", None, None)

    @staticmethod
    def ray(d: Direction):
        return PlanarCone("ray", d, d)

    @staticmethod
    def pointed(lower: Direction, upper: Direction):
        if lower.cross(upper) <= 0:
            raise ValueError("pointed cone needs 0 < span < pi, ccw")
        return PlanarCone("pointed", lower, upper)

    @staticmethod
    def halfplane(boundary: Direction):
        return PlanarCone("halfplane", boundary, -boundary)

    @staticmethod
    def span(lower: Direction, upper: Direction):
        """Cone from lower ccw to upper, classifying ray/pointed/halfplane."""
        if lower == upper:
            return PlanarCone.ray(lower)
        if lower == -upper:
            return PlanarCone.halfplane(lower)
        return PlanarCone.pointed(lower, upper)

    def is_pointed_with_interior(self):
        return self.kind == "pointed"

    def contains(self, p: Point2) -> bool:
        if self.kind == "zero":
            return p.is_origin()
        if p.is_origin():
            return True
        lx, ly = self.lower.dx, self.lower.dy
        cl = lx * p.y - ly * p.x
        if self.kind == "ray":
            return cl == 0 and lx * p.x + ly * p.y > 0
        if self.kind == "halfplane":
            return cl >= 0
        return cl >= 0 and self.upper.dx * p.y - self.upper.dy * p.x <= 0

    def interior_contains(self, p: Point2) -> bool:
        if self.kind in ("zero", "ray") or p.is_origin():
            return False
        cl = self.lower.dx * p.y - self.lower.dy * p.x
        if self.kind == "halfplane":
            return cl > 0
        return cl > 0 and self.upper.dx * p.y - self.upper.dy * p.x < 0

    def contains_direction(self, d: Direction) -> bool:
        return self.contains(d.as_point())

    def interior_contains_direction(self, d: Direction) -> bool:
        return self.interior_contains(d.as_point())

    def reflect(self):
        """The cone -C."""
        if self.kind == "zero":
            return self
        if self.kind == "ray":
            return PlanarCone.ray(-self.lower)
        return PlanarCone(self.kind, -self.lower, -self.upper)


def cone_interiors_intersect(a: PlanarCone, b: PlanarCone) -> bool:
    """Exact test for int(a) and int(b) sharing a ray (pointed cones)."""
    if not (a.is_pointed_with_interior() and b.is_pointed_with_interior()):
        return False
    if a == b:
        return True
    return (
        a.interior_contains_direction(b.lower)
        or a.interior_contains_direction(b.upper)
        or b.interior_contains_direction(a.lower)
        or b.interior_contains_direction(a.upper)
    )


def cones_share_ray(a: PlanarCone, b: PlanarCone) -> bool:
    """Exact test for a and b intersecting beyond the origin (closed cones)."""
    if a.kind == "zero" or b.kind == "zero":
        return False
    return (
        a.contains_direction(b.lower)
        or a.contains_direction(b.upper)
        or b.contains_direction(a.lower)
        or b.contains_direction(a.upper)
    )


class ConvexPolygon:
    """Strictly convex polygon, ccw, lexicographically smallest vertex first.

    Construct through validate_polygon (arbitrary boundary walks) or the
    trusted classmethods below.  Instances are immutable value objects.
    """

    __slots__ = ("vertices", "_area", "_bbox", "_hp")

    def __init__(self, vertices, _trusted=False):
        if not _trusted:
            vertices = _validated_ccw(vertices)
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "_area", None)
        object.__setattr__(self, "_bbox", None)
        object.__setattr__(self, "_hp", None)

    def __reduce__(self):
        return (ConvexPolygon.from_ccw, (self.vertices,))

    def __setattr__(self, name, value):
        raise AttributeError("ConvexPolygon is immutable")

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        coords = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"ConvexPolygon[{coords}]"

    def __len__(self):
        return len(self.vertices)

    @classmethod
    def from_ccw(cls, vertices):
        """Trusted: vertices already strictly convex ccw; only rotates to canonical start."""
        return cls(_rotate_to_lexmin(list(vertices)), _trusted=True)

    def edges(self):
        """Ccw-ordered (tail, head) vertex pairs."""
        vs = self.vertices
        n = len(vs)
        return tuple((vs[i], vs[(i + 1) % n]) for i in range(n))

    def edge_vector(self, i):
        vs = self.vertices
        return vs[(i + 1) % len(vs)] - vs[i]

    def area(self):
        if self._area is None:
            object.__setattr__(self, "_area", _shoelace(self.vertices) / 2)
        return self._area

    def bbox(self):
        """(xmin, ymin, xmax, ymax)."""
        if self._bbox is None:
            xs = [v.x for v in self.vertices]
            ys = [v.y for v in self.vertices]
            object.__setattr__(self, "_bbox", (min(xs), min(ys), max(xs), max(ys)))
        return self._bbox

    def translate(self, v: Point2):
        return ConvexPolygon.from_ccw([p + v for p in self.vertices])

    def contains(self, p: Point2) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(orient(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))

    def interior_contains(self, p: Point2) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(orient(vs[i], vs[(i + 1) % n], p) > 0 for i in range(n))

    def centroid_of_vertices(self):
        n = rational(len(self.vertices))
        sx = sum((v.x for v in self.vertices), start=ZERO)
        sy = sum((v.y for v in self.vertices), start=ZERO)
        return Point2(sx / n, sy / n)


def _shoelace(vs):
    total = ZERO
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        total += a.x * b.y - a.y * b.x
    return total


def _rotate_to_lexmin(vs):
    k = min(range(len(vs)), key=lambda i: (vs[i].x, vs[i].y))
    return vs[k:] + vs[:k]


def _validated_ccw(points):
    pts = [p if isinstance(p, Point2) else point(p[0], p[1]) for p in points]
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")

    n = len(pts)
    crosses = [orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) for i in range(n)]
    if all(c == 0 for c in crosses):
        raise ZeroArea("all vertices collinear")
    if any(c == 0 for c in crosses):
        raise CollinearTriple("three consecutive vertices are collinear")
    pos = sum(1 for c in crosses if c > 0)
    if pos != n and pos != 0:
        raise NotConvex("boundary walk turns both ways")
    if pos == 0:
        pts.reverse()

    # All turns are strict left turns now.  Reject walks that wind more than
    # once (star orderings have uniform turns but total turning 4*pi).
    edges = [Direction.of(pts[(i + 1) % n] - pts[i]) for i in range(n)]
    descents = sum(1 for i in range(n) if not ccw_less(edges[i], edges[(i + 1) % n]))
    if descents != 1:
        raise NotConvex("boundary walk winds more than once")

    return _rotate_to_lexmin(pts)


def validate_polygon(points) -> ConvexPolygon:
    """Canonicalize a boundary walk (either orientation, any starting vertex).

    Raises TooFewVertices, ZeroArea (fully collinear input), CollinearTriple,
    or NotConvex (self-crossing or multiply-wound walks).
    """
    return ConvexPolygon(points)


def polygon(*coords) -> ConvexPolygon:
    """Convenience: polygon((x, y), (x, y), ...) with mixed int/str/rational."""
    return validate_polygon([point(x, y) for x, y in coords])


def convex_hull(points) -> ConvexPolygon:
    """Strict convex hull of a point cloud (collinear points dropped).

    Raises TooFewVertices or ZeroArea when the cloud has no 2-dimensional
    hull.
    """
    unique = sorted(set((p.x, p.y) for p in points))
    if len(unique) < 3:
        raise TooFewVertices(f"need 3 distinct points, got {len(unique)}")
    pts = [Point2(x, y) for x, y in unique]

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ZeroArea("all points are collinear")
    return ConvexPolygon.from_ccw(hull)


def reflect(p: ConvexPolygon) -> ConvexPolygon:
    """Point reflection through the origin (a rotation by pi, so still ccw)."""
    return ConvexPolygon.from_ccw([-v for v in p.vertices])


def area(p: ConvexPolygon):
    return p.area()


def _bottommost_start(p: ConvexPolygon):
    vs = list(p.vertices)
    k = min(range(len(vs)), key=lambda i: (vs[i].y, vs[i].x))
    return vs[k:] + vs[:k]


def minkowski_sum(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon:
    """Exact Minkowski sum by the ccw edge merge.

    Both boundaries are rotated to start at their bottom-most (then leftmost)
    vertex, which makes each edge-angle sequence strictly increasing within
    [0, 2*pi); a two-pointer merge then emits edges in sorted order, fusing
    parallel ones, and the sum's boundary is the chained partial sums.
    """
    pv = _bottommost_start(p)
    qv = _bottommost_start(q)
    pe = [pv[(i + 1) % len(pv)] - pv[i] for i in range(len(pv))]
    qe = [qv[(i + 1) % len(qv)] - qv[i] for i in range(len(qv))]

    merged = []
    i = j = 0
    while i < len(pe) or j < len(qe):
        if i == len(pe):
            merged.append(qe[j])
            j += 1
        elif j == len(qe):
            merged.append(pe[i])
            i += 1
        else:
            da, db = Direction.of(pe[i]), Direction.of(qe[j])
            if da == db:
                merged.append(pe[i] + qe[j])
                i += 1
                j += 1
            elif ccw_less(da, db):
                merged.append(pe[i])
                i += 1
            else:
                merged.append(qe[j])
                j += 1

    verts = [pv[0] + qv[0]]
    for e in merged[:-1]:
        verts.append(verts[-1] + e)
    return ConvexPolygon.from_ccw(verts)


def exposed_face(p: ConvexPolygon, u: Direction) -> Face:
    """Face of p maximizing the inner product with u (vertex or single edge)."""
    vs = p.vertices
    n = len(vs)
    dots = [u.dx * v.x + u.dy * v.y for v in vs]
    best = max(dots)
    hits = [i for i, d in enumerate(dots) if d == best]
    if len(hits) == 1:
        return Face.vertex(vs[hits[0]])
    if len(hits) == 2:
        i, j = hits
        if j == i + 1:
            return Face.edge(vs[i], vs[j])
        if i == 0 and j == n - 1:
            return Face.edge(vs[j], vs[i])
    raise NotConvex("more than two vertices expose the same direction")


def _face_vertex_index(p: ConvexPolygon, f: Face) -> int:
    try:
        return p.vertices.index(f.points[0])
    except ValueError:
        raise FaceNotOnPolygon(f"{f.points[0]} is not a vertex of the polygon") from None


def _face_edge_index(p: ConvexPolygon, f: Face) -> int:
    for i, (a, b) in enumerate(p.edges()):
        if (a, b) == f.points:
            return i
    raise FaceNotOnPolygon("edge is not a ccw edge of the polygon")


def normal_cone(p: ConvexPolygon, f: Face) -> PlanarCone:
    """Outer normal cone: a single ray for an edge, a pointed cone for a vertex."""
    if f.kind == "edge":
        i = _face_edge_index(p, f)
        return PlanarCone.ray(Direction.of(p.edge_vector(i)).perp_cw())
    i = _face_vertex_index(p, f)
    n = len(p.vertices)
    n_in = Direction.of(p.vertices[i] - p.vertices[(i - 1) % n]).perp_cw()
    n_out = Direction.of(p.edge_vector(i)).perp_cw()
    return PlanarCone.pointed(n_in, n_out)


def support_cone(p: ConvexPolygon, f: Face) -> PlanarCone:
    """Cone of directions leading from the face into the polygon.

    For a vertex this is the pointed cone spanned by the two incident edge
    directions (outgoing edge first, ccw); for an edge it is the closed
    halfplane on the polygon's side of the edge line.
    """
    if f.kind == "edge":
        i = _face_edge_index(p, f)
        return PlanarCone.halfplane(Direction.of(p.edge_vector(i)))
    i = _face_vertex_index(p, f)
    n = len(p.vertices)
    d_out = Direction.of(p.edge_vector(i))
    d_back = Direction.of(p.vertices[(i - 1) % n] - p.vertices[i])
    return PlanarCone.pointed(d_out, d_back)


def vertex_support_cone(p: ConvexPolygon, i: int) -> PlanarCone:
    """support_cone at vertex index i, skipping the face lookup."""
    n = len(p.vertices)
    d_out = Direction.of(p.edge_vector(i))
    d_back = Direction.of(p.vertices[(i - 1) % n] - p.vertices[i])
    return PlanarCone.pointed(d_out, d_back)


@dataclass(frozen=True)
class IntersectionResult:
    """Outcome of intersect_convex.

    kind "polygon" carries a ConvexPolygon; "segment" and "point" carry the
    degenerate geometry in points; "empty" carries nothing.
    """

    kind: str  # "polygon" | "segment" | "point" | "empty"
    polygon: ConvexPolygon | None = None
    points: tuple = ()

    def area(self):
        return self.polygon.area() if self.kind == "polygon" else ZERO

    @property
    def is_lower_dimensional(self):
        return self.kind in ("segment", "point")


def halfplanes_of(p: ConvexPolygon):
    """Per-edge coefficients (a, b, c) with the polygon inside a*x + b*y <= c."""
    if p._hp is None:
        rows = []
        for (t, h) in p.edges():
            e = h - t
            a, b = e.y, -e.x
            rows.append((a, b, a * t.x + b * t.y))
        object.__setattr__(p, "_hp", tuple(rows))
    return p._hp


def clip_by_halfplane(pts, a, b, c):
    """One Sutherland-Hodgman pass: keep the side a*x + b*y <= c."""
    out = []
    n = len(pts)
    if n == 0:
        return out
    sv = [c - (a * p.x + b * p.y) for p in pts]
    for i in range(n):
        j = (i + 1) % n
        si, sj = sv[i], sv[j]
        if si >= 0:
            out.append(pts[i])
            if sj < 0:
                t = si / (si - sj)
                out.append(pts[i] + (pts[j] - pts[i]).scaled(t))
        elif sj >= 0:
            t = si / (si - sj)
            out.append(pts[i] + (pts[j] - pts[i]).scaled(t))
    return out


def _dedupe_cyclic(pts):
    out = []
    for p in pts:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _fuse_collinear(pts):
    """Drop middle points of collinear runs (cyclically)."""
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            if orient(pts[(i - 1) % n], pts[i], pts[(i + 1) % n]) == 0:
                pts.pop(i)
                changed = True
                break
    return pts


def intersect_convex(p: ConvexPolygon, q: ConvexPolygon) -> IntersectionResult:
    """Exact intersection of two convex polygons (Sutherland-Hodgman).

    Clipping a convex subject against convex clip edges yields the exact
    intersection; the raw output may repeat vertices or contain collinear
    runs, which are fused before classification.
    """
    pts = list(p.vertices)
    for (a, b, c) in halfplanes_of(q):
        pts = clip_by_halfplane(pts, a, b, c)
        if not pts:
            return IntersectionResult("empty")
    pts = _dedupe_cyclic(pts)
    if not pts:
        return IntersectionResult("empty")
    if len(pts) == 1:
        return IntersectionResult("point", points=tuple(pts))
    if all(orient(pts[0], pts[1], r) == 0 for r in pts[2:]):
        # Collapse collinear output to its extreme points.
        lo = min(pts, key=lambda r: (r.x, r.y))
        hi = max(pts, key=lambda r: (r.x, r.y))
        if lo == hi:
            return IntersectionResult("point", points=(lo,))
        return IntersectionResult("segment", points=(lo, hi))
    pts = _fuse_collinear(pts)
    return IntersectionResult("polygon", polygon=ConvexPolygon.from_ccw(pts))


def apply_linear(p: ConvexPolygon, m):
    """Image under an invertible rational 2x2 matrix ((a, b), (c, d))."""
    (a, b), (c, d) = m
    det = a * d - b * c
    if det == 0:
        raise ZeroArea("linear map is singular")
    mapped = [Point2(a * v.x + b * v.y, c * v.x + d * v.y) for v in p.vertices]
    if det < 0:
        mapped.reverse()
    return ConvexPolygon.from_ccw(mapped)
