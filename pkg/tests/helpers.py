"""Seeded generators and brute-force oracles shared across the test suite.

The brute-force code here deliberately avoids the library's own geometry
primitives: it works on ``fractions.Fraction`` pairs with its own hull,
clipping and intersection routines, so a bug in the package cannot hide
behind an oracle built from the same parts.
"""

from fractions import Fraction

from crosscov.cones import ConePair, hull_of_union
from crosscov.geometry import (
    Direction,
    PlanarCone,
    TooFewVertices,
    ZeroArea,
    convex_hull,
    point,
    polygon,
)
from crosscov.rational import rational
from crosscov.synisothesis import PairOfBodies

# ---------------------------------------------------------------------------
# conversions between package types and plain Fraction tuples


def frac(value):
    """Exact Fraction copy of a package rational."""
    return Fraction(int(value.numerator), int(value.denominator))


def frac_point(pt):
    return (frac(pt.x), frac(pt.y))


def frac_vertices(poly):
    return [frac_point(v) for v in poly.vertices]


def poly_from_fracs(pts):
    return polygon(*[(rational(p[0].numerator, p[0].denominator),
                      rational(p[1].numerator, p[1].denominator)) for p in pts])


# ---------------------------------------------------------------------------
# seeded random generators


def random_rational(rng, lo=-5, hi=5, den=4):
    return rational(rng.randint(lo * den, hi * den), den)


def random_point(rng, span=5, den=4):
    return point(random_rational(rng, -span, span, den),
                 random_rational(rng, -span, span, den))


def random_polygon(rng, min_vertices=3, max_vertices=8, span=5, den=4):
    """Convex polygon with a vertex count in the requested range."""
    while True:
        pts = [random_point(rng, span, den) for _ in range(max_vertices + 4)]
        try:
            hull = convex_hull(pts)
        except (TooFewVertices, ZeroArea):
            continue
        if min_vertices <= len(hull.vertices) <= max_vertices:
            return hull


def random_pair(rng, **kwargs):
    return PairOfBodies(random_polygon(rng, **kwargs), random_polygon(rng, **kwargs))


def circle_polygon(rng, count, radius=5):
    """Polygon with exactly ``count`` vertices, all on a rational circle.

    Rational points on the circle come from the half-angle chart
    t -> (r*(1-t^2)/(1+t^2), r*2t/(1+t^2)); points on a circle are in
    strictly convex position, so the hull keeps every one of them.
    """
    candidates = [Fraction(i, 8) for i in range(-48, 49)]
    pts = []
    for t in rng.sample(candidates, count):
        x = radius * (1 - t * t) / (1 + t * t)
        y = radius * 2 * t / (1 + t * t)
        pts.append(point(rational(x.numerator, x.denominator),
                         rational(y.numerator, y.denominator)))
    hull = convex_hull(pts)
    assert len(hull.vertices) == count
    return hull


def interior_point(rng, poly):
    """Random rational point strictly inside ``poly``."""
    weights = [rational(rng.randint(1, 9)) for _ in poly.vertices]
    total = sum(weights)
    x = sum(w * v.x for w, v in zip(weights, poly.vertices)) / total
    y = sum(w * v.y for w, v in zip(weights, poly.vertices)) / total
    return point(x, y)


def random_linear_map(rng, span=3):
    """2x2 rational matrix with nonzero determinant."""
    while True:
        m = ((random_rational(rng, -span, span, 2), random_rational(rng, -span, span, 2)),
             (random_rational(rng, -span, span, 2), random_rational(rng, -span, span, 2)))
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return m


# --- cone generators -------------------------------------------------------


def direction_from_slope(t):
    """Upper-halfplane direction for slope parameter t.

    t = 0 gives (1, 0); increasing t turns counterclockwise through (0, 1)
    toward, but never reaching, (-1, 0).
    """
    from math import gcd

    num, den = t.numerator, t.denominator
    dx, dy = den * den - num * num, 2 * num * den
    g = gcd(abs(dx), abs(dy))
    return Direction(dx // g, dy // g) if g else Direction(dx, dy)


def random_slopes(rng, count, den=8, top=1):
    """Distinct slope parameters, coarse enough that the support of any
    cone pair built from them spans a healthy angle (no hairline cones)."""
    candidates = [Fraction(i, den) for i in range(0, top * den)]
    return sorted(rng.sample(candidates, count))


def support_is_scannable(pair):
    """True if the support cone contains one of the recovery scan's
    top-level sample rays.

    Support discovery probes the declared halfplane at a fixed initial
    resolution, so a sufficiently thin support cone is invisible to any
    finite probe budget; generated pairs are conditioned on visibility.
    """
    sup = hull_of_union(pair.a, pair.b.reflect())
    lo = sup.lower.as_point()
    mid = sup.lower.perp_ccw().as_point()
    for num in (1, 2, 3):
        t = rational(num, 4)
        px = lo.x + (mid.x - lo.x) * t
        py = lo.y + (mid.y - lo.y) * t
        inside_lower = sup.lower.dx * py - sup.lower.dy * px > 0
        inside_upper = px * sup.upper.dy - py * sup.upper.dx > 0
        if inside_lower and inside_upper:
            return True
    return False


def random_cone_pair(rng, shape=None):
    """Pointed cone pair with disjoint interiors and finite covariogram.

    ``shape`` picks how the rays of the two cones interleave on the circle:
    "disjoint", "crossing" or "nested" four-ray layouts, or a three-ray
    layout sharing the middle ray.  Default is a random choice among the
    four-ray layouts.
    """
    if shape is None:
        shape = rng.choice(("disjoint", "crossing", "nested"))
    while True:
        pair = _cone_pair_draw(rng, shape)
        if support_is_scannable(pair):
            return pair


def _cone_pair_draw(rng, shape):
    if shape == "three_ray":
        t1, t2, t3 = random_slopes(rng, 3)
        d1, d2, d3 = (direction_from_slope(t) for t in (t1, t2, t3))
        a_rays, nb_rays = (d1, d2), (d2, d3)
    else:
        t1, t2, t3, t4 = random_slopes(rng, 4)
        d1, d2, d3, d4 = (direction_from_slope(t) for t in (t1, t2, t3, t4))
        if shape == "disjoint":
            a_rays, nb_rays = (d1, d2), (d3, d4)
        elif shape == "crossing":
            a_rays, nb_rays = (d1, d3), (d2, d4)
        elif shape == "nested":
            a_rays, nb_rays = (d2, d3), (d1, d4)
        else:
            raise ValueError(f"unknown shape {shape!r}")
    a = PlanarCone.pointed(a_rays[0], a_rays[1])
    b = PlanarCone.pointed(nb_rays[0], nb_rays[1]).reflect()
    return ConePair(a, b)


# ---------------------------------------------------------------------------
# brute-force geometry on Fraction pairs


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_hull(points):
    """Monotone-chain hull; returns ccw vertex list (may have < 3 points)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3 or all(cross(hull[0], hull[1], p) == 0 for p in hull[2:]):
        # all input points collinear
        return [min(pts), max(pts)]
    return hull


def brute_area(pts):
    """Shoelace area of a ccw vertex list."""
    if len(pts) < 3:
        return Fraction(0)
    twice = Fraction(0)
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        twice += a[0] * b[1] - a[1] * b[0]
    return abs(twice) / 2


def brute_contains(pts, q, strict=False):
    """Closed (or strict) containment of q in the ccw polygon pts."""
    for i in range(len(pts)):
        c = cross(pts[i], pts[(i + 1) % len(pts)], q)
        if c < 0 or (strict and c == 0):
            return False
    return True


def clip_halfplane(pts, a, b):
    """Keep the part of polygon pts on the left of the directed line a->b."""
    out = []
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        cp, cq = cross(a, b, p), cross(a, b, q)
        if cp >= 0:
            out.append(p)
        if (cp > 0 > cq) or (cp < 0 < cq):
            t = cp / (cp - cq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def brute_cov(k, l, x):
    """Exact area of k intersected with l translated by x."""
    subject = frac_vertices(k)
    fx, fy = frac(x.x), frac(x.y)
    clip = [(p[0] + fx, p[1] + fy) for p in frac_vertices(l)]
    out = subject
    for i in range(len(clip)):
        if not out:
            break
        out = clip_halfplane(out, clip[i], clip[(i + 1) % len(clip)])
    return brute_area(brute_hull(out)) if len(out) >= 3 else Fraction(0)


def brute_minkowski(p, q):
    """Vertex list of p + q, ccw."""
    sums = [(a[0] + b[0], a[1] + b[1])
            for a in frac_vertices(p) for b in frac_vertices(q)]
    return brute_hull(sums)


def segment_intersections(p0, p1, q0, q1):
    """All intersection points of two closed segments (0, 1 or 2 points)."""
    d1 = (p1[0] - p0[0], p1[1] - p0[1])
    d2 = (q1[0] - q0[0], q1[1] - q0[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        if cross(p0, p1, q0) != 0:
            return []
        hits = []
        for pt in (q0, q1):
            if _on_segment(p0, p1, pt):
                hits.append(pt)
        for pt in (p0, p1):
            if _on_segment(q0, q1, pt):
                hits.append(pt)
        return list(dict.fromkeys(hits))
    w = (q0[0] - p0[0], q0[1] - p0[1])
    t = Fraction(w[0] * d2[1] - w[1] * d2[0], denom)
    s = Fraction(w[0] * d1[1] - w[1] * d1[0], denom)
    if 0 <= t <= 1 and 0 <= s <= 1:
        return [(p0[0] + t * d1[0], p0[1] + t * d1[1])]
    return []


def _on_segment(a, b, q):
    if cross(a, b, q) != 0:
        return False
    lo_x, hi_x = min(a[0], b[0]), max(a[0], b[0])
    lo_y, hi_y = min(a[1], b[1]), max(a[1], b[1])
    return lo_x <= q[0] <= hi_x and lo_y <= q[1] <= hi_y


def brute_intersection_points(p, q):
    """All boundary/containment witnesses of p ∩ q, deduplicated."""
    pp, qq = frac_vertices(p), frac_vertices(q)
    pts = [v for v in pp if brute_contains(qq, v)]
    pts += [v for v in qq if brute_contains(pp, v)]
    for i in range(len(pp)):
        for j in range(len(qq)):
            pts += segment_intersections(pp[i], pp[(i + 1) % len(pp)],
                                         qq[j], qq[(j + 1) % len(qq)])
    return list(dict.fromkeys(pts))


def classify_brute(points):
    """Kind of the convex hull of an exact point set."""
    if not points:
        return "empty"
    hull = brute_hull(points)
    if len(hull) == 1:
        return "point"
    if len(hull) == 2:
        return "segment"
    return "polygon"


def edge_normals(poly):
    """(primitive outward normal, edge) list for a ccw polygon."""
    from math import gcd

    out = []
    for a, b in poly.edges():
        dx, dy = b.x - a.x, b.y - a.y
        nx = int(dy.numerator * dx.denominator)
        ny = int(-dx.numerator * dy.denominator)
        g = gcd(abs(nx), abs(ny))
        out.append(((nx // g, ny // g), (a, b)))
    return out
