"""Face isothesis, pair synisothesis, trivial associates, and symmetry centers.

Two faces are isothetic when one is a translate of the other with the same
support cone.  Two pairs of bodies are synisothetic when, for every direction,
the exposed faces of corresponding pairs agree in length and support cone as
unordered pairs.  Both notions are invariants of the cross covariogram; the
second is exactly what reconstruction can see, which is why the parallelogram
counterexample families keep it while not being trivial associates.

The directional quantifier is discharged finitely: exposed faces only change
across the rays of the four normal fans, so it suffices to test every fan ray
plus one representative inside each cell of their common refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    ConvexPolygon,
    Direction,
    Face,
    Point2,
    ccw_less,
    exposed_face,
    reflect,
    support_cone,
)


@dataclass(frozen=True)
class PairOfBodies:
    """An ordered pair of convex polygons, the object reconstruction works on."""

    first: ConvexPolygon
    second: ConvexPolygon


def isothetic(p: ConvexPolygon, f: Face, q: ConvexPolygon, g: Face) -> bool:
    """True when g is a translate of f and the support cones coincide.

    Raises FaceNotOnPolygon when a face does not belong to its polygon (the
    support-cone lookup validates membership).
    """
    cone_p = support_cone(p, f)
    cone_q = support_cone(q, g)
    if f.kind != g.kind:
        return False
    if f.kind == "edge":
        shift = g.points[0] - f.points[0]
        if g.points[1] - f.points[1] != shift:
            return False
    return cone_p == cone_q


def _fan_directions(polys) -> list[Direction]:
    """Rays and cell representatives of the common normal-fan refinement."""
    rays = set()
    for poly in polys:
        vs = poly.vertices
        for i in range(len(vs)):
            d = Direction.of(vs[(i + 1) % len(vs)] - vs[i])
            rays.add(d.perp_cw())
    ordered = sorted(rays, key=_angular_key)
    out = []
    for i, r in enumerate(ordered):
        nxt = ordered[(i + 1) % len(ordered)]
        out.append(r)
        if nxt != r:
            out.append(Direction.of(r.dx + nxt.dx, r.dy + nxt.dy))
    return out


@dataclass(frozen=True)
class _AngleKey:
    d: Direction

    def __lt__(self, other):
        return ccw_less(self.d, other.d)


def _angular_key(d: Direction):
    return _AngleKey(d)


def synisothetic(p: PairOfBodies, q: PairOfBodies) -> bool:
    """Unordered face-length and support-cone agreement in every direction.

    Pairs are compared exactly as given; callers following the covariogram
    convention pass (K, -L).
    """
    for u in _fan_directions((p.first, p.second, q.first, q.second)):
        fp1 = exposed_face(p.first, u)
        fp2 = exposed_face(p.second, u)
        fq1 = exposed_face(q.first, u)
        fq2 = exposed_face(q.second, u)
        lp = (fp1.length_units(), fp2.length_units())
        lq = (fq1.length_units(), fq2.length_units())
        if not (lp == lq or lp == (lq[1], lq[0])):
            return False
        cp = (support_cone(p.first, fp1), support_cone(p.second, fp2))
        cq = (support_cone(q.first, fq1), support_cone(q.second, fq2))
        if not (cp == cq or cp == (cq[1], cq[0])):
            return False
    return True


@dataclass(frozen=True)
class TrivialAssociateWitness:
    """branch is "same" (common translation) or "swapped_reflected"."""

    branch: str
    x: Point2


def trivial_associates(p: PairOfBodies, q: PairOfBodies):
    """Witness that p = (q.first + x, q.second + x) or p = (-q.second + x, -q.first + x).

    Returns a TrivialAssociateWitness or None.  These are exactly the
    relabelings that never change a cross covariogram.
    """
    x = p.first.vertices[0] - q.first.vertices[0]
    if q.first.translate(x) == p.first and q.second.translate(x) == p.second:
        return TrivialAssociateWitness("same", x)
    rs = reflect(q.second)
    rf = reflect(q.first)
    x = p.first.vertices[0] - rs.vertices[0]
    if rs.translate(x) == p.first and rf.translate(x) == p.second:
        return TrivialAssociateWitness("swapped_reflected", x)
    return None


def central_symmetry_center(p: ConvexPolygon):
    """Center c with p = -p + 2c, or None.

    A polygon is centrally symmetric iff the vertex count is even and
    opposite vertices share a common midpoint.
    """
    vs = p.vertices
    n = len(vs)
    if n % 2 != 0:
        return None
    half = n // 2
    double_center = vs[0] + vs[half]
    for i in range(1, half):
        if vs[i] + vs[i + half] != double_center:
            return None
    return Point2(double_center.x / 2, double_center.y / 2)


def symmetry_witness(k: ConvexPolygon, l: ConvexPolygon):
    """(z, branch) with g_{K,L} symmetric about z, or None.

    branch "equal": K = L + z, so g is a shifted autocovariogram (always
    even).  branch "central": both bodies centrally symmetric, and z is the
    difference of their centers.  These two cases are the complete geometric
    characterization of an even cross covariogram.
    """
    z = k.vertices[0] - l.vertices[0]
    if l.translate(z) == k:
        return z, "equal"
    ck = central_symmetry_center(k)
    cl = central_symmetry_center(l)
    if ck is not None and cl is not None:
        return ck - cl, "central"
    return None


def symmetry_point(k: ConvexPolygon, l: ConvexPolygon):
    """The point z with g_{K,L}(z + x) = g_{K,L}(z - x) for all x, or None."""
    found = symmetry_witness(k, l)
    return None if found is None else found[0]
