"""Covariograms of planar cone pairs: exact evaluation, singular rays, recovery.

A cone pair (A, B) has both cones pointed with nonempty interior and disjoint
interiors.  Its covariogram g(x) = area(A intersect (B + x)) is supported on
the convex hull of A and -B, is homogeneous of degree 2, and inside the
support is a fan of at most three quadratic forms glued along the rays of
boundary(A) union -boundary(B) (two, three, or four rays in total, the
outermost two being the support boundary).

Recovery inverts this: given a black-box evaluation oracle (declared to live
in a known halfplane), find the rays, then decide which cones produced them.
With four rays the answer can be genuinely ambiguous - two different unordered
pairs share the covariogram - exactly when a certain ray section is bisected,
which is the hallmark configuration reproduced by
canonical_example_closed_form.

Finiteness caveat: when A and B share a boundary ray (equivalently the support
hull is a full halfplane), g is +infinity on an open region.  Such values are
not representable by a Rational-valued oracle, so cone_cov_eval raises
UnboundedIntersection there and the recovery entry points document that hidden
pairs must have a pointed support hull.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolated, OracleInconsistent, UnboundedIntersection
from .geometry import (
    Direction,
    ORIGIN,
    PlanarCone,
    Point2,
    ccw_less,
    cone_interiors_intersect,
    cones_share_ray,
    orient,
    point,
)
from .rational import ZERO, rational


@dataclass(frozen=True)
class ConePair:
    """Pointed cones with disjoint interiors; the covariogram's hidden datum."""

    a: PlanarCone
    b: PlanarCone

    def __post_init__(self):
        if not (self.a.is_pointed_with_interior() and self.b.is_pointed_with_interior()):
            raise HypothesisViolated("cone pair needs two pointed cones with interior")
        if cone_interiors_intersect(self.a, self.b):
            raise HypothesisViolated("cone interiors must be disjoint")

    @property
    def finite(self) -> bool:
        """True when the covariogram is finite everywhere (no shared boundary ray)."""
        return not cones_share_ray(self.a, self.b)

    def support_hull(self) -> PlanarCone:
        return hull_of_union(self.a, self.b.reflect())


def hull_of_union(c1: PlanarCone, c2: PlanarCone) -> PlanarCone:
    """Convex hull of two cones, assuming it fits in a halfplane."""
    rays = []
    for c in (c1, c2):
        if c.kind == "zero":
            continue
        rays.append(c.lower)
        if c.upper != c.lower:
            rays.append(c.upper)
    if not rays:
        return PlanarCone.zero()
    lower = next((r for r in rays if all(r.cross(s) >= 0 for s in rays)), None)
    upper = next((r for r in rays if all(s.cross(r) >= 0 for s in rays)), None)
    if lower is None or upper is None:
        raise HypothesisViolated("cone union is not contained in any halfplane")
    return PlanarCone.span(lower, upper)


def _line_pair_intersection(d1: Direction, p1: Point2, d2: Direction, p2: Point2):
    """Intersection of the lines p1 + t*d1 and p2 + s*d2, or None if parallel."""
    det = d1.cross(d2)
    if det == 0:
        return None
    w = p2 - p1
    t = (w.x * d2.dy - w.y * d2.dx) / det
    return Point2(p1.x + t * d1.dx, p1.y + t * d1.dy)


def _hull_area(pts):
    """Area of the convex hull of a few exact points (monotone chain)."""
    pts = sorted(set((p.x, p.y) for p in pts))
    if len(pts) < 3:
        return ZERO
    pts = [Point2(x, y) for x, y in pts]

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
        return ZERO
    total = ZERO
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        total += a.x * b.y - a.y * b.x
    return total / 2


def _pair_area(a: PlanarCone, b: PlanarCone, x: Point2):
    """area(A intersect (B + x)) for cones that may also be {O}."""
    if a.kind == "zero" or b.kind == "zero":
        return ZERO
    if a.kind == "ray" or b.kind == "ray":
        return ZERO
    supp = hull_of_union(a, b.reflect())
    if not supp.interior_contains(x):
        return ZERO
    if cones_share_ray(a, b):
        raise UnboundedIntersection(
            "cones share a boundary ray: the covariogram is infinite here"
        )

    candidates = [ORIGIN, x]
    for da in (a.lower, a.upper):
        for db in (b.lower, b.upper):
            p = _line_pair_intersection(da, ORIGIN, db, x)
            if p is not None:
                candidates.append(p)
    feasible = [p for p in candidates if a.contains(p) and b.contains(p - x)]
    return _hull_area(feasible)


def cone_cov_eval(pair: ConePair, x: Point2):
    """Exact covariogram of a cone pair at x.

    Zero outside the interior of the support hull; raises
    UnboundedIntersection if x lies in the open region where the value is
    infinite (only possible when pair.finite is False).
    """
    return _pair_area(pair.a, pair.b, x)


def canonical_example_closed_form(which: int, x: Point2):
    """Piecewise closed form shared by the two canonical four-ray pairs.

    which selects pair 1 or 2; both produce the same function, which is the
    point of the example.  Cells, counterclockwise from the positive x-axis:
    x2^2/2 up to the diagonal, (x2^2 - x1^2 + 2*x1*x2)/4 up to vertical,
    (x1 + x2)^2/4 up to the second diagonal, zero elsewhere.
    """
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    x1, x2 = x.x, x.y
    if x2 >= 0 and x1 - x2 >= 0:
        return x2 * x2 / 2
    if x1 >= 0 and x2 - x1 >= 0:
        return (x2 * x2 - x1 * x1 + 2 * x1 * x2) / 4
    if x1 <= 0 and x1 + x2 >= 0:
        return (x1 + x2) * (x1 + x2) / 4
    return ZERO


@dataclass(frozen=True)
class ConeOracle:
    """Black-box covariogram: exact evaluation plus a declared halfplane.

    The support must lie in {p : halfplane_normal . p >= 0}.  Recovery
    requires the hidden pair to have a pointed support hull (finite values).
    """

    eval: object
    halfplane_normal: Direction


def oracle_from_pair(pair: ConePair) -> ConeOracle:
    """Forward oracle for a known pair (used by tests and the CLI)."""
    supp = pair.support_hull()
    return ConeOracle(lambda x: _pair_area(pair.a, pair.b, x), supp.lower.perp_ccw())


# --- piecewise-quadratic fan detection along a chord ---------------------


def _fit3(t0, v0, t1, v1, t2, v2):
    """Quadratic (c0, c1, c2) with q(t) = c0 + c1 t + c2 t^2 through 3 points."""
    d01, d02, d12 = t0 - t1, t0 - t2, t1 - t2
    l0 = v0 / (d01 * d02)
    l1 = v1 / (-d01 * d12)
    l2 = v2 / (d02 * d12)
    c2 = l0 + l1 + l2
    c1 = -(l0 * (t1 + t2) + l1 * (t0 + t2) + l2 * (t0 + t1))
    c0 = l0 * t1 * t2 + l1 * t0 * t2 + l2 * t0 * t1
    return (c0, c1, c2)


def _qval(q, t):
    return q[0] + q[1] * t + q[2] * t * t


def _rational_roots(q):
    """Exact rational roots of c0 + c1 t + c2 t^2 (empty if irrational/none)."""
    c0, c1, c2 = q
    if c2 == 0:
        if c1 == 0:
            return []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    from math import isqrt

    rn, rd = isqrt(int(num)), isqrt(int(den))
    if rn * rn != num or rd * rd != den:
        return []
    root = rational(rn, rd)
    return sorted({(-c1 - root) / (2 * c2), (-c1 + root) / (2 * c2)})


_MIN_WIDTH_SPLITS = 24
_MAX_DEPTH = 64


class _ChordScan:
    """Certified decomposition of t -> g(a + t (b - a)) into quadratic pieces."""

    def __init__(self, evaluate, a: Point2, b: Point2):
        self.a = a
        self.w = b - a
        self._eval = evaluate
        self._cache = {}
        self.probes = 0

    def point_at(self, t):
        return self.a + self.w.scaled(t)

    def f(self, t):
        v = self._cache.get(t)
        if v is None:
            v = self._eval(self.point_at(t))
            self._cache[t] = v
            self.probes += 1
        return v

    def _certify(self, s, e):
        """Fitted quadratic if it reproduces g at five samples of [s, e]."""
        w = e - s
        m = s + w / 2
        q = _fit3(s, self.f(s), m, self.f(m), e, self.f(e))
        if self.f(s + w / 4) == _qval(q, s + w / 4) and self.f(s + 3 * w / 4) == _qval(
            q, s + 3 * w / 4
        ):
            return q
        return None

    def pieces(self):
        """Exact tiling [(t0, t1, quadratic), ...] of [0, 1]."""
        zero, one = rational(0), rational(1)
        min_width = rational(1, 2**_MIN_WIDTH_SPLITS)
        stack = [(zero, one, 0)]
        certified = []
        gaps = []
        while stack:
            s, e, depth = stack.pop()
            if depth > _MAX_DEPTH:
                raise OracleInconsistent("chord subdivision exceeded maximum depth")
            q = self._certify(s, e)
            if q is not None:
                certified.append((s, e, q))
                continue
            if e - s <= min_width:
                gaps.append((s, e))
                continue
            m = s + (e - s) / 2
            stack.append((s, m, depth + 1))
            stack.append((m, e, depth + 1))

        certified.sort(key=lambda r: r[0])
        gaps.sort(key=lambda r: r[0])
        return self._resolve(certified, gaps)

    def _neighbor_polys(self, certified, s, e):
        left = next((q for (cs, ce, q) in reversed(certified) if ce == s), None)
        right = next((q for (cs, ce, q) in certified if cs == e), None)
        return left, right

    def _resolve(self, certified, gaps):
        """Replace uncertified slivers with exact breakpoints between neighbors."""
        breaks = {}
        for (s, e) in gaps:
            ql, qr = self._neighbor_polys(certified, s, e)
            if ql is None or qr is None:
                raise OracleInconsistent("piece boundary too close to the chord end")
            if ql == qr:
                # Both neighbors carry one quadratic; a hidden pocket of a
                # different piece inside the sliver is narrower than the
                # subdivision floor and cannot be certified either way.
                raise OracleInconsistent("unresolvable pocket between equal pieces")
            roots = [r for r in _rational_roots(_qsub(ql, qr)) if s <= r <= e]
            if len(roots) != 1:
                raise OracleInconsistent("piece boundary is not an exact rational point")
            t = roots[0]
            if self.f(t) != _qval(ql, t):
                raise OracleInconsistent("pieces disagree with the oracle at their seam")
            breaks[(s, e)] = t

        pieces = []
        cursor = None
        poly = None
        events = sorted(
            [(s, e, q, None) for (s, e, q) in certified]
            + [(s, e, None, breaks[(s, e)]) for (s, e) in gaps],
            key=lambda r: r[0],
        )
        for (s, e, q, brk) in events:
            if q is not None:
                if poly is None:
                    poly = q
                    if cursor is None:
                        cursor = s
                elif q != poly:
                    pieces.append((cursor, s, poly))
                    poly = q
                    cursor = s
            else:
                if poly is None:
                    raise OracleInconsistent("chord starts inside an unresolved sliver")
                pieces.append((cursor, brk, poly))
                poly = None
                cursor = brk
        if poly is None:
            raise OracleInconsistent("chord ends inside an unresolved sliver")
        pieces.append((cursor, rational(1), poly))

        merged = []
        for piece in pieces:
            if merged and merged[-1][2] == piece[2]:
                merged[-1] = (merged[-1][0], piece[1], piece[2])
            else:
                merged.append(piece)
        return merged


def _qsub(q1, q2):
    return (q1[0] - q2[0], q1[1] - q2[1], q1[2] - q2[2])


def _form_from_chord(a: Point2, w: Point2, q):
    """Quadratic form (f11, f12, f22) matching q(t) = Q(a + t w).

    Q(x, y) = f11 x^2 + f12 x y + f22 y^2; the three chord coefficients pin
    Q(a), Q(w) and the polar value, a 3x3 rational solve.
    """
    c0, c1, c2 = q
    rows = [
        (a.x * a.x, a.x * a.y, a.y * a.y, c0),
        (w.x * w.x, w.x * w.y, w.y * w.y, c2),
        (2 * a.x * w.x, a.x * w.y + a.y * w.x, 2 * a.y * w.y, c1),
    ]
    return _solve3(rows)


def _solve3(rows):
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = rows
    det = (
        a1 * (b2 * c3 - b3 * c2)
        - b1 * (a2 * c3 - a3 * c2)
        + c1 * (a2 * b3 - a3 * b2)
    )
    if det == 0:
        raise OracleInconsistent("degenerate chord geometry")
    dx = (
        d1 * (b2 * c3 - b3 * c2)
        - b1 * (d2 * c3 - d3 * c2)
        + c1 * (d2 * b3 - d3 * b2)
    )
    dy = (
        a1 * (d2 * c3 - d3 * c2)
        - d1 * (a2 * c3 - a3 * c2)
        + c1 * (a2 * d3 - a3 * d2)
    )
    dz = (
        a1 * (b2 * d3 - b3 * d2)
        - b1 * (a2 * d3 - a3 * d2)
        + d1 * (a2 * b3 - a3 * b2)
    )
    return (dx / det, dy / det, dz / det)


def _form_value(form, p: Point2):
    f11, f12, f22 = form
    return f11 * p.x * p.x + f12 * p.x * p.y + f22 * p.y * p.y


def _form_gradient_is_zero(form, p: Point2) -> bool:
    f11, f12, f22 = form
    gx = 2 * f11 * p.x + f12 * p.y
    gy = f12 * p.x + 2 * f22 * p.y
    return gx == 0 and gy == 0


_ZERO_FORM = (ZERO, ZERO, ZERO)


def _chord_cells(oracle_eval, a_pt: Point2, b_pt: Point2):
    """Angular cells along one chord: [(dir_lo, dir_hi, form), ...]."""
    scan = _ChordScan(oracle_eval, a_pt, b_pt)
    pieces = scan.pieces()
    w = b_pt - a_pt
    cells = []
    for (t0, t1, q) in pieces:
        form = _ZERO_FORM if q == (ZERO, ZERO, ZERO) else _form_from_chord(a_pt, w, q)
        d0 = Direction.of(scan.point_at(t0))
        d1 = Direction.of(scan.point_at(t1))
        cells.append((d0, d1, form))
    return cells


def _fan_cells(oracle: ConeOracle):
    """Full fan over the declared halfplane, merging the two chord scans."""
    n = oracle.halfplane_normal
    lo = n.perp_cw().as_point()
    mid = n.as_point()
    hi = n.perp_ccw().as_point()
    cells = _chord_cells(oracle.eval, lo, mid) + _chord_cells(oracle.eval, mid, hi)
    merged = []
    for cell in cells:
        if merged and merged[-1][2] == cell[2]:
            merged[-1] = (merged[-1][0], cell[1], cell[2])
        else:
            merged.append(cell)
    return merged


def singular_rays(oracle: ConeOracle):
    """Rays (ccw) where the covariogram fails to be C2, support boundary included.

    Probes the oracle along two rational chords spanning the declared
    halfplane, certifies a piecewise-quadratic decomposition, confirms
    homogeneity at radius 2, and reports the cell boundaries.  Raises
    OracleInconsistent if the refinement hits its depth cap or any exactness
    check fails.
    """
    cells = _fan_cells(oracle)
    interior = [c for c in cells if c[2] != _ZERO_FORM]
    if not interior:
        raise OracleInconsistent("oracle vanishes on the whole declared halfplane")
    rays = [interior[0][0]]
    for (d0, d1, _form) in interior:
        if d0 != rays[-1]:
            raise OracleInconsistent("support is not a single angular interval")
        rays.append(d1)
    # Homogeneity spot-checks at radius 2 on one interior direction per cell.
    for (d0, d1, form) in interior:
        m = point(d0.dx + d1.dx, d0.dy + d1.dy)
        v1 = oracle.eval(m)
        v2 = oracle.eval(m.scaled(rational(2)))
        if v1 != _form_value(form, m) or v2 != 4 * v1:
            raise OracleInconsistent("oracle is not homogeneous of degree 2")
    return rays


@dataclass(frozen=True)
class ConeRecoveryResult:
    """Outcome of recover_cone_pair.

    solutions holds one pair, or two when the covariogram genuinely does not
    determine the pair (four rays with the middle section bisected); case
    records which branch of the analysis fired.
    """

    rays: tuple
    case: str
    solutions: tuple

    @property
    def ambiguous(self) -> bool:
        return len(self.solutions) > 1


def _pair_from_unordered(c1: PlanarCone, c2: PlanarCone) -> ConePair:
    """Order {A, -B} canonically and return ConePair(A, B)."""
    first, second = c1, c2
    if ccw_less(second.lower, first.lower) or (
        second.lower == first.lower and ccw_less(second.upper, first.upper)
    ):
        first, second = second, first
    return ConePair(first, second.reflect())


def _verify_solution(oracle: ConeOracle, pair: ConePair, rays):
    """Exact spot agreement between the oracle and a recovered pair."""
    probes = []
    for d in rays:
        probes.append(d.as_point())
    for d0, d1 in zip(rays, rays[1:]):
        m = point(d0.dx + d1.dx, d0.dy + d1.dy)
        probes.append(m)
        probes.append(m.scaled(rational(2)))
        probes.append(m.scaled(rational(1, 3)))
    for p in probes:
        if oracle.eval(p) != _pair_area(pair.a, pair.b, p):
            raise OracleInconsistent("recovered pair disagrees with the oracle")


def recover_cone_pair(oracle: ConeOracle, known_support: PlanarCone | None = None) -> ConeRecoveryResult:
    """Invert a cone-pair covariogram given only evaluation access.

    known_support (a pointed cone) skips the support-boundary search; the
    reconstruction walk passes the polygon's vertex cone here.  The hidden
    pair must be admissible with finite covariogram; anything else surfaces
    as OracleInconsistent.
    """
    if known_support is not None:
        lo = known_support.lower.as_point()
        hi = known_support.upper.as_point()
        cells = [c for c in _chord_cells(oracle.eval, lo, hi) if c[2] != _ZERO_FORM]
        if not cells:
            raise OracleInconsistent("oracle vanishes on the declared support cone")
        rays = [cells[0][0]]
        for (d0, d1, _f) in cells:
            if d0 != rays[-1]:
                raise OracleInconsistent("support is not a single angular interval")
            rays.append(d1)
        if rays[0] != known_support.lower or rays[-1] != known_support.upper:
            raise OracleInconsistent("oracle support does not fill the declared cone")
        forms = [c[2] for c in cells]
    else:
        cells = _fan_cells(oracle)
        interior = [c for c in cells if c[2] != _ZERO_FORM]
        if not interior:
            raise OracleInconsistent("oracle vanishes on the whole declared halfplane")
        rays = [interior[0][0]]
        for (d0, d1, _f) in interior:
            if d0 != rays[-1]:
                raise OracleInconsistent("support is not a single angular interval")
            rays.append(d1)
        forms = [c[2] for c in interior]

    if len(rays) == 2:
        cone = PlanarCone.pointed(rays[0], rays[1])
        result = ConeRecoveryResult(
            tuple(rays), "two_ray", (_pair_from_unordered(cone, cone),)
        )
    elif len(rays) == 3:
        result = _three_ray_case(rays, forms)
    elif len(rays) == 4:
        result = _four_ray_case(oracle, rays, forms)
    else:
        raise OracleInconsistent(f"{len(rays)} singular rays; a cone pair produces 2-4")

    for pair in result.solutions:
        _verify_solution(oracle, pair, rays)
    return result


def _three_ray_case(rays, forms):
    """One ray of the four coincides; slope order at the outer rays tells which."""
    s1, mid, s2 = rays
    lower_first_order = not _form_gradient_is_zero(forms[0], s1.as_point())
    upper_first_order = not _form_gradient_is_zero(forms[1], s2.as_point())
    if lower_first_order and upper_first_order:
        raise OracleInconsistent("first-order decay at both support rays")
    if lower_first_order:
        case = "three_ray_shared_lower"
        pair = _pair_from_unordered(PlanarCone.pointed(s1, mid), PlanarCone.pointed(s1, s2))
    elif upper_first_order:
        case = "three_ray_shared_upper"
        pair = _pair_from_unordered(PlanarCone.pointed(mid, s2), PlanarCone.pointed(s1, s2))
    else:
        case = "three_ray_shared_middle"
        pair = _pair_from_unordered(PlanarCone.pointed(s1, mid), PlanarCone.pointed(mid, s2))
    return ConeRecoveryResult(tuple(rays), case, (pair,))


def _four_ray_case(oracle: ConeOracle, rays, forms):
    """Compare g on the second ray with the three candidate section areas."""
    t1, t2, t3, t4 = rays
    p2 = t2.as_point()
    a2 = _line_pair_intersection(t4, ORIGIN, t1, p2)
    b2 = _line_pair_intersection(t1, ORIGIN, t4, p2)
    if a2 is None or b2 is None:
        raise OracleInconsistent("support rays are parallel")
    par_area = b2.cross(a2)
    if par_area < 0:
        par_area = -par_area
    c2 = _line_pair_intersection(t3, ORIGIN, Direction.of(a2 - p2), p2)
    if c2 is None:
        raise OracleInconsistent("third ray is parallel to the section")
    seg = a2 - p2
    off = c2 - p2
    ratio = off.x / seg.x if seg.x != 0 else off.y / seg.y
    if not (0 < ratio < 1):
        raise OracleInconsistent("third ray misses the open section")

    v = oracle.eval(p2)
    if _form_value(forms[0], p2) != v or _form_value(forms[1], p2) != v:
        raise OracleInconsistent("cell forms disagree at their shared ray")

    case1 = par_area / 2
    case2 = ratio * par_area / 2
    case3 = (1 - ratio) * par_area / 2
    if v == case1:
        pair = _pair_from_unordered(PlanarCone.pointed(t1, t3), PlanarCone.pointed(t2, t4))
        return ConeRecoveryResult(tuple(rays), "four_ray_case_1", (pair,))
    if case2 == case3:
        if v == case2:
            inner = _pair_from_unordered(
                PlanarCone.pointed(t2, t3), PlanarCone.pointed(t1, t4)
            )
            outer = _pair_from_unordered(
                PlanarCone.pointed(t1, t2), PlanarCone.pointed(t3, t4)
            )
            return ConeRecoveryResult(tuple(rays), "four_ray_ambiguous", (inner, outer))
        raise OracleInconsistent("value at the second ray matches no section area")
    if v == case2:
        pair = _pair_from_unordered(PlanarCone.pointed(t2, t3), PlanarCone.pointed(t1, t4))
        return ConeRecoveryResult(tuple(rays), "four_ray_case_2", (pair,))
    if v == case3:
        pair = _pair_from_unordered(PlanarCone.pointed(t1, t2), PlanarCone.pointed(t3, t4))
        return ConeRecoveryResult(tuple(rays), "four_ray_case_3", (pair,))
    raise OracleInconsistent("value at the second ray matches no section area")


def cone_quad_identity_residual(a: PlanarCone, b: PlanarCone, c: PlanarCone, d: PlanarCone, x: Point2):
    """g_{A,C}(x) + g_{B,D}(x) - g_{A,D}(x) - g_{B,C}(x), exactly.

    A and B must sit in the open upper halfplane (touching {y = 0} only at the
    origin), C and D in the closed lower halfplane; each may instead be {O}.
    The four pair covariograms are then finite everywhere, and the identity
    "residual vanishes identically" characterizes A == B or C == D under the
    positional hypotheses.
    """
    for name, cone in (("a", a), ("b", b)):
        if cone.kind == "zero":
            continue
        if cone.kind != "pointed" or cone.lower.dy <= 0 or cone.upper.dy <= 0:
            raise HypothesisViolated(
                f"cone {name} must be pointed in the open upper halfplane or zero"
            )
    for name, cone in (("c", c), ("d", d)):
        if cone.kind == "zero":
            continue
        if cone.kind != "pointed" or cone.lower.dy > 0 or cone.upper.dy > 0:
            raise HypothesisViolated(
                f"cone {name} must be pointed in the closed lower halfplane or zero"
            )
    return (
        _pair_area(a, c, x)
        + _pair_area(b, d, x)
        - _pair_area(a, d, x)
        - _pair_area(b, c, x)
    )


def same_pair_up_to_reflection_swap(p: ConePair, q: ConePair) -> bool:
    """The two covariogram-preserving relabelings of a cone pair."""
    if p.a == q.a and p.b == q.b:
        return True
    return p.a == q.b.reflect() and p.b == q.a.reflect()
