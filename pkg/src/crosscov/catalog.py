"""Generators for the parallelogram and cone counterexample families.

Each family is a pair of polygon pairs sharing one cross covariogram while
not being trivial associates.  Families 1/2 are parallelograms built from
four fixed segment directions; families 3/4 are parallelograms sharing the
horizontal direction, where the covariogram coincidence comes from swapping
one edge length between the bodies.  The segment generators are kept with
integer endpoints, so every vertex is rational; the usual unit-length
normalization of the diagonal generators is absorbed into the scale
parameters, which reparameterizes the same families.

verify_equal_covariogram is the probe-based equality check used by tests and
the CLI: piecewise-quadratic functions that agree on the stratified probe set
(support vertices, edge midpoints, points straddling every wall of the
second singular set, plus seeded uniform rational points) agree in practice,
though the stratification is a documented heuristic, not a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import covariogram
from .errors import BadParams
from .geometry import ConvexPolygon, Direction, PlanarCone, Point2, convex_hull
from .cones import ConePair
from .rational import rational
from .synisothesis import PairOfBodies

_I1 = Point2(rational(1), rational(0))
_I2 = Point2(rational(1), rational(1))
_I3 = Point2(rational(0), rational(1))
_I4 = Point2(rational(-1), rational(1))


@dataclass(frozen=True)
class Parall12Params:
    """Scales for the first counterexample family; all four must be positive."""

    alpha: object
    beta: object
    gamma: object
    delta: object
    y: Point2

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            value = rational(getattr(self, name))
            if value <= 0:
                raise BadParams(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class Parall34Params:
    """Scales plus slope m for the second family.

    Degenerate parameter choices would make the two pairs trivial associates,
    so the family requires either m = 0 with alpha != gamma and beta != delta,
    or m != 0 with alpha != gamma.
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    m: object
    y: Point2

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            value = rational(getattr(self, name))
            if value <= 0:
                raise BadParams(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "m", rational(self.m))
        if self.m == 0:
            if self.alpha == self.gamma or self.beta == self.delta:
                raise BadParams("m = 0 needs alpha != gamma and beta != delta")
        elif self.alpha == self.gamma:
            raise BadParams("m != 0 needs alpha != gamma")


def _zonogon(*generators) -> ConvexPolygon:
    """Minkowski sum of centered segments coef * [-g, g]."""
    pts = [Point2(rational(0), rational(0))]
    for coef, g in generators:
        step = g.scaled(coef)
        pts = [p + step for p in pts] + [p - step for p in pts]
    return convex_hull(pts)


def make_pair(which: int, params) -> PairOfBodies:
    """The pair (K_i, L_i) of family `which` as explicit polygons."""
    if which in (1, 2):
        if not isinstance(params, Parall12Params):
            raise BadParams(f"family {which} needs Parall12Params")
        a, b, c, d = params.alpha, params.beta, params.gamma, params.delta
        if which == 1:
            k = _zonogon((a, _I1), (b, _I2))
            l = _zonogon((c, _I3), (d, _I4))
        else:
            k = _zonogon((a, _I1), (d, _I4))
            l = _zonogon((b, _I2), (c, _I3))
        return PairOfBodies(k, l.translate(params.y))
    if which in (3, 4):
        if not isinstance(params, Parall34Params):
            raise BadParams(f"family {which} needs Parall34Params")
        a, b, c, d = params.alpha, params.beta, params.gamma, params.delta
        im = Point2(params.m, rational(1))
        if which == 3:
            k = _zonogon((a, _I1), (b, _I3))
            l = _zonogon((c, _I1), (d, im))
        else:
            k = _zonogon((c, _I1), (b, _I3))
            l = _zonogon((a, _I1), (d, im))
        return PairOfBodies(k, l.translate(params.y))
    raise BadParams(f"family must be 1, 2, 3 or 4, got {which}")


def make_cone_counterexample():
    """The two cone pairs with equal covariogram but different cone sets."""
    d = Direction.of
    first = ConePair(
        PlanarCone.pointed(d(1, 0), d(-1, 1)),
        PlanarCone.pointed(d(-1, -1), d(0, -1)),
    )
    second = ConePair(
        PlanarCone.pointed(d(1, 0), d(1, 1)),
        PlanarCone.pointed(d(0, -1), d(1, -1)),
    )
    return first, second


@dataclass(frozen=True)
class EqualityReport:
    equal: bool
    witness: Point2 | None
    probes: int


def _stratified_probes(p: PairOfBodies, q: PairOfBodies, n: int, seed: int):
    """Support vertices, edge midpoints, wall-straddling points, then uniform."""
    sp = covariogram.support(p.first, p.second)
    sq = covariogram.support(q.first, q.second)
    probes = []
    for supp in (sp, sq):
        vs = supp.vertices
        probes.extend(vs)
        for i in range(len(vs)):
            a, b2 = vs[i], vs[(i + 1) % len(vs)]
            probes.append(Point2((a.x + b2.x) / 2, (a.y + b2.y) / 2))
    for pair in (p, q):
        for seg_a, seg_b in covariogram.second_singular_set(pair.first, pair.second):
            mid = Point2((seg_a.x + seg_b.x) / 2, (seg_a.y + seg_b.y) / 2)
            d = Direction.of(seg_b - seg_a)
            nrm = d.perp_ccw().as_point()
            eps = rational(1, 997)
            probes.append(mid)
            probes.append(mid + nrm.scaled(eps))
            probes.append(mid - nrm.scaled(eps))
    xs = [v.x for v in sp.vertices] + [v.x for v in sq.vertices]
    ys = [v.y for v in sp.vertices] + [v.y for v in sq.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    rng = random.Random(seed)
    while len(probes) < n:
        tx = rational(rng.randrange(0, 2**20), 2**20)
        ty = rational(rng.randrange(0, 2**20), 2**20)
        probes.append(Point2(x0 + (x1 - x0) * tx, y0 + (y1 - y0) * ty))
    return probes


def verify_equal_covariogram(p: PairOfBodies, q: PairOfBodies, n: int = 1000, seed: int = 0) -> EqualityReport:
    """Exact covariogram equality on a stratified probe set.

    Returns the first counterwitness point when the functions differ.
    """
    probes = _stratified_probes(p, q, n, seed)
    for x in probes:
        vp = covariogram.eval(p.first, p.second, x)
        vq = covariogram.eval(q.first, q.second, x)
        if vp != vq:
            return EqualityReport(False, x, len(probes))
    return EqualityReport(True, None, len(probes))
