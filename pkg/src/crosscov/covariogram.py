"""Cross covariogram of two convex polygons.

g(x) = area(K intersect (L + x)), computed exactly.  The support of g is the
Minkowski sum K + (-L); g is continuous, vanishes outside the support, and
sqrt(g) is concave on it.

Edge lengths follow the package convention from crosscov.geometry: the length
of a face is the rational multiple of its primitive direction vector, so every
reported length is exact.  All length comparisons done here (and everywhere
downstream) are between parallel faces, where that unit is the same on both
sides.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BadResolution
from .geometry import (
    ConvexPolygon,
    Direction,
    Point2,
    exposed_face,
    halfplanes_of,
    minkowski_sum,
    point,
    reflect,
)
from .rational import ZERO, rational


def eval(k: ConvexPolygon, l: ConvexPolygon, x: Point2):
    """Exact area of K intersect (L + x).

    Same Sutherland-Hodgman passes as geometry.clip_by_halfplane, but on bare
    coordinate pairs; this is the hottest loop in the package and skipping the
    Point2 wrappers roughly halves its cost.
    """
    xx, xy = x.x, x.y
    pts = [(v.x + xx, v.y + xy) for v in l.vertices]
    for (a, b, c) in halfplanes_of(k):
        sv = [c - (a * px + b * py) for (px, py) in pts]
        out = []
        n = len(pts)
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            si, sj = sv[i], sv[j]
            if si >= 0:
                out.append(pts[i])
                if sj < 0:
                    t = si / (si - sj)
                    (px, py), (qx, qy) = pts[i], pts[j]
                    out.append((px + (qx - px) * t, py + (qy - py) * t))
            elif sj >= 0:
                t = si / (si - sj)
                (px, py), (qx, qy) = pts[i], pts[j]
                out.append((px + (qx - px) * t, py + (qy - py) * t))
        pts = out
        if not pts:
            return ZERO
    if len(pts) < 3:
        return ZERO
    acc = 0
    n = len(pts)
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        acc += pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1]
    return acc / 2


def support(k: ConvexPolygon, l: ConvexPolygon) -> ConvexPolygon:
    """Support of the covariogram: the Minkowski sum K + (-L)."""
    return minkowski_sum(k, reflect(l))


def edge_length_pair(k: ConvexPolygon, l: ConvexPolygon, u: Direction):
    """Unordered pair {len(K_u), len(L_-u)} of exposed-face lengths.

    Returned as a sorted 2-tuple (values may coincide).  The two faces are
    parallel whenever both are edges, so the per-direction length unit is
    shared and the pair sums to the length of (K + (-L))_u.
    """
    a = exposed_face(k, u).length_units()
    b = exposed_face(l, -u).length_units()
    return tuple(sorted((a, b)))


def _line_key(a: Point2, b: Point2):
    """Canonical (A, B, C) for the line through a, b: A*x + B*y = C, primitive."""
    d = Direction.of(b - a)
    n = d.perp_cw()
    ax, ay = n.dx, n.dy
    if ax < 0 or (ax == 0 and ay < 0):
        ax, ay = -ax, -ay
    return (ax, ay, ax * a.x + ay * a.y)


def _clip_segment(a: Point2, b: Point2, poly: ConvexPolygon):
    """Exact [a, b] intersect polygon as a parameter interval, or None."""
    lo, hi = rational(0), rational(1)
    for (ha, hb, hc) in halfplanes_of(poly):
        sa = hc - (ha * a.x + hb * a.y)
        sb = hc - (ha * b.x + hb * b.y)
        slope = sb - sa
        if slope == 0:
            if sa < 0:
                return None
            continue
        t = -sa / slope
        if slope > 0:
            if t > lo:
                lo = t
        else:
            if t < hi:
                hi = t
        if lo > hi:
            return None
    if lo >= hi:
        return None
    w = b - a
    return (a + w.scaled(lo), a + w.scaled(hi))


def second_singular_set(k: ConvexPolygon, l: ConvexPolygon):
    """Segments where g fails to be C2, clipped to the support.

    The set is the union of -boundary(L) translated to each vertex of K and
    boundary(K) translated to each vertex of -L, intersected with K + (-L).
    Collinear overlapping pieces are merged; only segments of positive length
    are returned, ordered deterministically.
    """
    supp = support(k, l)
    neg_l = reflect(l)
    raw = []
    for z in k.vertices:
        for (a, b) in neg_l.edges():
            raw.append((a + z, b + z))
    for w in neg_l.vertices:
        for (a, b) in k.edges():
            raw.append((a + w, b + w))

    by_line = {}
    for (a, b) in raw:
        clipped = _clip_segment(a, b, supp)
        if clipped is None:
            continue
        p, q = clipped
        key = _line_key(p, q)
        d = Direction(-key[1], key[0])  # direction along the line
        tp = d.dx * p.x + d.dy * p.y
        tq = d.dx * q.x + d.dy * q.y
        if tp > tq:
            p, q, tp, tq = q, p, tq, tp
        by_line.setdefault(key, []).append((tp, tq, p, q))

    merged = []
    for key in sorted(by_line):
        ivs = sorted(by_line[key], key=lambda r: (r[0], r[1]))
        cur = None
        for (tp, tq, p, q) in ivs:
            if cur is None:
                cur = [tp, tq, p, q]
            elif tp <= cur[1]:
                if tq > cur[1]:
                    cur[1], cur[3] = tq, q
            else:
                merged.append((cur[2], cur[3]))
                cur = [tp, tq, p, q]
        if cur is not None:
            merged.append((cur[2], cur[3]))
    return merged


@dataclass(frozen=True)
class GridSample:
    """Lattice of exact covariogram values.

    values[iy][ix] is g(origin + (ix * x_step, iy * y_step)); row 0 is the
    bottom row (smallest y).
    """

    origin: Point2
    x_step: object
    y_step: object
    values: tuple

    @property
    def ny(self):
        return len(self.values)

    @property
    def nx(self):
        return len(self.values[0])

    def point_at(self, ix, iy):
        return self.origin + point(self.x_step * ix, self.y_step * iy)


def thread_count():
    """Worker count for bulk evaluation; CROSSCOV_THREADS overrides, default <= 4."""
    env = os.environ.get("CROSSCOV_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise BadResolution(f"CROSSCOV_THREADS is not an integer: {env!r}") from None
    return max(1, min(4, os.cpu_count() or 1))


_WORK = {}


def _bulk_init(k, l):
    _WORK["k"] = k
    _WORK["l"] = l


def _bulk_eval(chunk):
    k, l = _WORK["k"], _WORK["l"]
    return [eval(k, l, x) for x in chunk]


def eval_many(k: ConvexPolygon, l: ConvexPolygon, xs, workers=None):
    """Evaluate g at many points, with a process pool when it pays off.

    Results are in input order regardless of worker count.
    """
    xs = list(xs)
    n = workers if workers is not None else thread_count()
    if n <= 1 or len(xs) < 512:
        return [eval(k, l, x) for x in xs]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(64, len(xs) // (n * 8))
    chunks = [xs[i : i + chunk] for i in range(0, len(xs), chunk)]
    out = []
    with ProcessPoolExecutor(max_workers=n, initializer=_bulk_init, initargs=(k, l)) as pool:
        for part in pool.map(_bulk_eval, chunks):
            out.extend(part)
    return out


def sample_grid(k: ConvexPolygon, l: ConvexPolygon, nx: int, ny: int, bounds=None, workers=None) -> GridSample:
    """Evaluate g on an nx-by-ny lattice over bounds (default: support bbox).

    bounds is (xmin, ymin, xmax, ymax); lattice points include both ends of
    each range, so steps divide the spans by nx-1 and ny-1.
    """
    if nx < 2 or ny < 2:
        raise BadResolution(f"grid needs at least 2x2 points, got {nx}x{ny}")
    if bounds is None:
        bounds = support(k, l).bbox()
    xmin, ymin, xmax, ymax = (rational(b) for b in bounds)
    if xmin >= xmax or ymin >= ymax:
        raise BadResolution("grid bounds are degenerate")
    x_step = (xmax - xmin) / (nx - 1)
    y_step = (ymax - ymin) / (ny - 1)
    pts = [
        Point2(xmin + x_step * ix, ymin + y_step * iy)
        for iy in range(ny)
        for ix in range(nx)
    ]
    flat = eval_many(k, l, pts, workers=workers)
    rows = tuple(tuple(flat[iy * nx : (iy + 1) * nx]) for iy in range(ny))
    return GridSample(Point2(xmin, ymin), x_step, y_step, rows)


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    std_error: float
    exact: object
    samples: int
    seed: int

    @property
    def within_3_sigma(self):
        exact = self.exact.numerator / self.exact.denominator
        return abs(self.estimate - exact) <= 3 * self.std_error + 1e-12


def monte_carlo_check(k: ConvexPolygon, l: ConvexPolygon, x: Point2, samples: int, seed: int) -> MonteCarloResult:
    """Float rejection-sampling estimate of g(x) next to the exact value.

    Uniform points are drawn from the intersection of the bounding boxes of K
    and L + x with numpy's default PCG64 generator seeded by `seed`; the hit
    fraction times the box area estimates g(x).  std_error is the binomial
    one-sigma width, so agreement within 3 sigma is the expected outcome.
    """
    import numpy as np

    exact = eval(k, l, x)
    kx0, ky0, kx1, ky1 = k.bbox()
    lx0, ly0, lx1, ly1 = l.bbox()
    bx0, by0 = max(kx0, lx0 + x.x), max(ky0, ly0 + x.y)
    bx1, by1 = min(kx1, lx1 + x.x), min(ky1, ly1 + x.y)
    if bx0 >= bx1 or by0 >= by1:
        return MonteCarloResult(0.0, 0.0, exact, samples, seed)

    rng = np.random.default_rng(seed)
    fx0, fy0 = float(bx0), float(by0)
    w, h = float(bx1 - bx0), float(by1 - by0)
    px = rng.random(samples) * w + fx0
    py = rng.random(samples) * h + fy0
    inside = np.ones(samples, dtype=bool)
    for (a, b, c) in halfplanes_of(k):
        inside &= float(a) * px + float(b) * py <= float(c)
    for (a, b, c) in halfplanes_of(l):
        cc = float(c + a * x.x + b * x.y)
        inside &= float(a) * px + float(b) * py <= cc
    box_area = w * h
    p_hat = float(inside.sum()) / samples
    estimate = p_hat * box_area
    std_error = box_area * (max(p_hat * (1.0 - p_hat), 0.0) / samples) ** 0.5
    return MonteCarloResult(estimate, std_error, exact, samples, seed)
