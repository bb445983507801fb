"""Recovering a polygon pair from oracle access to its cross covariogram.

The covariogram determines the support polygon K + (-L) outright, the total
edge length over each support edge, the split of that total between the two
bodies (via the linear term of the inward decay), and the pair of support
cones at each support vertex (via localization to a cone covariogram).  What
it cannot always determine is which body owns which piece: the assembly walk
below propagates that two-coloring around the boundary, branching where the
local data genuinely allows two readings and pruning with cone-consistency
constraints.

For generic pairs a single coloring class survives and the result is unique
up to trivial associates.  The two parallelogram families are the only
configurations (up to affine maps) where two classes survive; assemble
classifies them, recovers the affine normalization, and returns both pairs.

All probes are exact; "small enough" step sizes are certified by fitting the
local polynomial model at two scales and checking it at a third, halving on
failure.  A probe budget never substitutes for the certificates: corrupted
oracles surface as OracleInconsistent or AssemblyFailed, not as wrong
answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import covariogram
from .catalog import Parall12Params, Parall34Params, make_pair
from .cones import ConeOracle, ConeRecoveryResult, hull_of_union, recover_cone_pair
from .errors import AssemblyFailed, BadParams, FaceNotOnPolygon, OracleInconsistent
from .geometry import (
    ConvexPolygon,
    Direction,
    ORIGIN,
    Point2,
    apply_linear,
    ccw_less,
    exposed_face,
    reflect,
    segment_length_units,
    vertex_support_cone,
)
from .rational import ZERO, rational
from .synisothesis import PairOfBodies, synisothetic, trivial_associates


@dataclass(frozen=True)
class PolygonCovOracle:
    """Exact evaluation access to g_{K,L} plus the support polygon K + (-L).

    The support is determined by g (it is the closure of {g > 0}), so
    exposing it adds no information; it only spares the caller an adaptive
    search.  Bodies are full-dimensional polygons by construction, which
    rules out segment degeneracies.
    """

    eval: object
    support_hint: ConvexPolygon

    @classmethod
    def from_pair(cls, k: ConvexPolygon, l: ConvexPolygon) -> "PolygonCovOracle":
        return cls(lambda x: covariogram.eval(k, l, x), covariogram.support(k, l))


@dataclass(frozen=True)
class ReconstructionResult:
    """kind is "unique", "exceptional_family_12" or "exceptional_family_34".

    pairs holds one pair, or the two oracle-equal pairs for exceptional
    kinds.  transform is the 2x2 rational matrix mapping the families'
    canonical position onto the recovered one and params the canonical
    parameters, chosen so that pairs[0] is the image of the odd family
    member (1 or 3) and pairs[1] of the even one; both None for unique
    results.  The normalization itself is not unique (swapping parameters
    can exchange the two families), so the order carries no meaning beyond
    consistency with transform and params.
    """

    kind: str
    pairs: tuple
    transform: tuple | None = None
    params: object | None = None


_MAX_HALVINGS = 64
_MAX_WALK_STATES = 4096


def _edge_probe_model(ev, mid: Point2, u: Point2):
    """Exact (c1, c2) of g(mid - eps*u) = c1*eps + c2*eps^2 near eps = 0."""
    eps = rational(1, 4)
    for _ in range(_MAX_HALVINGS):
        f1 = ev(mid - u.scaled(eps))
        if f1 == 0:
            eps /= 2
            continue
        f2 = ev(mid - u.scaled(eps / 2))
        c2 = 2 * (f1 - 2 * f2) / (eps * eps)
        c1 = (f1 - c2 * eps * eps) / eps
        predicted = c1 * eps / 4 + c2 * eps * eps / 16
        if ev(mid - u.scaled(eps / 4)) == predicted:
            return c1, c2
        eps /= 2
    raise OracleInconsistent("no scale fits a linear+quadratic inward model")


def recover_edge_pairs(oracle: PolygonCovOracle):
    """Unordered {K-part, L-part} of each support edge length, by outer normal.

    The total is the support edge length; the smaller part is the linear
    coefficient of the inward decay at the edge midpoint (zero when one body
    only touches this direction at a vertex).  Lengths are rational multiples
    of the primitive edge direction.
    """
    supp = oracle.support_hint
    vs = supp.vertices
    out = {}
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        d = Direction.of(b - a)
        u = d.perp_cw()
        total = segment_length_units(a, b)
        mid = Point2((a.x + b.x) / 2, (a.y + b.y) / 2)
        c1, _c2 = _edge_probe_model(oracle.eval, mid, u.as_point())
        small = c1 / (u.dx * u.dx + u.dy * u.dy)
        if small < 0 or small > total - small:
            raise OracleInconsistent(
                f"inward slope at normal {u} gives length {small} of total {total}"
            )
        out[u] = (small, total - small)
    return out


class _ScaleMismatch(Exception):
    """Internal: localization radius too large for the current vertex."""


def recover_vertex_cones(oracle: PolygonCovOracle, q: Point2) -> ConeRecoveryResult:
    """The unordered support-cone pair {cone(K, z), -cone(L, w)} at support vertex q.

    Localizes the oracle at q with a certified scale: every probe is taken at
    two radii and must agree with degree-2 homogeneity, else the radius is
    halved and the recovery restarted.
    """
    supp = oracle.support_hint
    try:
        idx = supp.vertices.index(q)
    except ValueError:
        raise FaceNotOnPolygon(f"{q} is not a vertex of the support polygon") from None
    known = vertex_support_cone(supp, idx)
    ev = oracle.eval

    tau = rational(1)
    last_error = None
    for _ in range(_MAX_HALVINGS):
        def local(y, tau=tau):
            v1 = ev(q + y.scaled(tau))
            v2 = ev(q + y.scaled(tau / 2))
            if v1 != 4 * v2:
                raise _ScaleMismatch
            return v1 / (tau * tau)

        try:
            return recover_cone_pair(
                ConeOracle(local, known.lower.perp_ccw()), known_support=known
            )
        except _ScaleMismatch:
            tau /= 2
        except OracleInconsistent as err:
            last_error = err
            tau /= 2
    raise OracleInconsistent(
        f"no localization scale at support vertex {q} ({last_error})"
    )


def decompose_support_edges(oracle: PolygonCovOracle):
    """Label each support edge normal "parallel", "K-edge" or "L-edge".

    Parallel means both bodies expose an edge in that direction.  Single-body
    labels follow the first returned pair of assemble, so they are canonical
    only up to the trivial-associate swap, as the data itself is.
    """
    pair = assemble(oracle).pairs[0]
    supp = oracle.support_hint
    vs = supp.vertices
    labels = {}
    for i in range(len(vs)):
        d = Direction.of(vs[(i + 1) % len(vs)] - vs[i])
        u = d.perp_cw()
        k_len = exposed_face(pair.first, u).length_units()
        l_len = exposed_face(pair.second, -u).length_units()
        if k_len > 0 and l_len > 0:
            labels[u] = "parallel"
        elif k_len > 0:
            labels[u] = "K-edge"
        elif l_len > 0:
            labels[u] = "L-edge"
        else:
            raise OracleInconsistent(f"support edge at {u} owned by neither body")
    return labels


@dataclass(frozen=True)
class _WalkState:
    kc: object  # K's support cone at the current vertex
    mc: object  # (-L)'s support cone at the current vertex
    k0: object  # assignments fixed at the starting vertex
    m0: object
    k_lens: tuple


def _advance(states, direction, edge_pair, total, arrivals):
    """One edge step of the coloring walk; returns surviving successor states."""
    nxt = []
    lo, hi = edge_pair
    for st in states:
        k_moves = st.kc.lower == direction
        m_moves = st.mc.lower == direction
        if not k_moves and not m_moves:
            continue
        if k_moves and m_moves:
            if lo == 0:
                continue
            k_options = (lo, hi) if lo != hi else (lo,)
        elif k_moves:
            if lo != 0:
                continue
            k_options = (hi,)
        else:
            if lo != 0:
                continue
            k_options = (ZERO,)
        for k_len in k_options:
            m_len = total - k_len
            for (kc_next, mc_next) in arrivals(st):
                if k_len > 0:
                    if kc_next.upper != -direction:
                        continue
                elif kc_next != st.kc:
                    continue
                if m_len > 0:
                    if mc_next.upper != -direction:
                        continue
                elif mc_next != st.mc:
                    continue
                nxt.append(
                    _WalkState(kc_next, mc_next, st.k0, st.m0, st.k_lens + (k_len,))
                )
    return list(dict.fromkeys(nxt))


def _build_body(start: Point2, dirs, lens) -> ConvexPolygon | None:
    pts = []
    z = start
    for d, ln in zip(dirs, lens):
        if ln > 0:
            pts.append(z)
            z = z + d.as_point().scaled(ln)
    if z != start or len(pts) < 3:
        return None
    return ConvexPolygon.from_ccw(pts)


def assemble(oracle: PolygonCovOracle) -> ReconstructionResult:
    """Full reconstruction: recover (K, L) up to trivial associates.

    Returns the unique class, or both pairs plus the affine normalization for
    the two exceptional parallelogram families.  Raises AssemblyFailed when
    no coloring (or too many) survives, OracleInconsistent when any local
    certificate fails.
    """
    memo = {}
    base = oracle.eval

    def ev(x):
        v = memo.get(x)
        if v is None:
            v = base(x)
            memo[x] = v
        return v

    wrapped = PolygonCovOracle(ev, oracle.support_hint)
    supp = oracle.support_hint
    vs = supp.vertices
    m_count = len(vs)
    dirs = [Direction.of(vs[(i + 1) % m_count] - vs[i]) for i in range(m_count)]
    lens = [segment_length_units(vs[i], vs[(i + 1) % m_count]) for i in range(m_count)]

    by_normal = recover_edge_pairs(wrapped)
    edge_pairs = [by_normal[d.perp_cw()] for d in dirs]

    sols = []
    for i in range(m_count):
        res = recover_vertex_cones(wrapped, vs[i])
        members = [(cp.a, cp.b.reflect()) for cp in res.solutions]
        cone = vertex_support_cone(supp, i)
        for (x, y) in members:
            if hull_of_union(x, y) != cone:
                raise OracleInconsistent(
                    f"recovered cones at {vs[i]} do not span the support cone"
                )
        sols.append(members)

    states = [_WalkState(x, y, x, y, ()) for (x, y) in sols[0]]
    for m in range(m_count):
        if m == m_count - 1:
            def arrivals(st):
                return ((st.k0, st.m0),)
        else:
            nxt_members = sols[m + 1]

            def arrivals(_st, nxt_members=nxt_members):
                opts = []
                for (x, y) in nxt_members:
                    opts.append((x, y))
                    if x != y:
                        opts.append((y, x))
                return opts

        states = _advance(states, dirs[m], edge_pairs[m], lens[m], arrivals)
        if not states:
            raise AssemblyFailed("no edge coloring satisfies the cone constraints")
        if len(states) > _MAX_WALK_STATES:
            raise AssemblyFailed("coloring branch count exceeded the cap")

    candidates = []
    for st in states:
        k_poly = _build_body(ORIGIN, dirs, st.k_lens)
        m_lens = [t - k for t, k in zip(lens, st.k_lens)]
        m_poly = _build_body(vs[0], dirs, m_lens)
        if k_poly is None or m_poly is None:
            continue
        candidates.append(PairOfBodies(k_poly, reflect(m_poly)))

    verified = [pair for pair in candidates if _reproduces(pair, supp, memo)]
    if not verified:
        raise AssemblyFailed("no assembled pair reproduces the oracle")

    classes = []
    for pair in verified:
        if not any(trivial_associates(pair, rep) is not None for rep in classes):
            classes.append(pair)

    if len(classes) == 1:
        return ReconstructionResult("unique", (classes[0],))
    if len(classes) == 2:
        return _classify_exceptional(classes[0], classes[1], sols)
    raise AssemblyFailed(f"{len(classes)} inequivalent pairs reproduce the oracle")


def _reproduces(pair: PairOfBodies, supp: ConvexPolygon, memo) -> bool:
    if covariogram.support(pair.first, pair.second) != supp:
        return False
    xs = list(memo)
    values = covariogram.eval_many(pair.first, pair.second, xs)
    return all(v == memo[x] for x, v in zip(xs, values))


# --- exceptional-family classification -----------------------------------


def _classify_exceptional(rep_a, rep_b, sols) -> ReconstructionResult:
    syn = synisothetic(
        PairOfBodies(rep_a.first, reflect(rep_a.second)),
        PairOfBodies(rep_b.first, reflect(rep_b.second)),
    )
    if syn:
        match = _match_family_34(rep_a, rep_b)
        if match is None:
            raise AssemblyFailed("two synisothetic pairs outside the known family")
        first, second, transform, params = match
        return ReconstructionResult(
            "exceptional_family_34", (first, second), transform, params
        )
    if not all(len(s) == 2 for s in sols):
        raise AssemblyFailed("two pair classes without all-ambiguous vertices")
    match = _match_family_12(rep_a, rep_b)
    if match is None:
        raise AssemblyFailed("two non-synisothetic pairs outside the known family")
    first, second, transform, params = match
    return ReconstructionResult(
        "exceptional_family_12", (first, second), transform, params
    )


def _swapped(pair: PairOfBodies) -> PairOfBodies:
    return PairOfBodies(reflect(pair.second), reflect(pair.first))


def _edge_direction_classes(p: ConvexPolygon):
    """Distinct edge directions, normalized into the upper half turn."""
    out = []
    vsp = p.vertices
    for i in range(len(vsp)):
        d = Direction.of(vsp[(i + 1) % len(vsp)] - vsp[i])
        if d.dy < 0 or (d.dy == 0 and d.dx < 0):
            d = -d
        if d not in out:
            out.append(d)
    return out


def _invert(t):
    (a, b), (c, d) = t
    det = a * d - b * c
    if det == 0:
        return None
    return ((d / det, -b / det), (-c / det, a / det))


def _centered(p: ConvexPolygon):
    c = p.centroid_of_vertices()
    return p.translate(Point2(-c.x, -c.y)), c


def _zonogon_params_12(k: ConvexPolygon, l: ConvexPolygon):
    """(alpha, beta, gamma, delta) when k, l are the family-1 canonical shapes."""
    kv = k.vertices[0]
    beta = -kv.y
    alpha = -kv.x - beta
    lv = l.vertices[0]
    delta = -lv.x
    gamma = delta - lv.y
    if min(alpha, beta, gamma, delta) <= 0:
        return None
    return alpha, beta, gamma, delta


def _match_family_12(rep_a, rep_b):
    """Affine-normalize two non-synisothetic classes onto families 1 and 2."""
    support_dirs = set()
    for rep in (rep_a, rep_b):
        for poly in (rep.first, rep.second):
            support_dirs.update(_edge_direction_classes(poly))
    if len(support_dirs) != 4:
        return None

    full = []
    for d in support_dirs:
        full.extend((d, -d))
    full.sort(key=_CcwKey)
    for start in range(8):
        d1, d2, d3, d4 = (full[(start + j) % 8] for j in range(4))
        denom = d2.cross(d3)
        if denom == 0:
            continue
        t_scale = rational(d1.cross(d2), denom)
        if t_scale <= 0:
            continue
        combo = Point2(t_scale * d3.dx - d1.dx, t_scale * d3.dy - d1.dy)
        if combo.x * d4.dy - combo.y * d4.dx != 0:
            continue
        if combo.x * d4.dx + combo.y * d4.dy <= 0:
            continue
        t = (
            (rational(d1.dx), t_scale * d3.dx),
            (rational(d1.dy), t_scale * d3.dy),
        )
        t_inv = _invert(t)
        if t_inv is None:
            continue
        result = _try_families_12(rep_a, rep_b, t, t_inv)
        if result is not None:
            return result
    return None


@dataclass(frozen=True)
class _CcwKey:
    d: Direction

    def __lt__(self, other):
        return ccw_less(self.d, other.d)


def _try_families_12(rep_a, rep_b, t, t_inv):
    for first, second in ((rep_a, rep_b), (rep_b, rep_a)):
        for f_pair in (first, _swapped(first)):
            params = _extract_12(f_pair, t_inv)
            if params is None:
                continue
            for s_pair in (second, _swapped(second)):
                if _matches_family(s_pair, t_inv, 2, params):
                    return f_pair, s_pair, t, params
    return None


def _extract_12(pair: PairOfBodies, t_inv):
    k_hat, _ck = _centered(apply_linear(pair.first, t_inv))
    l_hat, _cl = _centered(apply_linear(pair.second, t_inv))
    got = _zonogon_params_12(k_hat, l_hat)
    if got is None:
        return None
    alpha, beta, gamma, delta = got
    y = _family_offset(pair, t_inv)
    try:
        params = Parall12Params(alpha, beta, gamma, delta, y)
    except BadParams:
        return None
    return params if _matches_family(pair, t_inv, 1, params) else None


def _family_offset(pair: PairOfBodies, t_inv) -> Point2:
    k_img = apply_linear(pair.first, t_inv)
    l_img = apply_linear(pair.second, t_inv)
    ck = k_img.centroid_of_vertices()
    cl = l_img.centroid_of_vertices()
    return Point2(cl.x - ck.x, cl.y - ck.y)


def _matches_family(pair: PairOfBodies, t_inv, which: int, params) -> bool:
    try:
        canon = make_pair(which, params)
    except BadParams:
        return False
    k_img = apply_linear(pair.first, t_inv)
    l_img = apply_linear(pair.second, t_inv)
    shift = k_img.centroid_of_vertices()
    shift = Point2(-shift.x, -shift.y)
    return (
        k_img.translate(shift) == canon.first
        and l_img.translate(shift) == canon.second
    )


def _match_family_34(rep_a, rep_b):
    for first, second in ((rep_a, rep_b), (rep_b, rep_a)):
        for f_pair in (first, _swapped(first)):
            k_dirs = _edge_direction_classes(f_pair.first)
            l_dirs = _edge_direction_classes(f_pair.second)
            if len(k_dirs) != 2 or len(l_dirs) != 2:
                continue
            shared = [d for d in k_dirs if d in l_dirs]
            for d_shared in shared:
                others = [d for d in k_dirs if d != d_shared]
                if len(others) != 1:
                    continue
                d_b = others[0]
                t = (
                    (rational(d_shared.dx), rational(d_b.dx)),
                    (rational(d_shared.dy), rational(d_b.dy)),
                )
                t_inv = _invert(t)
                if t_inv is None:
                    continue
                params = _extract_34(f_pair, t_inv)
                if params is None:
                    continue
                for s_pair in (second, _swapped(second)):
                    if _matches_family(s_pair, t_inv, 4, params):
                        return f_pair, s_pair, t, params
    return None


def _extract_34(pair: PairOfBodies, t_inv):
    k_hat, _ = _centered(apply_linear(pair.first, t_inv))
    l_hat, _ = _centered(apply_linear(pair.second, t_inv))
    alpha = max(v.x for v in k_hat.vertices)
    beta = max(v.y for v in k_hat.vertices)
    delta = max(v.y for v in l_hat.vertices)
    if delta == 0:
        return None
    top_xs = [v.x for v in l_hat.vertices if v.y == delta]
    if len(top_xs) != 2:
        return None
    gamma = (max(top_xs) - min(top_xs)) / 2
    m = (max(top_xs) + min(top_xs)) / (2 * delta)
    y = _family_offset(pair, t_inv)
    try:
        params = Parall34Params(alpha, beta, gamma, delta, m, y)
    except BadParams:
        return None
    return params if _matches_family(pair, t_inv, 3, params) else None
