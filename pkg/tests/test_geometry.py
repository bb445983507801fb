"""Exact planar primitives: polygons, cones, hulls, faces, intersection."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import helpers
from crosscov.geometry import (
    CollinearTriple,
    ConvexPolygon,
    Direction,
    Face,
    NotConvex,
    PlanarCone,
    TooFewVertices,
    ZeroArea,
    apply_linear,
    area,
    ccw_less,
    cone_interiors_intersect,
    cones_share_ray,
    convex_hull,
    exposed_face,
    intersect_convex,
    minkowski_sum,
    normal_cone,
    point,
    polygon,
    rational,
    reflect,
    segment_length_units,
    support_cone,
    validate_polygon,
    vertex_support_cone,
)

SQUARE = polygon((0, 0), (1, 0), (1, 1), (0, 1))
TRIANGLE = polygon((0, 0), (1, 0), (0, 1))


class TestValidatePolygon:
    def test_ccw_input_kept(self):
        p = validate_polygon([point(0, 0), point(1, 0), point(1, 1), point(0, 1)])
        assert p == SQUARE

    def test_cw_input_reoriented(self):
        p = validate_polygon([point(0, 1), point(1, 1), point(1, 0), point(0, 0)])
        assert p == SQUARE

    def test_self_crossing_rejected(self):
        pts = [point(0, 0), point(1, 1), point(1, 0), point(0, 1)]
        with pytest.raises(NotConvex, match="boundary walk turns both ways"):
            validate_polygon(pts)

    def test_collinear_triple_rejected(self):
        pts = [point(0, 0), point(1, 0), point(2, 0), point(1, 1)]
        with pytest.raises(CollinearTriple):
            validate_polygon(pts)

    def test_all_collinear_rejected(self):
        pts = [point(0, 0), point(1, 1), point(2, 2)]
        with pytest.raises(ZeroArea, match="all vertices collinear"):
            validate_polygon(pts)

    def test_duplicate_vertex_rejected(self):
        pts = [point(0, 0), point(1, 0), point(1, 0), point(1, 1)]
        with pytest.raises(CollinearTriple):
            validate_polygon(pts)

    def test_too_few(self):
        with pytest.raises(TooFewVertices):
            validate_polygon([point(0, 0), point(1, 0)])


class TestConvexHull:
    def test_drops_interior_and_boundary_points(self):
        pts = [point(0, 0), point(2, 0), point(2, 2), point(0, 2),
               point(1, 1), point(1, 0)]
        hull = convex_hull(pts)
        assert hull == polygon((0, 0), (2, 0), (2, 2), (0, 2))

    def test_collinear_input(self):
        with pytest.raises(ZeroArea):
            convex_hull([point(0, 0), point(1, 1), point(2, 2), point(3, 3)])

    def test_two_distinct_points(self):
        with pytest.raises(TooFewVertices, match="need 3 distinct points, got 2"):
            convex_hull([point(0, 0), point(1, 1), point(0, 0)])

    @given(seed=st.integers(0, 2**32 - 1))
    def test_hull_contains_all_inputs(self, seed):
        rng = random.Random(seed)
        pts = [helpers.random_point(rng) for _ in range(12)]
        try:
            hull = convex_hull(pts)
        except (TooFewVertices, ZeroArea):
            return
        assert all(hull.contains(p) for p in pts)
        assert [helpers.frac_point(v) for v in hull.vertices] == \
            helpers.brute_hull([helpers.frac_point(p) for p in pts])[
                :len(hull.vertices)] or \
            set(helpers.frac_point(v) for v in hull.vertices) == \
            set(helpers.brute_hull([helpers.frac_point(p) for p in pts]))


class TestPolygonBasics:
    def test_area(self):
        assert SQUARE.area() == 1
        assert TRIANGLE.area() == rational(1, 2)
        assert area(SQUARE) == 1

    def test_edges_wrap_around(self):
        es = SQUARE.edges()
        assert len(es) == 4
        assert es[-1] == (point(0, 1), point(0, 0))

    def test_contains_is_closed(self):
        assert SQUARE.contains(point(0, 0))
        assert SQUARE.contains(point(rational(1, 2), 0))
        assert not SQUARE.contains(point(2, 0))

    def test_interior_contains_is_open(self):
        assert SQUARE.interior_contains(point(rational(1, 2), rational(1, 2)))
        assert not SQUARE.interior_contains(point(0, 0))
        assert not SQUARE.interior_contains(point(rational(1, 2), 0))

    def test_translate(self):
        moved = SQUARE.translate(point(2, 3))
        assert moved.vertices[0] == point(2, 3)
        assert moved.area() == SQUARE.area()

    def test_bbox(self):
        assert polygon((0, 0), (2, 0), (2, 1), (0, 1)).bbox() == (0, 0, 2, 1)

    def test_centroid_of_vertices(self):
        c = SQUARE.centroid_of_vertices()
        assert c == point(rational(1, 2), rational(1, 2))

    def test_reflect(self):
        r = reflect(TRIANGLE)
        assert set(r.vertices) == {point(0, 0), point(-1, 0), point(0, -1)}
        assert reflect(r) == TRIANGLE


class TestCcwLess:
    ORDER = [Direction(1, 0), Direction(1, 1), Direction(0, 1),
             Direction(-1, 0), Direction(0, -1), Direction(1, -1)]

    def test_strict_total_order_on_samples(self):
        for i, a in enumerate(self.ORDER):
            for j, b in enumerate(self.ORDER):
                assert ccw_less(a, b) == (i < j)

    def test_irreflexive(self):
        assert not ccw_less(Direction(2, 3), Direction(2, 3))


class TestMinkowskiSum:
    def test_squares(self):
        s = minkowski_sum(SQUARE, SQUARE)
        assert s == polygon((0, 0), (2, 0), (2, 2), (0, 2))

    @given(seed=st.integers(0, 2**32 - 1))
    def test_matches_brute_hull_of_sums(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng)
        q = helpers.random_polygon(rng)
        s = minkowski_sum(p, q)
        assert helpers.frac_vertices(s) == helpers.brute_minkowski(p, q) or \
            set(helpers.frac_vertices(s)) == set(helpers.brute_minkowski(p, q))

    @given(seed=st.integers(0, 2**32 - 1))
    def test_commutes_and_translates(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng)
        q = helpers.random_polygon(rng)
        t = helpers.random_point(rng)
        assert minkowski_sum(p, q) == minkowski_sum(q, p)
        assert minkowski_sum(p.translate(t), q) == minkowski_sum(p, q).translate(t)


class TestExposedFace:
    def test_edge(self):
        f = exposed_face(SQUARE, Direction(0, -1))
        assert f.kind == "edge"
        assert set(f.points) == {point(0, 0), point(1, 0)}

    def test_vertex(self):
        f = exposed_face(SQUARE, Direction(1, 1))
        assert f.kind == "vertex"
        assert f.points == (point(1, 1),)

    def test_direction_scale_invariant(self):
        assert exposed_face(SQUARE, Direction(2, 2)) == \
            exposed_face(SQUARE, Direction(1, 1))

    @given(seed=st.integers(0, 2**32 - 1))
    def test_face_maximizes_inner_product(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng)
        u = rng.choice([Direction(1, 0), Direction(2, 1), Direction(-1, 3),
                        Direction(0, -1), Direction(-2, -3), Direction(5, -1)])
        f = exposed_face(p, u)
        best = max(u.dx * v.x + u.dy * v.y for v in p.vertices)
        hits = {v for v in p.vertices if u.dx * v.x + u.dy * v.y == best}
        assert set(f.points) == hits


class TestCones:
    def test_pointed_constructor_rejects_wide(self):
        with pytest.raises(Exception):
            PlanarCone.pointed(Direction(1, 0), Direction(-1, 0))

    def test_kinds(self):
        pc = PlanarCone.pointed(Direction(1, 0), Direction(0, 1))
        assert pc.kind == "pointed" and pc.is_pointed_with_interior()
        ray = PlanarCone.ray(Direction(1, 2))
        assert ray.kind == "ray" and not ray.is_pointed_with_interior()
        assert PlanarCone.zero().kind == "zero"

    def test_reflect(self):
        pc = PlanarCone.pointed(Direction(1, 0), Direction(0, 1))
        r = pc.reflect()
        assert r.lower == Direction(-1, 0) and r.upper == Direction(0, -1)

    def test_normal_cone_at_vertex(self):
        f = Face("vertex", (point(1, 1),))
        nc = normal_cone(SQUARE, f)
        assert nc.kind == "pointed"
        assert nc.lower == Direction(1, 0) and nc.upper == Direction(0, 1)

    def test_normal_cone_at_edge_is_ray(self):
        f = exposed_face(SQUARE, Direction(0, -1))
        nc = normal_cone(SQUARE, f)
        assert nc.kind == "ray"
        assert nc.lower == nc.upper == Direction(0, -1)

    def test_support_cone_at_vertex(self):
        f = Face("vertex", (point(0, 0),))
        sc = support_cone(SQUARE, f)
        assert sc.kind == "pointed"
        assert sc.lower == Direction(1, 0) and sc.upper == Direction(0, 1)

    def test_support_cone_at_edge_is_halfplane(self):
        f = exposed_face(SQUARE, Direction(0, -1))
        sc = support_cone(SQUARE, f)
        assert sc.kind == "halfplane"
        assert sc.lower == Direction(1, 0) and sc.upper == Direction(-1, 0)

    def test_vertex_support_cone_indexing(self):
        for i, v in enumerate(SQUARE.vertices):
            sc = vertex_support_cone(SQUARE, i)
            assert sc == support_cone(SQUARE, Face("vertex", (v,)))

    @given(seed=st.integers(0, 2**32 - 1))
    def test_normal_and_support_cones_are_polar(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng)
        i = rng.randrange(len(p.vertices))
        f = Face("vertex", (p.vertices[i],))
        sc = support_cone(p, f)
        nc = normal_cone(p, f)
        dots = [u.dx * v.dx + u.dy * v.dy
                for u in (sc.lower, sc.upper) for v in (nc.lower, nc.upper)]
        assert all(d <= 0 for d in dots)
        assert sum(1 for d in dots if d == 0) == 2

    def test_interiors_intersect(self):
        a = PlanarCone.pointed(Direction(1, 0), Direction(0, 1))
        b = PlanarCone.pointed(Direction(1, 1), Direction(-1, 1))
        c = PlanarCone.pointed(Direction(-1, 0), Direction(0, -1))
        assert cone_interiors_intersect(a, b)
        assert not cone_interiors_intersect(a, c)

    def test_share_ray(self):
        a = PlanarCone.pointed(Direction(1, 0), Direction(0, 1))
        b = PlanarCone.pointed(Direction(0, 1), Direction(-1, 1))
        c = PlanarCone.pointed(Direction(1, -1), Direction(2, -1))
        assert cones_share_ray(a, b)
        assert not cones_share_ray(a, c)


class TestSegmentLengthUnits:
    def test_axis(self):
        assert segment_length_units(point(0, 0), point(3, 0)) == 3

    def test_diagonal_counts_lattice_steps(self):
        assert segment_length_units(point(0, 0), point(2, 2)) == 2

    def test_rational_endpoints(self):
        assert segment_length_units(point(0, 0), point(rational(3, 2), 0)) == \
            rational(3, 2)

    def test_general_direction(self):
        assert segment_length_units(point(1, 1), point(4, 3)) == 1
        assert segment_length_units(point(1, 1), point(7, 5)) == 2


class TestApplyLinear:
    def test_shear(self):
        sheared = apply_linear(polygon((0, 0), (2, 0), (2, 1), (0, 1)),
                               ((1, 1), (0, 1)))
        assert sheared == polygon((0, 0), (2, 0), (3, 1), (1, 1))

    def test_reflection_matrix_reorients(self):
        flipped = apply_linear(TRIANGLE, ((-1, 0), (0, 1)))
        assert flipped.area() == TRIANGLE.area()
        assert set(flipped.vertices) == {point(0, 0), point(-1, 0), point(0, 1)}

    @given(seed=st.integers(0, 2**32 - 1))
    def test_area_scales_by_determinant(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng)
        m = helpers.random_linear_map(rng)
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        assert apply_linear(p, m).area() == abs(det) * p.area()


class TestIntersectConvex:
    def test_overlapping_squares(self):
        other = SQUARE.translate(point(rational(1, 2), rational(1, 2)))
        res = intersect_convex(SQUARE, other)
        assert res.kind == "polygon"
        assert res.polygon.area() == rational(1, 4)

    def test_shared_edge_gives_segment(self):
        other = SQUARE.translate(point(1, 0))
        res = intersect_convex(SQUARE, other)
        assert res.kind == "segment"
        assert set(res.points) == {point(1, 0), point(1, 1)}

    def test_shared_vertex_gives_point(self):
        other = SQUARE.translate(point(1, 1))
        res = intersect_convex(SQUARE, other)
        assert res.kind == "point"
        assert res.points == (point(1, 1),)

    def test_disjoint(self):
        res = intersect_convex(SQUARE, SQUARE.translate(point(5, 5)))
        assert res.kind == "empty"
        assert res.polygon is None and res.points == ()

    @given(seed=st.integers(0, 2**32 - 1))
    def test_matches_brute_force(self, seed):
        rng = random.Random(seed)
        p = helpers.random_polygon(rng, span=3)
        q = helpers.random_polygon(rng, span=3)
        res = intersect_convex(p, q)
        pts = helpers.brute_intersection_points(p, q)
        assert res.kind == helpers.classify_brute(pts)
        if res.kind == "polygon":
            expect = helpers.brute_area(helpers.brute_hull(pts))
            assert helpers.frac(res.polygon.area()) == expect
