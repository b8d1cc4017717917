# backend/apps/convex/tests.py
import math

import factory.random
import numpy as np
import pytest
from django.test import SimpleTestCase
from hypothesis import given, settings as hyp_settings, strategies as st

from core.exceptions import DegenerateGaugeError, GeometryError
from .factories import (
    HullFactory,
    SymmetricBodyFactory,
    TriangleFactory,
    random_direction,
    random_points,
)
from .gauges import GaugeKind, GaugeTag, gauge_polygon, hexagon_vertices, pentagon_vertices
from .geometry import (
    ConvexPolygon,
    Point,
    affine_map,
    convex_hull,
    difference_body,
    gauge_value,
    interpolate,
    intersect,
    minkowski_sum,
    regular_kgon,
    support,
)
from .serializers import PointField, PolygonSerializer, parse_polygon
from rest_framework import serializers

SQUARE = ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])

coords = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
point_lists = st.lists(st.tuples(coords, coords), min_size=3, max_size=15)
directions = st.tuples(coords, coords).filter(lambda u: math.hypot(*u) > 1e-3)


def assert_points_close(actual, expected, tol=1e-9):
    assert np.allclose(np.asarray(actual, dtype=float), np.asarray(expected, dtype=float), atol=tol)


# ============================================
# Hulls and construction
# ============================================

class ConvexHullTests(SimpleTestCase):

    def test_interior_point_removed(self):
        hull = convex_hull([(0, 0), (1, 0), (0, 1), (0.2, 0.2)])
        self.assertTrue(hull.approx_equal(ConvexPolygon([(0, 0), (1, 0), (0, 1)])))
        self.assertEqual(len(hull), 3)

    def test_two_points_give_segment(self):
        hull = convex_hull([(0, 0), (1, 1)])
        self.assertEqual(hull.dimension, 1)
        assert_points_close(sorted(hull.vertices), [(0, 0), (1, 1)])

    def test_collinear_points_keep_extremes(self):
        hull = convex_hull([(0, 0), (2, 0), (1, 0), (3, 0)])
        assert_points_close(sorted(hull.vertices), [(0, 0), (3, 0)])

    def test_empty_input_rejected(self):
        with self.assertRaisesMessage(GeometryError, "empty point set"):
            convex_hull([])

    def test_random_cloud_is_enclosed(self):
        factory.random.reseed_random(11)
        pts = random_points(1000, spread=0.5)
        hull = convex_hull([(x + 0.5, y + 0.5) for x, y in pts])
        shifted = {(x + 0.5, y + 0.5) for x, y in pts}
        for v in hull.vertices:
            self.assertIn((v.x, v.y), shifted)
        for p in shifted:
            self.assertTrue(hull.contains(p, eps=1e-12))

    def test_hull_idempotent(self):
        factory.random.reseed_random(3)
        for _ in range(50):
            body = HullFactory()
            self.assertTrue(convex_hull(body.array).approx_equal(body, eps=1e-12))

    def test_constructor_reverses_clockwise_input(self):
        poly = ConvexPolygon([(0, 0), (0, 1), (1, 0)])
        self.assertGreater(poly.area, 0)

    def test_constructor_rejects_reflex_cycle(self):
        with self.assertRaises(GeometryError):
            ConvexPolygon([(0, 0), (2, 0), (1, 0.2), (2, 2), (0, 2)])

    def test_constructor_merges_collinear_vertices(self):
        poly = ConvexPolygon([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
        self.assertEqual(len(poly), 4)


@hyp_settings(max_examples=60, deadline=None)
@given(point_lists)
def test_hull_contains_all_inputs(points):
    hull = convex_hull(points)
    for p in points:
        assert hull.contains(p, eps=1e-9)


# ============================================
# Support functions and Minkowski algebra
# ============================================

class SupportTests(SimpleTestCase):

    def test_square_right_side(self):
        value, argmax = support(SQUARE, (1, 0))
        self.assertAlmostEqual(value, 1.0)
        self.assertEqual({SQUARE.vertices[i] for i in argmax}, {Point(1.0, -1.0), Point(1.0, 1.0)})

    def test_triangle_top_vertex(self):
        value, _ = support(regular_kgon(3, math.pi / 2), (0, 1))
        self.assertAlmostEqual(value, 1.0)

    def test_zero_direction_rejected(self):
        with self.assertRaises(GeometryError):
            support(SQUARE, (0, 0))

    def test_width_nonnegative(self):
        factory.random.reseed_random(5)
        for _ in range(100):
            body, u = HullFactory(), random_direction()
            self.assertGreaterEqual(support(body, u).value + support(body, -u).value, -1e-12)


class MinkowskiSumTests(SimpleTestCase):

    def test_sum_with_point_translates(self):
        total = minkowski_sum(SQUARE, ConvexPolygon([(2.0, 3.0)]))
        self.assertTrue(total.approx_equal(SQUARE.translate((2.0, 3.0))))

    def test_square_doubles(self):
        self.assertTrue(minkowski_sum(SQUARE, SQUARE).approx_equal(SQUARE.scaled(2.0)))

    def test_support_additivity(self):
        factory.random.reseed_random(7)
        P, Q = HullFactory(), HullFactory()
        total = minkowski_sum(P, Q)
        self.assertLessEqual(len(total), len(P) + len(Q))
        for _ in range(100):
            u = random_direction()
            self.assertAlmostEqual(support(total, u).value, support(P, u).value + support(Q, u).value, places=9)

    def test_commutative_and_associative(self):
        factory.random.reseed_random(8)
        for _ in range(20):
            P, Q, W = HullFactory(), HullFactory(), HullFactory()
            self.assertTrue(minkowski_sum(P, Q).approx_equal(minkowski_sum(Q, P), eps=1e-9))
            left = minkowski_sum(minkowski_sum(P, Q), W)
            right = minkowski_sum(P, minkowski_sum(Q, W))
            self.assertTrue(left.approx_equal(right, eps=1e-9))

    def test_sum_with_segment(self):
        seg = ConvexPolygon([(0, 0), (1, 0)])
        total = minkowski_sum(SQUARE, seg)
        self.assertTrue(total.approx_equal(ConvexPolygon([(-1, -1), (2, -1), (2, 1), (-1, 1)])))


@hyp_settings(max_examples=40, deadline=None)
@given(point_lists, point_lists, directions)
def test_minkowski_support_additivity_property(a, b, u):
    P, Q = convex_hull(a), convex_hull(b)
    total = minkowski_sum(P, Q)
    expected = support(P, u).value + support(Q, u).value
    assert abs(support(total, u).value - expected) <= 1e-7 * max(1.0, abs(expected))


class DifferenceBodyTests(SimpleTestCase):

    def test_segment(self):
        body = difference_body(ConvexPolygon([(0, 0), (1, 0)]))
        assert_points_close(sorted(body.vertices), [(-1, 0), (1, 0)])

    def test_triangle_gives_symmetric_hexagon(self):
        factory.random.reseed_random(13)
        body = difference_body(TriangleFactory())
        self.assertEqual(len(body), 6)
        self.assertTrue(body.is_symmetric())
        assert_points_close(body.centroid, (0, 0))

    def test_translation_invariant(self):
        factory.random.reseed_random(14)
        P = HullFactory()
        moved = P.translate((3.5, -2.0))
        self.assertTrue(difference_body(P).approx_equal(difference_body(moved), eps=1e-9))


# ============================================
# Gauges and intersections
# ============================================

class GaugeValueTests(SimpleTestCase):

    def test_origin(self):
        self.assertEqual(gauge_value(SQUARE, (0, 0)), 0.0)

    def test_vertex(self):
        self.assertAlmostEqual(gauge_value(SQUARE, (1, 1)), 1.0)

    def test_origin_outside(self):
        with self.assertRaisesMessage(DegenerateGaugeError, "gauge body must contain origin"):
            gauge_value(SQUARE.translate((5, 0)), (1, 0))

    def test_segment_gauge_rejected(self):
        with self.assertRaises(DegenerateGaugeError):
            gauge_value(ConvexPolygon([(-1, 0), (1, 0)]), (0.5, 0))

    def test_homogeneity_and_triangle_inequality(self):
        factory.random.reseed_random(21)
        for _ in range(50):
            B = SymmetricBodyFactory().centered()
            x, y = np.array(random_points(2))
            t = factory.random.randgen.uniform(0.1, 5.0)
            self.assertAlmostEqual(gauge_value(B, t * x), t * gauge_value(B, x), places=9)
            self.assertLessEqual(gauge_value(B, x + y), gauge_value(B, x) + gauge_value(B, y) + 1e-12)

    def test_vectorised(self):
        values = gauge_value(SQUARE, np.array([[0.5, 0], [0, -2], [3, 3]]))
        assert_points_close(values, [0.5, 2.0, 3.0])


class IntersectTests(SimpleTestCase):

    def test_self_intersection(self):
        factory.random.reseed_random(31)
        P = HullFactory()
        self.assertTrue(intersect(P, P).approx_equal(P, eps=1e-9))

    def test_disjoint(self):
        far = ConvexPolygon([(2, 0), (3, 0), (3, 1), (2, 1)])
        self.assertIsNone(intersect(SQUARE, far))

    def test_triangle_and_reflection_make_hexagon(self):
        S = regular_kgon(3, math.pi / 2)
        hexagon = intersect(S, -S)
        self.assertEqual(len(hexagon), 6)
        self.assertTrue(hexagon.is_symmetric())

    def test_support_below_both(self):
        factory.random.reseed_random(32)
        for _ in range(30):
            P, Q = HullFactory(), HullFactory()
            both = intersect(P, Q)
            if both is None:
                continue
            for _ in range(10):
                u = random_direction()
                self.assertLessEqual(support(both, u).value, min(support(P, u).value, support(Q, u).value) + 1e-9)

    def test_segment_clipped_by_square(self):
        seg = ConvexPolygon([(-3, 0), (3, 0)])
        assert_points_close(sorted(intersect(seg, SQUARE).vertices), [(-1, 0), (1, 0)])


class CatalogTests(SimpleTestCase):

    def test_regular_triangle_has_top_vertex(self):
        self.assertIn(Point(0.0, 1.0), [Point(round(x, 12), round(y, 12)) for x, y in regular_kgon(3, math.pi / 2)])

    def test_square_circumradius(self):
        assert_points_close(np.linalg.norm(regular_kgon(4).array, axis=1), np.ones(4))

    def test_pentagon_unit_vertices(self):
        assert_points_close(np.linalg.norm(pentagon_vertices(), axis=1), np.ones(5))

    def test_small_k_rejected(self):
        with self.assertRaises(GeometryError):
            regular_kgon(2)

    def test_hexagon_labels_clockwise(self):
        q = hexagon_vertices()
        assert_points_close(q[0], (0, 1))
        cross = q[0, 0] * q[1, 1] - q[0, 1] * q[1, 0]
        self.assertLess(cross, 0)

    def test_parse_kinds(self):
        self.assertEqual(GaugeKind.parse('pentagon'), GaugeKind.regular(5))
        self.assertEqual(GaugeKind.parse('disk:64').m, 64)
        self.assertEqual(GaugeKind.parse('kgon:3').canonical().tag, GaugeTag.TRIANGLE)
        with self.assertRaises(GeometryError):
            GaugeKind.parse('ellipse')
        with self.assertRaises(GeometryError):
            GaugeKind.disk(8)

    def test_disk_contains_unit_circle(self):
        disk = gauge_polygon(GaugeKind.disk(64))
        for angle in np.linspace(0, 2 * math.pi, 50):
            self.assertTrue(disk.contains((math.cos(angle), math.sin(angle)), eps=1e-12))


# ============================================
# Maps and interpolation
# ============================================

class AffineAndInterpolationTests(SimpleTestCase):

    def test_identity_map(self):
        self.assertTrue(affine_map(SQUARE, np.eye(2), (0, 0)).approx_equal(SQUARE))

    def test_singular_map_rejected(self):
        with self.assertRaises(GeometryError):
            affine_map(SQUARE, [[1, 2], [2, 4]], (0, 0))

    def test_reflection_keeps_orientation(self):
        image = affine_map(SQUARE, [[-1, 0], [0, 1]], (0, 0))
        self.assertGreater(image.area, 0)

    def test_point_reflection_of_symmetric_body(self):
        factory.random.reseed_random(41)
        P = SymmetricBodyFactory().translate((1.0, 2.0))
        image = affine_map(P, -np.eye(2), (0, 0))
        self.assertTrue(image.approx_equal(P.translate((-2.0, -4.0)), eps=1e-9))

    def test_endpoints(self):
        factory.random.reseed_random(42)
        K = HullFactory()
        self.assertIs(interpolate(K, SQUARE, 0.0), K)
        self.assertIs(interpolate(K, SQUARE, 1.0), SQUARE)

    def test_half_from_origin(self):
        half = interpolate(ConvexPolygon([(0, 0)]), SQUARE, 0.5)
        self.assertTrue(half.approx_equal(SQUARE.scaled(0.5)))

    def test_out_of_range(self):
        with self.assertRaises(GeometryError):
            interpolate(SQUARE, SQUARE, 1.5)


# ============================================
# Polygon documents
# ============================================

class PolygonSerializerTests(SimpleTestCase):

    def test_round_trip_document(self):
        poly = parse_polygon('{"vertices": [[0, 0], [1, 0], [0, 1]]}')
        self.assertEqual(PolygonSerializer(poly).data, {'vertices': [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]})

    def test_clockwise_reversed(self):
        poly = parse_polygon('{"vertices": [[0, 0], [0, 1], [1, 0]]}')
        self.assertGreater(poly.area, 0)

    def test_bad_documents(self):
        for text in ('[1, 2]', '{"vertices": []}', '{"vertices": [[0, "a"]]}', 'not json',
                     '{"vertices": [[0, 0], [2, 0], [1, 0.2], [2, 2], [0, 2]]}'):
            with self.subTest(text=text), pytest.raises(serializers.ValidationError):
                parse_polygon(text)

    def test_point_field_parses_pairs(self):
        field = PointField()
        self.assertEqual(field.run_validation([1, '2.5']), (1.0, 2.5))
        self.assertEqual(field.run_validation((0, -3)).y, -3.0)

    def test_point_field_rejects_bad_pairs(self):
        for value in ([1], [1, 2, 3], ['a', 1], [float('inf'), 0], None, 5):
            with self.subTest(value=value), pytest.raises(serializers.ValidationError):
                PointField().run_validation(value)
