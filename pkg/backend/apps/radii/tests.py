# backend/apps/radii/tests.py
import math

import factory.random
import numpy as np
import pytest
from django.test import SimpleTestCase

from apps.convex.factories import HullFactory, SymmetricBodyFactory, random_affine_matrix, random_direction
from apps.convex.gauges import GaugeKind, gauge_polygon
from apps.convex.geometry import ConvexPolygon, affine_map, convex_hull, interpolate
from core.exceptions import DegenerateGaugeError, GeometryError
from .functionals import (
    asymmetry,
    circumradius,
    diagram_point,
    diameter,
    inradius,
    normalize,
    pairwise_diameter,
    profile,
)
from .serializers import RadiiProfileSerializer

SQUARE = gauge_polygon(GaugeKind.square())
TRIANGLE = gauge_polygon(GaugeKind.triangle())
PENTAGON = gauge_polygon(GaugeKind.regular(5))
HEXAGON = gauge_polygon(GaugeKind.regular(6))
GAUGES = [SQUARE, TRIANGLE, PENTAGON, HEXAGON]


def random_pairs(seed, count):
    factory.random.reseed_random(seed)
    return [(HullFactory(), HullFactory()) for _ in range(count)]


class CircumradiusTests(SimpleTestCase):

    def test_gauge_in_itself(self):
        for C in GAUGES:
            self.assertAlmostEqual(circumradius(C, C).R, 1.0, places=9)

    def test_reflected_triangle(self):
        self.assertAlmostEqual(circumradius(-TRIANGLE, TRIANGLE).R, 2.0, places=9)

    def test_segment_in_square(self):
        seg = ConvexPolygon([(-1, 0), (1, 0)])
        self.assertAlmostEqual(circumradius(seg, SQUARE).R, 1.0, places=9)

    def test_center_witnesses_containment(self):
        for K, C in random_pairs(1, 20):
            circ = circumradius(K, C)
            shifted = K.translate(-np.asarray(circ.center))
            self.assertTrue(C.scaled(circ.R).contains_polygon(shifted, eps=1e-8))

    def test_tight_pairs_are_contacts(self):
        circ = circumradius(-TRIANGLE, TRIANGLE)
        self.assertTrue(circ.tight)
        normals = TRIANGLE.edge_normals()
        for v, i in circ.tight:
            p = (-TRIANGLE).array[v] - np.asarray(circ.center)
            self.assertAlmostEqual(p @ normals[i], circ.R * (TRIANGLE.array[i] @ normals[i]), places=8)

    def test_point_has_zero_circumradius(self):
        self.assertEqual(circumradius(ConvexPolygon([(3, 4)]), SQUARE).R, 0.0)

    def test_degenerate_gauge_rejected(self):
        with self.assertRaises(DegenerateGaugeError):
            circumradius(SQUARE, ConvexPolygon([(0, 0), (1, 0)]))


class InradiusTests(SimpleTestCase):

    def test_gauge_in_itself(self):
        for C in GAUGES:
            self.assertAlmostEqual(inradius(C, C).r, 1.0, places=9)

    def test_degenerate_body_is_zero(self):
        self.assertEqual(inradius(ConvexPolygon([(0, 0), (1, 1)]), SQUARE).r, 0.0)
        self.assertEqual(inradius(ConvexPolygon([(0, 0)]), TRIANGLE).r, 0.0)

    def test_reciprocal_of_circumradius(self):
        for K, C in random_pairs(2, 30):
            self.assertAlmostEqual(inradius(K, C).r * circumradius(C, K).R, 1.0, places=7)

    def test_center_witnesses_containment(self):
        for K, C in random_pairs(3, 20):
            inr = inradius(K, C)
            inner = C.scaled(inr.r).translate(inr.center)
            self.assertTrue(K.contains_polygon(inner, eps=1e-8))

    def test_degenerate_gauge_rejected(self):
        with self.assertRaises(DegenerateGaugeError):
            inradius(SQUARE, ConvexPolygon([(0, 0)]))


class DiameterTests(SimpleTestCase):

    def test_gauge_in_itself(self):
        for C in GAUGES:
            self.assertAlmostEqual(diameter(C, C).D, 2.0, places=9)

    def test_matches_pairwise_oracle(self):
        for K, C in random_pairs(4, 50):
            self.assertAlmostEqual(diameter(K, C).D, pairwise_diameter(K, C).D, places=9)

    def test_lower_bounded_by_width_ratios(self):
        factory.random.reseed_random(5)
        K, C = HullFactory(), HullFactory()
        D = diameter(K, C).D
        for _ in range(200):
            u = random_direction()
            self.assertGreaterEqual(D, 2 * K.width(u) / C.width(u) - 1e-12)

    def test_pair_members_are_vertices(self):
        for K, C in random_pairs(6, 20):
            dia = diameter(K, C)
            for p in dia.pair:
                self.assertIn(p, K.vertices)
            gap = np.asarray(dia.pair[0]) - np.asarray(dia.pair[1])
            self.assertAlmostEqual(2 * abs(gap @ np.asarray(dia.direction)) / C.width(dia.direction), dia.D, places=9)

    def test_point_has_zero_diameter(self):
        self.assertEqual(diameter(ConvexPolygon([(1, 1)]), HEXAGON).D, 0.0)


class AsymmetryTests(SimpleTestCase):

    def test_square(self):
        self.assertAlmostEqual(asymmetry(SQUARE), 1.0, delta=1e-9)

    def test_triangle(self):
        self.assertAlmostEqual(asymmetry(TRIANGLE), 2.0, delta=1e-9)

    def test_pentagon(self):
        self.assertAlmostEqual(asymmetry(PENTAGON), math.sqrt(5) - 1, delta=1e-9)

    def test_symmetric_bodies(self):
        factory.random.reseed_random(7)
        for _ in range(10):
            self.assertAlmostEqual(asymmetry(SymmetricBodyFactory()), 1.0, delta=1e-9)


class DiagramPointTests(SimpleTestCase):

    def test_gauge_maps_to_corner(self):
        for C in GAUGES:
            x, y = diagram_point(C, C)
            self.assertAlmostEqual(x, 1.0, places=9)
            self.assertAlmostEqual(y, 1.0, places=9)

    def test_segment_maps_to_left_top(self):
        factory.random.reseed_random(8)
        for _ in range(10):
            seg = ConvexPolygon([(0.1, -0.3), (0.7, 0.4)])
            x, y = diagram_point(seg, HullFactory())
            self.assertEqual(x, 0.0)
            self.assertAlmostEqual(y, 1.0, places=9)

    def test_reflected_triangle(self):
        prof = profile(-TRIANGLE, TRIANGLE)
        self.assertAlmostEqual(prof.r, 0.5, places=9)
        self.assertAlmostEqual(prof.D, 2.0, places=9)
        self.assertAlmostEqual(prof.R, 2.0, places=9)
        self.assertAlmostEqual(prof.x, 0.25, places=9)
        self.assertAlmostEqual(prof.y, 0.5, places=9)

    def test_point_rejected(self):
        with self.assertRaises(GeometryError):
            diagram_point(ConvexPolygon([(0, 0)]), SQUARE)

    def test_inside_unit_square(self):
        for K, C in random_pairs(9, 40):
            x, y = diagram_point(K, C)
            self.assertGreaterEqual(x, -1e-12)
            self.assertLessEqual(x, 1 + 1e-9)
            self.assertGreater(y, 0)
            self.assertLessEqual(y, 1 + 1e-9)


class InvarianceTests(SimpleTestCase):

    def test_translation(self):
        for K, C in random_pairs(10, 10):
            base = profile(K, C)
            moved = profile(K.translate((2.5, -1.0)), C.translate((-4.0, 3.0)))
            for name in ('r', 'D', 'R', 's'):
                self.assertAlmostEqual(getattr(base, name), getattr(moved, name), places=8)

    def test_dilation(self):
        for K, C in random_pairs(11, 10):
            base = profile(K, C)
            scaled = profile(K.scaled(3.0), C.scaled(0.5))
            for name in ('r', 'D', 'R'):
                self.assertAlmostEqual(getattr(scaled, name), 6.0 * getattr(base, name), places=7)

    def test_affine(self):
        pairs = random_pairs(12, 20)
        for K, C in pairs:
            M = random_affine_matrix()
            b = np.asarray(random_direction())
            base = diagram_point(K, C)
            mapped = diagram_point(affine_map(K, M, b), affine_map(C, M, b))
            self.assertAlmostEqual(base.x, mapped.x, delta=1e-7)
            self.assertAlmostEqual(base.y, mapped.y, delta=1e-7)

    def test_monotone_in_body(self):
        for K, C in random_pairs(13, 15):
            bigger = convex_hull(np.vstack([K.array, [[1.5, 1.5]]]))
            self.assertLessEqual(circumradius(K, C).R, circumradius(bigger, C).R + 1e-9)

    def test_monotone_in_gauge(self):
        factory.random.reseed_random(14)
        for _ in range(15):
            K, C2 = HullFactory(), HullFactory()
            C1 = convex_hull(np.vstack([C2.array, [[2.0, -2.0]]]))
            self.assertLessEqual(circumradius(K, C1).R, circumradius(K, C2).R + 1e-9)


class NormalizeTests(SimpleTestCase):

    def test_optimally_contained(self):
        for K, C in random_pairs(15, 20):
            Kn = normalize(K, C)
            self.assertAlmostEqual(circumradius(Kn, C).R, 1.0, places=8)
            self.assertTrue(C.contains_polygon(Kn, eps=1e-8))

    def test_point_rejected(self):
        with self.assertRaises(GeometryError):
            normalize(ConvexPolygon([(1, 2)]), SQUARE)


def test_star_shaped_interpolation():
    for K, C in random_pairs(16, 15):
        Kn = normalize(K, C)
        x0, y0 = diagram_point(Kn, C)
        for lam in np.arange(1, 10) / 10:
            x, y = diagram_point(interpolate(Kn, C, lam), C)
            assert abs(x - ((1 - lam) * x0 + lam)) <= 1e-7
            assert abs(y - ((1 - lam) * y0 + lam)) <= 1e-7


@pytest.mark.parametrize('C', GAUGES, ids=['square', 'triangle', 'pentagon', 'hexagon'])
def test_classical_inequalities(C):
    factory.random.reseed_random(17)
    s = asymmetry(C)
    symmetric = abs(s - 1) <= 1e-7
    for _ in range(40):
        p = profile(HullFactory(), C, s=s)
        assert p.symmetric is symmetric
        assert p.D <= 2 * p.R + 1e-9
        assert 2 * p.r + p.R <= 1.5 * p.D + 1e-9
        assert s * p.r + p.R <= (s + 1) / 2 * p.D + 1e-9
        assert p.x >= p.y * (1 - p.y) - 1e-9
        if symmetric:
            assert p.r + p.R <= p.D + 1e-9
            assert p.R <= 2 / 3 * p.D + 1e-9


def test_profile_serializer_renders_all_fields():
    data = RadiiProfileSerializer(profile(SQUARE, SQUARE)).data
    assert set(data) == {'r', 'D', 'R', 's', 'x', 'y', 'incenter', 'circumcenter',
                         'diameter_pair', 'width_direction', 'symmetric'}
    assert data['symmetric'] is True
    assert len(data['diameter_pair']) == 2
    assert data['R'] == pytest.approx(1.0)


def mixed_gauge(index):
    """Catalog gauges, random asymmetric bodies and random symmetric bodies in turn"""
    choice = index % 6
    if choice < len(GAUGES):
        return GAUGES[choice]
    if choice == 4:
        return HullFactory()
    return SymmetricBodyFactory()


@pytest.mark.slow
def test_classical_inequalities_on_mixed_corpus():
    factory.random.reseed_random(51)
    for index in range(10_000):
        C = mixed_gauge(index)
        p = profile(HullFactory(), C)
        x, y, s = p.x, p.y, p.s
        assert 1 - y >= -1e-7, index
        assert 3 * y - 2 * x - 1 >= -1e-7, index
        assert x - y * (1 - y) >= -1e-7, index
        assert (s + 1) * y - s * x - 1 >= -1e-7, index
        if p.symmetric:
            assert 2 * y - x - 1 >= -1e-7, index
            assert 4 * y / 3 - 1 >= -1e-7, index


@pytest.mark.slow
def test_star_shaped_interpolation_corpus():
    factory.random.reseed_random(52)
    rnd = factory.random.randgen
    for index in range(1_000):
        K, C = HullFactory(), mixed_gauge(index)
        lam = rnd.uniform(0.0, 1.0)
        Kn = normalize(K, C)
        x0, y0 = diagram_point(Kn, C)
        x, y = diagram_point(interpolate(Kn, C, lam), C)
        assert abs(x - ((1 - lam) * x0 + lam)) <= 1e-6, index
        assert abs(y - ((1 - lam) * y0 + lam)) <= 1e-6, index
