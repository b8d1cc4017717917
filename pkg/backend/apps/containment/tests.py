# backend/apps/containment/tests.py
from unittest import mock

import factory.random
import numpy as np
import pytest
from django.test import SimpleTestCase

from apps.convex.factories import HullFactory, SymmetricBodyFactory
from apps.convex.gauges import GaugeKind, gauge_polygon
from apps.convex.geometry import ConvexPolygon
from apps.diagram.families import hexagon_family, triangle_family
from apps.radii.functionals import circumradius
from core.exceptions import CertificateError, GeometryError
from core.tolerances import Tolerances
from .certificates import ContainmentCertificate, certify, validate_certificate
from .reduction import HalfplaneRegion, bohnenblust_equality_check, reduce
from .serializers import ContainmentCertificateSerializer, SimplexReductionSerializer

SQUARE = gauge_polygon(GaugeKind.square())
TRIANGLE = gauge_polygon(GaugeKind.triangle())
HEXAGON = gauge_polygon(GaugeKind.regular(6))
DISK = gauge_polygon(GaugeKind.disk(64))
TOL = Tolerances()


def random_pairs(seed, count):
    factory.random.reseed_random(seed)
    return [(HullFactory(), HullFactory()) for _ in range(count)]


class CertificateTests(SimpleTestCase):

    def test_segment_in_square(self):
        seg = ConvexPolygon([(-1, 0), (1, 0)])
        cert = certify(seg, SQUARE)
        self.assertEqual(cert.k, 2)
        self.assertEqual(sorted(round(u.x) for u in cert.normals), [-1, 1])
        self.assertAlmostEqual(cert.weights[0], 0.5, places=9)
        self.assertTrue(validate_certificate(cert, seg, SQUARE).valid)

    def test_gauge_in_itself(self):
        for C in (SQUARE, TRIANGLE, HEXAGON):
            cert = certify(C, C)
            self.assertIn(cert.k, (2, 3))
            self.assertAlmostEqual(sum(cert.weights), 1.0, places=12)
            self.assertAlmostEqual(cert.scale, 1.0, places=9)
            self.assertTrue(validate_certificate(cert, C, C).valid)

    def test_family_triangle_needs_three_contacts(self):
        T = triangle_family(1.5)
        cert = certify(T, TRIANGLE)
        self.assertEqual(cert.k, 3)
        self.assertTrue(all(m > 0.1 for m in cert.weights))
        check = validate_certificate(cert, T, TRIANGLE)
        self.assertTrue(check.valid)
        self.assertLess(check.residual, 1e-9)

    def test_contacts_are_in_the_frame_of_c(self):
        K = triangle_family(1.5).scaled(3.0).translate((5.0, -2.0))
        cert = certify(K, TRIANGLE)
        self.assertAlmostEqual(cert.scale, 3.0, places=8)
        Kn = cert.normalized(K)
        self.assertAlmostEqual(circumradius(Kn, TRIANGLE).R, 1.0, places=8)

    def test_random_pairs(self):
        for K, C in random_pairs(11, 40):
            cert = certify(K, C)
            self.assertTrue(validate_certificate(cert, K, C).valid, msg=cert.as_line())

    def test_single_point_rejected(self):
        with self.assertRaises(GeometryError):
            certify(ConvexPolygon([(1, 1)]), SQUARE)

    def test_no_selection_raises_with_residual(self):
        with mock.patch('apps.containment.certificates._select', return_value=(None, None)):
            with self.assertRaises(CertificateError) as ctx:
                certify(TRIANGLE, TRIANGLE)
        self.assertIsNotNone(ctx.exception.residual)

    def test_corrupted_certificate_fails_validation(self):
        cert = certify(triangle_family(1.5), TRIANGLE)
        moved = ContainmentCertificate(
            points=cert.points,
            normals=cert.normals,
            weights=(1.0, 0.0, 0.0),
            translation=cert.translation,
            scale=cert.scale,
            residual=cert.residual,
        )
        check = validate_certificate(moved, triangle_family(1.5), TRIANGLE)
        self.assertFalse(check.valid)
        self.assertGreater(check.residual, 0.5)

    def test_as_line(self):
        line = certify(ConvexPolygon([(-1, 0), (1, 0)]), SQUARE).as_line()
        self.assertTrue(line.startswith('k=2 points=['))
        for part in ('normals=[', 'mu=[0.5, 0.5]', 'residual='):
            self.assertIn(part, line)

    def test_serializer(self):
        data = ContainmentCertificateSerializer(certify(triangle_family(1.5), TRIANGLE)).data
        self.assertEqual(data['k'], 3)
        self.assertEqual(len(data['points']), 3)
        self.assertEqual(len(data['points'][0]), 2)
        self.assertAlmostEqual(sum(data['mu']), 1.0, places=12)


@pytest.mark.slow
def test_certificates_for_large_random_corpus():
    for K, C in random_pairs(2024, 1000):
        cert = certify(K, C, tol=TOL)
        assert validate_certificate(cert, K, C, tol=TOL).valid, cert.as_line()


@pytest.mark.slow
def test_reduction_guarantees_for_large_random_corpus():
    factory.random.reseed_random(2025)
    for index in range(1000):
        K = HullFactory()
        C = SymmetricBodyFactory() if index % 2 else HullFactory()
        cert = certify(K, C, tol=TOL)
        assert validate_certificate(cert, K, C, tol=TOL).valid, index
        red = reduce(K, C, tol=TOL, certificate=cert)
        assert (red.Ssym is not None) == C.is_symmetric(), index
        for name, slack in red.guarantee_slacks().items():
            assert slack >= -1e-6, (index, name)


class ReductionTests(SimpleTestCase):

    def assertGuarantees(self, red):
        for name, slack in red.guarantee_slacks().items():
            self.assertGreaterEqual(slack, -1e-6, msg=name)

    def test_segment_gives_strip(self):
        seg = ConvexPolygon([(-1, 0), (1, 0)])
        red = reduce(seg, SQUARE)
        self.assertEqual(red.k, 2)
        self.assertTrue(red.S.is_strip)
        self.assertAlmostEqual(red.S.strip_width(), 2.0, places=9)
        self.assertAlmostEqual(red.R_TS, 1.0, places=9)
        self.assertEqual(red.r_TS, 0.0)
        self.assertAlmostEqual(red.D_TS, 2.0, places=9)
        self.assertGuarantees(red)

    def test_family_triangle_reduces_to_itself(self):
        red = reduce(triangle_family(1.5), TRIANGLE)
        self.assertEqual(red.k, 3)
        self.assertFalse(red.S.is_strip)
        self.assertAlmostEqual(red.R_TS, 1.0, places=8)
        self.assertAlmostEqual(red.r_TS, red.r_KC, places=7)
        self.assertAlmostEqual(red.D_TS, red.D_KC, places=7)
        self.assertTrue(red.S.contains_polygon(TRIANGLE))
        self.assertIsNone(red.Ssym)

    def test_symmetric_gauge_gets_ssym(self):
        red = reduce(hexagon_family(0.75), HEXAGON)
        self.assertIsNotNone(red.Ssym)
        self.assertTrue(red.Ssym.contains_polygon(HEXAGON))
        self.assertGuarantees(red)

    def test_random_pairs_keep_guarantees(self):
        for K, C in random_pairs(5, 25):
            red = reduce(K, C)
            self.assertTrue(red.S.contains_polygon(C, eps=1e-6))
            self.assertGuarantees(red)

    def test_symmetric_random_gauges(self):
        factory.random.reseed_random(8)
        for _ in range(10):
            K, C = HullFactory(), SymmetricBodyFactory()
            red = reduce(K, C)
            self.assertIsNotNone(red.Ssym)
            self.assertGuarantees(red)

    def test_reflected_region(self):
        S = HalfplaneRegion.build([[1.0, 0.0], [-1.0, 0.0]], [1.0, 3.0], (0.0, 0.0), 1.0)
        self.assertTrue(S.is_strip)
        R = S.reflected((0.0, 0.0))
        np.testing.assert_allclose(R.offsets, [1.0, 3.0])
        np.testing.assert_allclose(R.normals, [[-1.0, 0.0], [1.0, 0.0]])
        self.assertAlmostEqual(S.intersect(R).strip_width(), 2.0, places=12)

    def test_serializer(self):
        data = SimplexReductionSerializer(reduce(ConvexPolygon([(-1, 0), (1, 0)]), SQUARE)).data
        self.assertEqual(data['k'], 2)
        self.assertTrue(data['S']['is_strip'])
        self.assertIn('R(T,S) = 1', data['slacks'])


class BohnenblustTests(SimpleTestCase):

    def test_midpoint_triangle_of_hexagon_is_equality_case(self):
        check = bohnenblust_equality_check(hexagon_family(0.5), HEXAGON)
        self.assertTrue(check.holds)
        self.assertLess(max(abs(s) for s in check.slacks), 1e-7)

    def test_equilateral_triangle_in_disk_fails_second_inclusion(self):
        check = bohnenblust_equality_check(TRIANGLE, DISK)
        self.assertFalse(check.holds)
        self.assertGreater(check.slacks[1], 0.1)

    def test_requires_a_triangle(self):
        with self.assertRaises(GeometryError):
            bohnenblust_equality_check(SQUARE, HEXAGON)
