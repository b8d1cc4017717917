# backend/apps/diagram/tests.py
import io
import math

import numpy as np
import pytest
from django.test import SimpleTestCase

from apps.convex.gauges import GaugeKind, gauge_polygon
from apps.radii.functionals import diagram_point
from core.exceptions import GeometryError, UnsupportedGaugeError
from . import inequalities as ineq
from .boundaries import boundary_spec, classify, union_spec
from .families import (
    PENTAGON_JUNG_Y,
    edge_diameters,
    family_points,
    hexagon_family,
    hexagon_family_point,
    LimitTarget,
    kgon_approximation,
    kgon_limit_experiment,
    limit_targets,
    minus_gauge_point,
    parallelogram_kgon_approximation,
    pentagon_family,
    pentagon_family_point,
    pentagon_jung_triangles,
    symmetric_kgon_approximation,
    triangle_family,
    triangle_family_point,
)
from .rendering import render_svg
from .sampling import CSV_COLUMNS, FAMILY_GRID, coverage_gap, coverage_points, sample_bodies, write_csv

SQRT5 = math.sqrt(5.0)
TRIANGLE_KIND = GaugeKind.triangle()
PENTAGON_KIND = GaugeKind.regular(5)
HEXAGON_KIND = GaugeKind.regular(6)
TRIANGLE = gauge_polygon(TRIANGLE_KIND)
SQUARE = gauge_polygon(GaugeKind.square())
PENTAGON = gauge_polygon(PENTAGON_KIND)
HEXAGON = gauge_polygon(HEXAGON_KIND)


def assert_close_points(actual, expected, tol=1e-7):
    assert max(abs(actual[0] - expected[0]), abs(actual[1] - expected[1])) <= tol, (actual, expected)


class FamilyTests(SimpleTestCase):

    def test_triangle_family_matches_closed_form(self):
        for D in np.linspace(1.0, 2.0, 101):
            assert_close_points(diagram_point(triangle_family(D), TRIANGLE), triangle_family_point(D))

    def test_triangle_family_inradius_formula(self):
        x, y = triangle_family_point(1.5)
        self.assertAlmostEqual(x, 0.75 * (1 - 0.75), places=12)
        self.assertAlmostEqual(y, 0.75, places=12)

    def test_hexagon_family_matches_closed_form(self):
        for lam in np.linspace(0.5, 1.0, 101):
            assert_close_points(diagram_point(hexagon_family(lam), HEXAGON), hexagon_family_point(lam))

    def test_pentagon_family_matches_closed_form(self):
        for lam in np.linspace(0.0, 0.5, 101):
            assert_close_points(diagram_point(pentagon_family(lam), PENTAGON), pentagon_family_point(lam))

    def test_pentagon_family_starts_at_top(self):
        self.assertEqual(tuple(pentagon_family_point(0.0)), (0.0, 1.0))
        self.assertEqual(len(pentagon_family(0.0)), 2)

    def test_parameter_ranges(self):
        with self.assertRaises(GeometryError):
            triangle_family(0.5)
        with self.assertRaises(GeometryError):
            hexagon_family_point(0.25)
        with self.assertRaises(GeometryError):
            pentagon_family(0.75)

    def test_family_points(self):
        self.assertEqual(len(family_points(TRIANGLE_KIND, 11)), 11)
        self.assertEqual(len(family_points(PENTAGON_KIND, 11)), 13)
        self.assertEqual(family_points(GaugeKind.square(), 11), [])
        # kgon:3 is the triangle kind
        self.assertEqual(len(family_points(GaugeKind.regular(3), 5)), 5)


class JungTriangleTests(SimpleTestCase):

    def test_both_attain_the_jung_ratio(self):
        for T in pentagon_jung_triangles():
            _, y = diagram_point(T, PENTAGON)
            self.assertAlmostEqual(2.0 * y, (SQRT5 + 1.0) / 2.0, places=8)

    def test_diametrical_edges(self):
        T, T_prime = pentagon_jung_triangles()
        spread = edge_diameters(T_prime, PENTAGON)
        self.assertLess(max(spread) - min(spread), 1e-9)
        diameters = edge_diameters(T, PENTAGON)
        self.assertEqual(sum(1 for d in diameters if max(diameters) - d <= 1e-9), 2)

    def test_t_is_the_left_end_of_the_family(self):
        T, _ = pentagon_jung_triangles()
        assert_close_points(diagram_point(T, PENTAGON), pentagon_family_point(0.5))

    def test_minus_gauge_points(self):
        assert_close_points(minus_gauge_point(TRIANGLE), (0.25, 0.5))
        assert_close_points(minus_gauge_point(PENTAGON), ((3.0 + SQRT5) / 8.0, PENTAGON_JUNG_Y))
        assert_close_points(minus_gauge_point(HEXAGON), (1.0, 1.0))


class KgonLimitTests(SimpleTestCase):

    def test_approximation_vertex_count(self):
        self.assertEqual(len(kgon_approximation(3, 1)), 3)
        self.assertEqual(len(kgon_approximation(7, 3)), 7)
        with self.assertRaises(GeometryError):
            kgon_approximation(2, 1)

    def test_distances_shrink(self):
        rows = kgon_limit_experiment(6, 4, grid=5)
        self.assertEqual([row.m for row in rows], [1, 2, 3, 4])
        self.assertAlmostEqual(rows[-1].hausdorff, 1 / 16)
        self.assertLess(rows[-1].distance, rows[0].distance)

    def test_symmetric_approximation(self):
        for k in (6, 8, 12):
            C = symmetric_kgon_approximation(k, 2)
            self.assertEqual(len(C), k)
            self.assertTrue(C.is_symmetric())
            self.assertTrue(C.contains_polygon(HEXAGON))
        for k in (4, 7):
            with self.subTest(k=k), self.assertRaises(GeometryError):
                symmetric_kgon_approximation(k, 1)

    def test_parallelogram_approximation(self):
        self.assertTrue(parallelogram_kgon_approximation(4, 3).approx_equal(SQUARE))
        C = parallelogram_kgon_approximation(9, 1)
        self.assertEqual(len(C), 9)
        self.assertTrue(C.contains_polygon(SQUARE))
        with self.assertRaises(GeometryError):
            parallelogram_kgon_approximation(3, 1)

    def test_limit_targets(self):
        self.assertEqual(limit_targets(3), [LimitTarget.TRIANGLE])
        self.assertEqual(limit_targets(5), [LimitTarget.TRIANGLE, LimitTarget.PARALLELOGRAM])
        self.assertIn(LimitTarget.HEXAGON, limit_targets(8))
        self.assertNotIn(LimitTarget.HEXAGON, limit_targets(9))

    def test_hexagon_distances_shrink(self):
        rows = kgon_limit_experiment(12, 4, grid=5, target='hexagon')
        self.assertGreater(rows[0].distance, 0.0)
        self.assertLess(rows[-1].distance, rows[0].distance)
        self.assertLess(rows[-1].hausdorff, rows[0].hausdorff)

    def test_hexagon_limit_is_exact_for_the_hexagon(self):
        rows = kgon_limit_experiment(6, 2, grid=5, target=LimitTarget.HEXAGON)
        self.assertEqual([row.hausdorff for row in rows], [0.0, 0.0])
        self.assertLess(max(row.distance for row in rows), 1e-6)

    def test_parallelogram_distances_shrink(self):
        rows = kgon_limit_experiment(8, 4, grid=5, target=LimitTarget.PARALLELOGRAM)
        self.assertGreater(rows[0].distance, 0.0)
        self.assertLess(rows[-1].distance, rows[0].distance)
        square = kgon_limit_experiment(4, 1, grid=5, target=LimitTarget.PARALLELOGRAM)
        self.assertLess(square[0].distance, 1e-7)


class InequalityTests(SimpleTestCase):

    def test_minus_triangle_is_tight_for_the_asymmetry_lines(self):
        results = {res.name: res for res in ineq.evaluate_inequalities(0.25, 0.5, 2.0, TRIANGLE_KIND)}
        self.assertAlmostEqual(results[ineq.ASYMMETRY_LINE.name].slack, 0.0, places=12)
        self.assertAlmostEqual(results[ineq.PLANAR_UPPER.name].slack, 0.0, places=12)
        self.assertNotIn(ineq.SYMMETRIC_LINE.name, results)

    def test_symmetric_group_switches_on(self):
        names = [res.name for res in ineq.evaluate_inequalities(0.5, 0.8, 1.0, HEXAGON_KIND)]
        self.assertIn(ineq.SYMMETRIC_LINE.name, names)
        self.assertIn(ineq.BOHNENBLUST.name, names)
        self.assertIn(ineq.HEXAGON_QUARTER.name, names)

    def test_santalo_bound(self):
        self.assertAlmostEqual(ineq.santalo_bound(math.sqrt(3.0) / 2.0), 0.5, places=12)
        self.assertEqual(ineq.santalo_bound(1.0), 0.0)

    def test_hexagon_quarter_inactive_at_the_top(self):
        self.assertEqual(ineq.HEXAGON_QUARTER(0.0, 1.0), math.inf)
        self.assertAlmostEqual(ineq.HEXAGON_QUARTER(0.2, 0.9), -0.05, places=12)

    def test_disk_budget(self):
        (jung, _) = ineq.disk_inequalities(GaugeKind.disk(720))
        self.assertAlmostEqual(jung.budget, math.pi ** 2 / (2 * 720 ** 2), places=15)

    def test_suite_for_gauge_in_itself(self):
        for C, kind in ((TRIANGLE, TRIANGLE_KIND), (PENTAGON, PENTAGON_KIND), (HEXAGON, HEXAGON_KIND)):
            for res in ineq.inequality_suite(C, C, kind):
                self.assertTrue(res.passes(1e-7), msg=res)

    def test_worst(self):
        results = ineq.evaluate_inequalities(0.9, 0.5, 2.0, TRIANGLE_KIND)
        self.assertEqual(ineq.worst(results).name, ineq.PLANAR_UPPER.name)


class DiagramSpecTests(SimpleTestCase):

    def test_triangle_classification(self):
        spec = boundary_spec(TRIANGLE_KIND)
        self.assertEqual(classify(spec, (0.25, 0.5)).label, 'corner')
        self.assertEqual(classify(spec, (1.0, 1.0)).label, 'corner')
        self.assertEqual(classify(spec, (0.5, 0.8)).label, 'interior')
        self.assertEqual(classify(spec, (0.9, 0.5)).label, 'outside')
        self.assertEqual(classify(spec, tuple(triangle_family_point(1.5))).label, 'boundary')

    def test_family_members_are_on_the_boundary(self):
        spec = boundary_spec(TRIANGLE_KIND)
        for D in (1.2, 1.5, 1.8):
            point = diagram_point(triangle_family(D), TRIANGLE)
            self.assertIn(classify(spec, point).label, ('boundary', 'corner'))

    def test_hexagon_classification(self):
        spec = boundary_spec(HEXAGON_KIND)
        self.assertEqual(classify(spec, (0.2, 0.9)).label, 'outside')
        self.assertEqual(classify(spec, (0.2, 1.0)).label, 'boundary')
        self.assertEqual(len(spec.conjectured_curves), 1)

    def test_pentagon_curves(self):
        spec = boundary_spec(PENTAGON_KIND)
        self.assertAlmostEqual(spec.s, SQRT5 - 1.0, places=12)
        self.assertEqual(len(spec.conjectured_curves), 1)
        for curve in spec.proved_curves:
            for x, y in curve.points(11):
                self.assertTrue(spec.contains(x, y, tol=1e-9), msg=curve.name)

    def test_unsupported_kinds(self):
        with self.assertRaises(UnsupportedGaugeError):
            boundary_spec(GaugeKind.regular(7))
        with self.assertRaises(UnsupportedGaugeError):
            boundary_spec(GaugeKind.custom())

    def test_kgon_aliases(self):
        self.assertEqual(boundary_spec(GaugeKind.regular(4)).gauge, GaugeKind.square())

    def test_union_spec(self):
        spec = union_spec(GaugeKind.custom(), 2.0)
        self.assertTrue(spec.contains(1.0, 1.0))
        self.assertTrue(spec.contains(0.25, 0.5))
        self.assertFalse(spec.contains(0.9, 0.5))
        names = [i.name for i in union_spec(GaugeKind.custom(), 1.0).inequalities]
        self.assertIn(ineq.SYMMETRIC_LINE.name, names)


class SamplerTests(SimpleTestCase):

    def test_deterministic(self):
        first = sample_bodies(TRIANGLE, 15, seed=3, kind=TRIANGLE_KIND)
        second = sample_bodies(TRIANGLE, 15, seed=3, kind=TRIANGLE_KIND)
        self.assertEqual([s.csv_row() for s in first], [s.csv_row() for s in second])
        other = sample_bodies(TRIANGLE, 15, seed=4, kind=TRIANGLE_KIND)
        self.assertNotEqual([s.x for s in first], [s.x for s in other])

    def test_worker_count_does_not_change_results(self):
        serial = sample_bodies(PENTAGON, 8, seed=1, kind=PENTAGON_KIND, workers=1)
        parallel = sample_bodies(PENTAGON, 8, seed=1, kind=PENTAGON_KIND, workers=2)
        self.assertEqual([s.csv_row() for s in serial], [s.csv_row() for s in parallel])

    def test_prefix_is_stable(self):
        short = sample_bodies(TRIANGLE, 5, seed=9)
        long = sample_bodies(TRIANGLE, 10, seed=9)
        self.assertEqual([s.csv_row() for s in short], [s.csv_row() for s in long[:5]])

    def test_zero_samples_rejected(self):
        with self.assertRaises(GeometryError):
            sample_bodies(TRIANGLE, 0)

    def test_strategies(self):
        interp = sample_bodies(HEXAGON, 6, strategy='interp', kind=HEXAGON_KIND)
        self.assertEqual({s.strategy for s in interp}, {'interp'})
        mix = sample_bodies(TRIANGLE, 4, strategy='mix', kind=TRIANGLE_KIND)
        self.assertEqual(len(mix), 4 + FAMILY_GRID)
        self.assertEqual({s.strategy for s in mix}, {'hull', 'interp', 'family'})

    def test_triangle_samples_inside_region(self):
        spec = boundary_spec(TRIANGLE_KIND)
        for sample in sample_bodies(TRIANGLE, 150, seed=1, strategy='mix', kind=TRIANGLE_KIND):
            self.assertNotEqual(classify(spec, (sample.x, sample.y)).label, 'outside', msg=sample.index)

    def test_square_diagram_collapses_to_top_edge(self):
        for sample in sample_bodies(SQUARE, 60, seed=2, kind=GaugeKind.square()):
            self.assertAlmostEqual(sample.y, 1.0, delta=1e-7)

    def test_non_parallelograms_leave_the_top_edge(self):
        for C, kind in ((TRIANGLE, TRIANGLE_KIND), (PENTAGON, PENTAGON_KIND), (HEXAGON, HEXAGON_KIND)):
            samples = sample_bodies(C, 100, seed=0, kind=kind)
            with self.subTest(gauge=kind.label):
                self.assertLess(min(sample.D - 2 * sample.R for sample in samples), -0.05)

    def test_hexagon_is_not_a_parallelogram(self):
        _, y = diagram_point(hexagon_family(0.5), HEXAGON)
        self.assertLess(y, 1.0 - 0.2)

    def test_hexagon_samples(self):
        for sample in sample_bodies(HEXAGON, 80, seed=6, strategy='mix', kind=HEXAGON_KIND):
            self.assertGreaterEqual(sample.y, 0.75 - 1e-6)
            if sample.y < 1.0 - 1e-3:
                self.assertGreaterEqual(sample.x, 0.25 - 1e-6)

    def test_pentagon_samples_respect_jung(self):
        for sample in sample_bodies(PENTAGON, 80, seed=7, strategy='mix', kind=PENTAGON_KIND):
            self.assertGreaterEqual(sample.y, PENTAGON_JUNG_Y - 1e-6)
            self.assertGreaterEqual(SQRT5 * sample.y - (SQRT5 - 1.0) * sample.x - 1.0, -1e-6)

    def test_disk_samples(self):
        kind = GaugeKind.disk(720)
        budget = kind.model_error + 1e-7
        for sample in sample_bodies(gauge_polygon(kind), 20, seed=5, kind=kind):
            self.assertGreaterEqual(sample.y, math.sqrt(3.0) / 2.0 - budget)
            self.assertGreaterEqual(sample.x - ineq.santalo_bound(sample.y), -budget)
            self.assertGreaterEqual(2.0 * sample.y - sample.x - 1.0, -1e-7)


@pytest.mark.slow
def test_disk_acceptance_corpus():
    kind = GaugeKind.disk(720)
    spec = boundary_spec(kind)
    for sample in sample_bodies(gauge_polygon(kind), 5000, seed=0, kind=kind, workers=4):
        assert spec.classify((sample.x, sample.y), tol=1e-7).label != 'outside', sample.index


@pytest.mark.slow
def test_triangle_acceptance_corpus():
    spec = boundary_spec(TRIANGLE_KIND)
    for sample in sample_bodies(TRIANGLE, 10000, seed=0, strategy='mix', kind=TRIANGLE_KIND, workers=4):
        assert spec.classify((sample.x, sample.y), tol=1e-7).label != 'outside', sample.index


@pytest.mark.slow
def test_square_acceptance_corpus():
    kind = GaugeKind.square()
    for sample in sample_bodies(SQUARE, 10000, seed=0, kind=kind, workers=4):
        assert abs(sample.D - 2 * sample.R) <= 1e-7, sample.index


@pytest.mark.slow
def test_non_parallelogram_witnesses():
    for C, kind in ((TRIANGLE, TRIANGLE_KIND), (PENTAGON, PENTAGON_KIND), (HEXAGON, HEXAGON_KIND)):
        samples = sample_bodies(C, 10000, seed=0, kind=kind, workers=4)
        assert min(sample.D - 2 * sample.R for sample in samples) < -0.05, kind.label


@pytest.mark.slow
def test_hexagon_acceptance_corpus():
    samples = sample_bodies(HEXAGON, 10000, seed=0, kind=HEXAGON_KIND, workers=4)
    for sample in samples:
        if sample.y <= 1 - 1e-3:
            assert sample.x >= 0.25 - 1e-6, sample.index


@pytest.mark.slow
def test_triangle_region_is_covered():
    points = coverage_points(41)
    assert coverage_gap(points, boundary_spec(TRIANGLE_KIND)) <= 0.02


class OutputTests(SimpleTestCase):

    def test_csv(self):
        samples = sample_bodies(TRIANGLE, 4, seed=2, kind=TRIANGLE_KIND)
        stream = io.StringIO()
        write_csv(samples, stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], ','.join(CSV_COLUMNS))
        self.assertEqual(len(lines), 5)
        row = lines[1].split(',')
        self.assertEqual(row[:4], ['triangle', 'hull', '2', '0'])
        self.assertEqual(float(row[4]), samples[0].x)

    def test_svg(self):
        spec = boundary_spec(PENTAGON_KIND)
        samples = sample_bodies(PENTAGON, 3, seed=1, kind=PENTAGON_KIND)
        T, T_prime = pentagon_jung_triangles()
        highlights = [('T', tuple(diagram_point(T, PENTAGON))), ("T'", tuple(diagram_point(T_prime, PENTAGON)))]
        svg = render_svg(spec, samples, highlights=highlights)
        self.assertTrue(svg.startswith('<?xml'))
        self.assertIn('<svg', svg)
        self.assertIn('stroke-dasharray', svg)
        self.assertIn('<title>T</title>', svg)
        self.assertEqual(svg.count('r="1.2"'), 3)
        self.assertEqual(svg, render_svg(spec, samples, highlights=highlights))

    def test_svg_without_conjectures(self):
        svg = render_svg(boundary_spec(TRIANGLE_KIND), [])
        self.assertNotIn('stroke-dasharray', svg)
        self.assertIn('Diagram of the triangle gauge', svg)
