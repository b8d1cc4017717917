# backend/apps/cli/tests.py
import configparser
import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.conf import settings
from django.core.management import call_command, get_commands
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from apps.convex.gauges import GaugeKind, gauge_polygon
from apps.convex.serializers import dump_polygon
from apps.diagram.families import hexagon_family, triangle_family
from apps.radii.functionals import DiagramPoint
from .config import EXIT_INPUT, EXIT_NUMERICAL, RunConfig, resolve_gauge


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def polygon_file(self, name, polygon=None, text=None):
        path = self.tmp / name
        path.write_text(text if text is not None else dump_polygon(polygon))
        return str(path)

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            self.call(*args, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return str(ctx.exception)


class RunConfigTests(SimpleTestCase):

    def test_catalog_gauge(self):
        kind, polygon = resolve_gauge('pentagon')
        self.assertEqual(kind.label, 'pentagon')
        self.assertEqual(len(polygon), 5)

    def test_from_options(self):
        config = RunConfig.from_options('diagram', None, {'gauge': 'disk:64', 'n': 12, 'svg': 'out.svg'})
        self.assertEqual(config.gauge_kind.m, 64)
        self.assertEqual(config.n, 12)
        self.assertEqual(config.svg_path, Path('out.svg'))
        self.assertIsNone(config.csv_path)


class TestLayoutTests(SimpleTestCase):

    def test_collection_skips_reference_and_cache_dirs(self):
        config = configparser.ConfigParser()
        config.read(settings.BASE_DIR / 'pytest.ini')
        skipped = config['pytest']['norecursedirs'].split()
        for pattern in ('examples', '.hypothesis', '.*', '*.egg', 'build', 'dist', 'venv', 'node_modules'):
            self.assertIn(pattern, skipped)


class RadiiCommandTests(CommandTestCase):

    def test_family_triangle(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        out = self.call('radii', K=K, C='triangle')
        self.assertIn('f = (0.1875, 0.7500)', out)
        self.assertIn('R = 1', out)
        self.assertIn('s = 2', out)

    def test_square_in_itself(self):
        square = '{"vertices": [[1, -1], [1, 1], [-1, 1], [-1, -1]]}'
        K = self.polygon_file('k.json', text=square)
        C = self.polygon_file('c.json', text=square)
        self.assertIn('f = (1.0000, 1.0000)', self.call('radii', K=K, C=C))

    def test_reflected_triangle(self):
        K = self.polygon_file('k.json', -gauge_polygon(GaugeKind.triangle()))
        out = self.call('radii', K=K, C='triangle')
        self.assertIn('f = (0.2500, 0.5000)', out)

    def test_json(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        data = json.loads(self.call('radii', K=K, C='triangle', as_json=True))
        self.assertAlmostEqual(data['R'], 1.0, places=8)
        self.assertAlmostEqual(data['y'], 0.75, places=8)
        self.assertEqual(len(data['diameter_pair']), 2)

    def test_report_file(self):
        K = self.polygon_file('k.json', hexagon_family(0.5))
        report = self.tmp / 'report.txt'
        out = self.call('radii', K=K, C='hexagon', report=str(report))
        self.assertEqual(report.read_text(), out)

    def test_gauge_from_file(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        C = self.polygon_file('c.json', text='{"vertices": [[1, -1], [1, 1], [-1, 1], [-1, -1]]}')
        self.assertIn('gauge: custom', self.call('radii', K=K, C=C))

    def test_missing_file(self):
        message = self.assertExitCode(EXIT_INPUT, 'radii', K=str(self.tmp / 'nope.json'), C='square')
        self.assertIn('cannot read polygon', message)

    def test_malformed_documents(self):
        for text in ('{"vertices": [[0, 0], [1]]}', 'not json', '[1, 2]', '{"vertices": [[0, "nan"]]}'):
            K = self.polygon_file('bad.json', text=text)
            self.assertExitCode(EXIT_INPUT, 'radii', K=K, C='square')

    def test_degenerate_gauge_file(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        C = self.polygon_file('c.json', text='{"vertices": [[0, 0], [1, 0]]}')
        self.assertExitCode(EXIT_INPUT, 'radii', K=K, C=C)

    def test_single_point_body(self):
        K = self.polygon_file('k.json', text='{"vertices": [[0.5, 0.5]]}')
        self.assertExitCode(EXIT_INPUT, 'radii', K=K, C='square')

    def test_bad_tolerance(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        self.assertExitCode(EXIT_INPUT, 'radii', K=K, C='square', eps_lp=-1.0)

    def test_unknown_tolerance_key(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        with override_settings(GAUGE_RADII={'UNKNOWN_TOLERANCES': ['precision']}):
            message = self.assertExitCode(EXIT_INPUT, 'radii', K=K, C='square')
        self.assertIn('precision', message)


class CheckCommandTests(CommandTestCase):

    def test_overrides_core_check(self):
        self.assertEqual(get_commands()['check'], 'apps.cli')

    def test_family_triangle_passes(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        out = self.call('check', K=K, C='triangle')
        self.assertIn('certificate: k=3', out)
        self.assertIn('certificate check: valid', out)
        self.assertIn('R(T,S) = 1', out)
        self.assertIn('all checks passed', out)
        self.assertNotIn('FAIL', out)

    def test_segment_reduces_to_strip(self):
        K = self.polygon_file('k.json', text='{"vertices": [[-1, 0], [1, 0]]}')
        out = self.call('check', K=K, C='square')
        self.assertIn('certificate: k=2', out)
        self.assertIn('S=strip', out)

    def test_simplex_equality_case(self):
        K = self.polygon_file('k.json', hexagon_family(0.5))
        out = self.call('check', K=K, C='hexagon')
        self.assertIn('simplex equality case: holds', out)

    def test_random_pair(self):
        K = self.polygon_file('k.json', text='{"vertices": [[0, 0], [2, 0.3], [1.4, 1.7], [-0.2, 1.1]]}')
        C = self.polygon_file('c.json', text='{"vertices": [[-1, -1], [1.5, -0.5], [0.8, 1.2], [-0.9, 0.6]]}')
        out = self.call('check', K=K, C=C)
        self.assertIn('s r + R <= (s+1)D/2', out)
        self.assertIn('all checks passed', out)

    def test_json(self):
        K = self.polygon_file('k.json', hexagon_family(0.75))
        data = json.loads(self.call('check', K=K, C='hexagon', as_json=True))
        self.assertTrue(data['certificate_check']['valid'])
        self.assertIsNotNone(data['reduction']['Ssym'])
        names = [row['name'] for row in data['inequalities']]
        self.assertIn('r + R <= D', names)

    def test_corrupted_point(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        message = self.assertExitCode(EXIT_NUMERICAL, 'check', K=K, C='triangle', corrupt_point=[0.9, 0.5])
        self.assertIn('2r + R <= 3D/2', message)

    def test_certificate_failure(self):
        K = self.polygon_file('k.json', triangle_family(1.5))
        with mock.patch('apps.containment.certificates._select', return_value=(None, None)):
            message = self.assertExitCode(EXIT_NUMERICAL, 'check', K=K, C='triangle')
        self.assertIn('best residual', message)


class DiagramCommandTests(CommandTestCase):

    def test_outputs(self):
        csv_path, svg_path = self.tmp / 'out.csv', self.tmp / 'out.svg'
        out = self.call('diagram', gauge='pentagon', n=6, seed=2, csv=str(csv_path), svg=str(svg_path))
        self.assertIn('samples: 6', out)
        self.assertIn('outside: 0', out)
        self.assertEqual(len(csv_path.read_text().splitlines()), 7)
        svg = svg_path.read_text()
        self.assertIn('<svg', svg)
        self.assertIn('<title>T</title>', svg)
        self.assertIn('stroke-dasharray', svg)

    def test_csv_is_reproducible(self):
        first, second = self.tmp / 'a.csv', self.tmp / 'b.csv'
        self.call('diagram', gauge='triangle', n=5, seed=7, strategy='mix', csv=str(first))
        self.call('diagram', gauge='triangle', n=5, seed=7, strategy='mix', csv=str(second))
        self.assertEqual(first.read_text(), second.read_text())

    def test_custom_gauge(self):
        C = self.polygon_file('c.json', text='{"vertices": [[-1, -1], [1.5, -0.5], [0.8, 1.2], [-0.9, 0.6]]}')
        out = self.call('diagram', gauge=C, n=5)
        self.assertIn('gauge: custom', out)

    def test_unsupported_gauge(self):
        message = self.assertExitCode(EXIT_INPUT, 'diagram', gauge='kgon:7', n=5)
        self.assertIn('triangle', message)

    def test_zero_samples(self):
        self.assertExitCode(EXIT_INPUT, 'diagram', gauge='triangle', n=0)


class FamiliesCommandTests(CommandTestCase):

    def test_triangle(self):
        out = self.call('families', gauge='triangle', grid=11)
        self.assertIn('members: 11', out)
        self.assertIn('largest deviation', out)

    def test_pentagon_jung_report(self):
        out = self.call('families', gauge='pentagon', grid=5)
        self.assertIn('Jung triangles:', out)
        self.assertIn('diametrical edges: 3', out)
        self.assertIn('diametrical edges: 2', out)

    def test_kgon_limit(self):
        out = self.call('families', gauge='kgon:7', steps=2)
        self.assertIn('k-gon limit, k = 7, target = triangle', out)
        self.assertIn('target = parallelogram', out)
        self.assertNotIn('target = hexagon', out)

    def test_kgon_limit_symmetric(self):
        out = self.call('families', gauge='kgon:8', steps=2)
        self.assertIn('k-gon limit, k = 8, target = hexagon', out)

    def test_gauges_without_families(self):
        for gauge in ('square', 'disk'):
            self.assertExitCode(EXIT_INPUT, 'families', gauge=gauge)

    def test_deviation_fails(self):
        with mock.patch('apps.cli.management.commands.families.diagram_point',
                        return_value=DiagramPoint(0.0, 0.0)):
            self.assertExitCode(EXIT_NUMERICAL, 'families', gauge='triangle', grid=3)
