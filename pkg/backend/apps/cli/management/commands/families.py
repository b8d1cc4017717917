# backend/apps/cli/management/commands/families.py
from django.core.management.base import CommandError

from apps.cli.config import EXIT_INPUT, EXIT_NUMERICAL, GaugeRadiiCommand, RunConfig
from apps.cli.reports import family_lines, fmt
from apps.convex.gauges import GaugeKind, GaugeTag
from apps.diagram.families import (
    PENTAGON_JUNG_Y,
    edge_diameters,
    family_points,
    kgon_limit_experiment,
    limit_targets,
    pentagon_jung_triangles,
)
from apps.radii.functionals import diagram_point

FAMILY_KINDS = (GaugeKind.triangle(), GaugeKind.regular(5), GaugeKind.regular(6))


class Command(GaugeRadiiCommand):
    help = 'Compare the extremal triangle families with their closed-form diagram points'

    def add_arguments(self, parser):
        parser.add_argument('--gauge', required=True, metavar='KIND',
                            help='triangle, pentagon, hexagon, or kgon:k for the k-gon limit experiment')
        parser.add_argument('--grid', type=int, default=101, help='Parameters per family (default 101)')
        parser.add_argument('--steps', type=int, default=8, help='k-gon refinements m = 1..steps (default 8)')
        parser.add_argument('--tolerance', type=float, default=1e-7,
                            help='Largest accepted deviation from the closed form (default 1e-7)')
        parser.add_argument('--report', help='Also write the table to this file')
        super().add_arguments(parser)

    def run(self, tol, **options):
        config = RunConfig.from_options('families', tol, options)
        kind = config.gauge_kind.canonical()
        if options['grid'] < 2:
            raise CommandError("--grid must be at least 2", returncode=EXIT_INPUT)
        if kind in FAMILY_KINDS:
            lines, deviation = self._closed_forms(kind, config.gauge, options['grid'], tol)
        elif kind.tag == GaugeTag.REGULAR_KGON:
            lines, deviation = self._kgon_limit(kind.k, options['steps']), 0.0
        else:
            raise CommandError(
                f"no extremal families for gauge {kind.label}; use triangle, pentagon, hexagon or kgon:k",
                returncode=EXIT_INPUT,
            )
        self.emit(lines, config.report_path)
        if deviation > options['tolerance']:
            raise CommandError(
                f"largest deviation {fmt(deviation)} exceeds {fmt(options['tolerance'])}",
                returncode=EXIT_NUMERICAL,
            )

    def _closed_forms(self, kind, C, grid, tol):
        rows = []
        deviation = 0.0
        for member in family_points(kind, grid):
            if member.closed_form is None:
                continue
            x, y = diagram_point(member.body, C, tol=tol)
            gap = max(abs(x - member.closed_form.x), abs(y - member.closed_form.y))
            deviation = max(deviation, gap)
            rows.append({'family': member.family, 'parameter': member.parameter, 'x': x, 'y': y, 'deviation': gap})
        lines = [f"gauge: {kind.label}  members: {len(rows)}", *family_lines(rows),
                 f"largest deviation: {fmt(deviation)}"]
        if kind == GaugeKind.regular(5):
            jung_lines, jung_gap = self._jung(C, tol)
            lines += jung_lines
            deviation = max(deviation, jung_gap)
        return lines, deviation

    def _jung(self, C, tol):
        lines = ['Jung triangles:']
        gap = 0.0
        for name, T in zip(('T', "T'"), pentagon_jung_triangles()):
            x, y = diagram_point(T, C, tol=tol)
            diameters = edge_diameters(T, C)
            D = max(diameters)
            diametrical = sum(1 for d in diameters if D - d <= 1e-9)
            gap = max(gap, abs(y - PENTAGON_JUNG_Y))
            lines.append(f"  {name}: f = ({fmt(x)}, {fmt(y)})  D/R = {fmt(2.0 * y)}  diametrical edges: {diametrical}")
        return lines, gap

    def _kgon_limit(self, k, steps):
        lines = []
        for target in limit_targets(k):
            lines += [f"k-gon limit, k = {k}, target = {target.value}:",
                      f"  {'m':>4} {'hausdorff':>12} {'distance':>12}"]
            for row in kgon_limit_experiment(k, steps, target=target):
                lines.append(f"  {row.m:>4} {row.hausdorff:>12.6g} {row.distance:>12.6g}")
        return lines
