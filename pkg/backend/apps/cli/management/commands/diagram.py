# backend/apps/cli/management/commands/diagram.py
import logging
from collections import Counter

from django.core.management.base import CommandError

from apps.cli.config import EXIT_NUMERICAL, GaugeRadiiCommand, RunConfig
from apps.cli.reports import fmt
from apps.convex.gauges import GaugeKind, GaugeTag
from apps.diagram.boundaries import boundary_spec, union_spec
from apps.diagram.families import family_points, minus_gauge_point, pentagon_jung_triangles
from apps.diagram.rendering import render_svg
from apps.diagram.sampling import Strategy, sample_bodies, write_csv
from apps.radii.functionals import asymmetry, diagram_point

logger = logging.getLogger(__name__)

FAMILY_GRID = 41


def _highlights(kind, C, tol):
    points = [('f(-C, C)', tuple(minus_gauge_point(C)))]
    if kind.canonical() == GaugeKind.regular(5):
        T, T_prime = pentagon_jung_triangles()
        points.append(('T', tuple(diagram_point(T, C, tol=tol))))
        points.append(("T'", tuple(diagram_point(T_prime, C, tol=tol))))
    return points


class Command(GaugeRadiiCommand):
    help = 'Sample random bodies into the (r/R, D/(2R)) diagram of a gauge and render it'

    def add_arguments(self, parser):
        parser.add_argument('--gauge', required=True, metavar='KIND|FILE',
                            help='triangle, square, pentagon, hexagon, disk[:m], or a polygon document')
        parser.add_argument('-n', type=int, default=1000, help='Number of random bodies (default 1000)')
        parser.add_argument('--seed', type=int, default=0, help='Sampler seed (default 0)')
        parser.add_argument('--strategy', choices=[s.value for s in Strategy], default='hull',
                            help='hull, interp, or mix (alternating, plus family members)')
        parser.add_argument('--csv', help='Write the sample table to this CSV file')
        parser.add_argument('--svg', help='Write the rendered diagram to this SVG file')
        parser.add_argument('--workers', type=int, help='Worker processes (default GAUGE_RADII_WORKERS)')
        parser.add_argument('--report', help='Also write the summary to this file')
        super().add_arguments(parser)

    def run(self, tol, **options):
        config = RunConfig.from_options('diagram', tol, options)
        kind, C = config.gauge_kind, config.gauge
        if kind.tag == GaugeTag.CUSTOM:
            spec = union_spec(kind, asymmetry(C, tol=tol))
        else:
            spec = boundary_spec(kind)

        samples = sample_bodies(
            C, config.n, seed=config.seed, strategy=config.strategy,
            kind=kind, workers=options.get('workers'), tol=tol,
        )
        labels = Counter()
        outside = []
        for sample in samples:
            verdict = spec.classify((sample.x, sample.y), tol=tol.classify)
            labels[verdict.label] += 1
            if verdict.label == 'outside':
                outside.append((sample, verdict.worst))

        logger.debug("diagram %s: %s", kind.label, dict(labels))
        if config.csv_path:
            with open(config.csv_path, 'w', newline='') as stream:
                write_csv(samples, stream)
        if config.svg_path:
            families = [tuple(row.closed_form) for row in family_points(kind, FAMILY_GRID) if row.closed_form]
            config.svg_path.write_text(render_svg(spec, samples, families, _highlights(kind, C, tol)))

        lowest = min(samples, key=lambda sample: sample.worst[1] if sample.worst[1] is not None else 0.0)
        name, slack = lowest.worst
        lines = [
            f"gauge: {kind.label}  s = {fmt(spec.s)}",
            f"samples: {len(samples)} (strategy {config.strategy}, seed {config.seed})",
            *(f"  {label}: {labels[label]}" for label in ('interior', 'boundary', 'corner', 'outside')),
            f"smallest slack: {name} {fmt(slack)} (sample {lowest.index})" if name else "smallest slack: none",
        ]
        if config.csv_path:
            lines.append(f"csv: {config.csv_path}")
        if config.svg_path:
            lines.append(f"svg: {config.svg_path}")
        self.emit(lines, config.report_path)

        if outside:
            sample, result = outside[0]
            raise CommandError(
                f"{len(outside)} samples violate a proved inequality; first is sample {sample.index} "
                f"({result.name}, slack {fmt(result.slack)})",
                returncode=EXIT_NUMERICAL,
            )
