# backend/apps/cli/management/commands/radii.py
from apps.cli.config import GaugeRadiiCommand, RunConfig, load_polygon
from apps.cli.reports import radii_lines, render_json
from apps.radii.functionals import profile
from apps.radii.serializers import RadiiProfileSerializer


class Command(GaugeRadiiCommand):
    help = 'Inradius, diameter, circumradius and asymmetry of a polygon K with respect to a gauge C'

    def add_arguments(self, parser):
        parser.add_argument('-K', dest='K', required=True, metavar='FILE', help='Polygon document for K')
        parser.add_argument('-C', dest='C', required=True, metavar='FILE|KIND',
                            help='Gauge: polygon document or triangle/square/pentagon/hexagon/kgon:k/disk[:m]')
        parser.add_argument('--json', dest='as_json', action='store_true', help='Print the profile as JSON')
        parser.add_argument('--report', help='Also write the report to this file')
        super().add_arguments(parser)

    def run(self, tol, **options):
        config = RunConfig.from_options('radii', tol, options, gauge_option='C')
        K = load_polygon(config.inputs[0])
        prof = profile(K, config.gauge, tol=tol)
        if config.as_json:
            lines = [render_json(RadiiProfileSerializer(prof).data)]
        else:
            lines = [f"gauge: {config.gauge_kind.label}", *radii_lines(prof)]
        self.emit(lines, config.report_path)
