# backend/apps/cli/management/commands/check.py
import argparse

from django.core.management.base import CommandError

from apps.cli.config import EXIT_NUMERICAL, GaugeRadiiCommand, RunConfig, load_polygon
from apps.cli.reports import (
    bohnenblust_line,
    certificate_lines,
    fmt,
    inequality_data,
    inequality_lines,
    radii_lines,
    reduction_lines,
    render_json,
)
from apps.containment.certificates import certify, validate_certificate
from apps.containment.reduction import bohnenblust_equality_check, reduce
from apps.containment.serializers import ContainmentCertificateSerializer, SimplexReductionSerializer
from apps.diagram.inequalities import evaluate_inequalities
from apps.radii.functionals import profile
from apps.radii.serializers import RadiiProfileSerializer
from core.exceptions import CertificateError


class Command(GaugeRadiiCommand):
    help = 'Check the proved inequalities, containment certificate and simplex reduction for a pair (K, C)'

    def add_arguments(self, parser):
        parser.add_argument('-K', dest='K', required=True, metavar='FILE', help='Polygon document for K')
        parser.add_argument('-C', dest='C', required=True, metavar='FILE|KIND', help='Gauge: polygon document or kind')
        parser.add_argument('--json', dest='as_json', action='store_true', help='Print the results as JSON')
        parser.add_argument('--report', help='Also write the report to this file')
        # test hook: replaces the computed diagram point
        parser.add_argument('--corrupt-point', dest='corrupt_point', nargs=2, type=float, help=argparse.SUPPRESS)
        super().add_arguments(parser)

    def run(self, tol, **options):
        config = RunConfig.from_options('check', tol, options, gauge_option='C')
        K = load_polygon(config.inputs[0])
        C = config.gauge

        prof = profile(K, C, tol=tol)
        x, y = options.get('corrupt_point') or prof.point
        results = evaluate_inequalities(x, y, prof.s, config.gauge_kind, prof.symmetric)
        failed = [res.name for res in results if not res.passes(tol.classify)]

        try:
            cert = certify(K, C, tol=tol)
        except CertificateError as exc:
            residual = 'unknown' if exc.residual is None else fmt(exc.residual)
            self.emit([*radii_lines(prof), 'inequalities:', *inequality_lines(results, tol.classify)])
            raise CommandError(f"{exc} (best residual {residual})", returncode=EXIT_NUMERICAL)
        check = validate_certificate(cert, K, C, tol=tol)
        red = reduce(K, C, tol=tol, certificate=cert)
        broken = [name for name, slack in red.guarantee_slacks().items() if slack < -tol.cert]
        equality = bohnenblust_equality_check(K, C, tol=tol) if len(K) == 3 and prof.symmetric else None

        if config.as_json:
            data = {
                'profile': RadiiProfileSerializer(prof).data,
                'point': [x, y],
                'inequalities': [inequality_data(res) for res in results],
                'certificate': ContainmentCertificateSerializer(cert).data,
                'certificate_check': check._asdict(),
                'reduction': SimplexReductionSerializer(red).data,
            }
            if equality is not None:
                data['simplex_equality'] = {'holds': equality.holds, 'slacks': list(equality.slacks)}
            lines = [render_json(data)]
        else:
            lines = [f"gauge: {config.gauge_kind.label}", *radii_lines(prof)]
            if options.get('corrupt_point'):
                lines.append(f"point overridden: ({fmt(x)}, {fmt(y)})")
            lines += ['inequalities:', *inequality_lines(results, tol.classify)]
            lines += certificate_lines(cert, check)
            lines += reduction_lines(red)
            if equality is not None:
                lines.append(bohnenblust_line(equality))
        self.emit(lines, config.report_path)

        problems = []
        if failed:
            problems.append(f"violated: {', '.join(failed)}")
        if not check.valid:
            problems.append('certificate failed validation')
        if broken:
            problems.append(f"reduction guarantees broken: {', '.join(broken)}")
        if problems:
            raise CommandError('; '.join(problems), returncode=EXIT_NUMERICAL)
        if not config.as_json:
            self.stdout.write(self.style.SUCCESS('all checks passed'))
