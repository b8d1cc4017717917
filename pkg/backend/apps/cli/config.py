# backend/apps/cli/config.py
"""Run configuration shared by the management commands."""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from django.core.exceptions import ImproperlyConfigured
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from apps.convex.gauges import GaugeKind
from apps.convex.serializers import parse_polygon
from core.exceptions import (
    CertificateError,
    DegenerateGaugeError,
    GeometryError,
    LpError,
    UnsupportedGaugeError,
)
from core.tolerances import Tolerances, get_tolerances

logger = logging.getLogger(__name__)

EXIT_INPUT = 2
EXIT_NUMERICAL = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    gauge_kind: GaugeKind
    gauge: object
    gauge_source: str
    inputs: tuple = ()
    n: int = 0
    seed: int = 0
    strategy: str = 'hull'
    tolerances: Tolerances = field(default_factory=Tolerances)
    csv_path: Path | None = None
    svg_path: Path | None = None
    report_path: Path | None = None
    as_json: bool = False

    @classmethod
    def from_options(cls, command, tol, options, gauge_option='gauge'):
        """RunConfig from parsed command options; the gauge is resolved here"""
        kind, gauge = resolve_gauge(options[gauge_option])
        return cls(
            command=command,
            gauge_kind=kind,
            gauge=gauge,
            gauge_source=options[gauge_option],
            inputs=tuple(options[name] for name in ('K',) if options.get(name)),
            n=options.get('n') or 0,
            seed=options.get('seed') or 0,
            strategy=options.get('strategy') or 'hull',
            tolerances=tol,
            csv_path=_path(options.get('csv')),
            svg_path=_path(options.get('svg')),
            report_path=_path(options.get('report')),
            as_json=bool(options.get('as_json')),
        )


def _path(value):
    return Path(value) if value else None


def load_polygon(path):
    """ConvexPolygon from a polygon document; CommandError (exit 2) on failure"""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CommandError(f"cannot read polygon {path}: {exc.strerror}", returncode=EXIT_INPUT)
    try:
        return parse_polygon(text)
    except serializers.ValidationError as exc:
        raise CommandError(f"invalid polygon {path}: {exc.detail}", returncode=EXIT_INPUT)


def resolve_gauge(value):
    """
    (kind, polygon) for a catalog name such as 'pentagon' or 'disk:720',
    or (custom, polygon) for a polygon file.
    """
    try:
        kind = GaugeKind.parse(value)
    except GeometryError:
        polygon = load_polygon(value)
        if polygon.is_degenerate:
            raise CommandError(f"gauge {value} must be full-dimensional", returncode=EXIT_INPUT)
        return GaugeKind.custom(), polygon
    return kind, kind.polygon()


def tolerances_from_options(options):
    try:
        return get_tolerances().with_overrides(
            geo=options.get('eps_geo'),
            lp=options.get('eps_lp'),
            cert=options.get('eps_cert'),
            classify=options.get('classify_tol'),
        )
    except ImproperlyConfigured as exc:
        raise CommandError(str(exc), returncode=EXIT_INPUT)


class GaugeRadiiCommand(BaseCommand):
    """
    Base for the gauge-radii commands: tolerance flags, and the mapping of
    domain errors onto exit codes (2 input, 3 numerical failure).
    """
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--eps-geo', type=float, help='Geometric tolerance (default 1e-9)')
        parser.add_argument('--eps-lp', type=float, help='LP tolerance (default 1e-9)')
        parser.add_argument('--eps-cert', type=float, help='Certificate tolerance (default 1e-6)')
        parser.add_argument('--classify-tol', type=float, help='Classification tolerance (default 1e-6)')

    def handle(self, *args, **options):
        try:
            return self.run(tolerances_from_options(options), **options)
        except (UnsupportedGaugeError, DegenerateGaugeError, GeometryError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        except serializers.ValidationError as exc:
            raise CommandError(f"invalid input: {exc.detail}", returncode=EXIT_INPUT)
        except (CertificateError, LpError) as exc:
            logger.debug("numerical failure in %s", self.__module__, exc_info=True)
            raise CommandError(str(exc), returncode=EXIT_NUMERICAL)

    def run(self, tol, **options):
        raise NotImplementedError

    def emit(self, lines, report_path=None):
        """Write report lines to stdout, and to ``report_path`` when given"""
        text = '\n'.join(lines)
        self.stdout.write(text)
        if report_path:
            Path(report_path).write_text(text + '\n')
