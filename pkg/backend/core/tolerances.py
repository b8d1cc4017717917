# backend/core/tolerances.py
from dataclasses import dataclass, replace

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by the geometry, LP and certificate code"""
    geo: float = 1e-9
    lp: float = 1e-9
    cert: float = 1e-6
    classify: float = 1e-6

    def __post_init__(self):
        for name in ('geo', 'lp', 'cert', 'classify'):
            if not getattr(self, name) > 0:
                raise ImproperlyConfigured(f"tolerance {name} must be positive")

    def with_overrides(self, **overrides):
        """Copy with the non-None overrides applied"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def get_tolerances():
    """Tolerances from settings.GAUGE_RADII, or the defaults outside Django"""
    if not settings.configured:
        return Tolerances()
    conf = getattr(settings, 'GAUGE_RADII', {})
    unknown = conf.get('UNKNOWN_TOLERANCES') or []
    if unknown:
        raise ImproperlyConfigured(
            f"GAUGE_RADII_TOL has unknown keys {unknown}; use geo, lp, cert, classify"
        )
    return Tolerances(
        geo=conf.get('EPS_GEO', 1e-9),
        lp=conf.get('EPS_LP', 1e-9),
        cert=conf.get('EPS_CERT', 1e-6),
        classify=conf.get('CLASSIFY_TOL', 1e-6),
    )


def resolve(tol):
    """Explicit tolerances win; None reads the settings"""
    return get_tolerances() if tol is None else tol


def gauge_radii_setting(key, default=None):
    if not settings.configured:
        return default
    return getattr(settings, 'GAUGE_RADII', {}).get(key, default)
