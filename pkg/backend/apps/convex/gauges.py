# backend/apps/convex/gauges.py
"""
Standard gauge catalog.

Labelled vertex lists follow the conventions the extremal families depend on:
the triangle S has p1 = (√3/2, -1/2), p2 = (-√3/2, -1/2), p3 = (0, 1); the
hexagon H is listed clockwise from q1 = (0, 1); the pentagon P is listed
counterclockwise from p1 = (0, 1). All three have circumradius 1 about 0.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from core.exceptions import GeometryError
from core.tolerances import gauge_radii_setting
from .geometry import ConvexPolygon, regular_kgon


class GaugeTag(str, Enum):
    TRIANGLE = 'triangle'
    SQUARE = 'square'
    REGULAR_KGON = 'kgon'
    DISK_APPROX = 'disk'
    CUSTOM = 'custom'


KGON_NAMES = {5: 'pentagon', 6: 'hexagon'}
DEFAULT_DISK_SEGMENTS = 720


@dataclass(frozen=True)
class GaugeKind:
    """Which catalog body a gauge is; selects the applicable boundary curves"""
    tag: GaugeTag
    k: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.tag == GaugeTag.REGULAR_KGON and (self.k is None or self.k < 3):
            raise GeometryError(f"RegularKGon needs k >= 3, got {self.k}")
        if self.tag == GaugeTag.DISK_APPROX and (self.m is None or self.m < 16):
            raise GeometryError(f"DiskApprox needs m >= 16, got {self.m}")

    @classmethod
    def triangle(cls):
        return cls(GaugeTag.TRIANGLE)

    @classmethod
    def square(cls):
        return cls(GaugeTag.SQUARE)

    @classmethod
    def regular(cls, k):
        return cls(GaugeTag.REGULAR_KGON, k=k)

    @classmethod
    def disk(cls, m=DEFAULT_DISK_SEGMENTS):
        return cls(GaugeTag.DISK_APPROX, m=m)

    @classmethod
    def custom(cls):
        return cls(GaugeTag.CUSTOM)

    @classmethod
    def parse(cls, text):
        """
        'triangle', 'square', 'pentagon', 'hexagon', 'kgon:<k>', 'disk' or
        'disk:<m>'; raises GeometryError on anything else.
        """
        name, _, arg = text.strip().lower().partition(':')
        try:
            if name == 'triangle' and not arg:
                return cls.triangle()
            if name == 'square' and not arg:
                return cls.square()
            if name == 'pentagon' and not arg:
                return cls.regular(5)
            if name == 'hexagon' and not arg:
                return cls.regular(6)
            if name == 'kgon' and arg:
                return cls.regular(int(arg))
            if name == 'disk':
                return cls.disk(int(arg) if arg else gauge_radii_setting('DISK_SEGMENTS', DEFAULT_DISK_SEGMENTS))
        except ValueError as exc:
            raise GeometryError(f"bad gauge argument in {text!r}") from exc
        raise GeometryError(f"unknown gauge kind {text!r}")

    def canonical(self):
        """Regular triangles and squares are the Triangle and Square kinds"""
        if self.tag == GaugeTag.REGULAR_KGON and self.k == 3:
            return GaugeKind.triangle()
        if self.tag == GaugeTag.REGULAR_KGON and self.k == 4:
            return GaugeKind.square()
        return self

    @property
    def label(self):
        if self.tag == GaugeTag.REGULAR_KGON:
            return KGON_NAMES.get(self.k, f"kgon{self.k}")
        if self.tag == GaugeTag.DISK_APPROX:
            return f"disk{self.m}"
        return self.tag.value

    def __str__(self):
        return self.label

    @property
    def model_error(self):
        """Slack budget for Euclidean statements checked against a polygonal disk"""
        if self.tag == GaugeTag.DISK_APPROX:
            return math.pi ** 2 / (2 * self.m ** 2)
        return 0.0

    def polygon(self):
        return gauge_polygon(self)


# ============================================
# Catalog bodies
# ============================================

SQRT3 = math.sqrt(3.0)


def triangle_vertices():
    """p1, p2, p3 of the regular triangle S"""
    return np.array([[SQRT3 / 2, -0.5], [-SQRT3 / 2, -0.5], [0.0, 1.0]])


def hexagon_vertices():
    """q1..q6 of the regular hexagon H, clockwise, q1 = (0, 1)"""
    angles = np.pi / 2 - np.pi / 3 * np.arange(6)
    return np.column_stack([np.cos(angles), np.sin(angles)])


def pentagon_vertices():
    """p1..p5 of the regular pentagon P, counterclockwise, p1 = (0, 1)"""
    angles = np.pi / 2 + 2 * np.pi / 5 * np.arange(5)
    return np.column_stack([np.cos(angles), np.sin(angles)])


def pentagon_midpoint(i, j):
    """p^{ij} = (p^i + p^j) / 2 with 1-based labels"""
    p = pentagon_vertices()
    return 0.5 * (p[i - 1] + p[j - 1])


def disk_polygon(m=DEFAULT_DISK_SEGMENTS):
    """Regular m-gon circumscribed about the unit disk"""
    return regular_kgon(m, phase=0.0, radius=1.0 / math.cos(math.pi / m))


def gauge_polygon(kind):
    if kind.tag == GaugeTag.TRIANGLE:
        return regular_kgon(3, phase=math.pi / 2)
    if kind.tag == GaugeTag.SQUARE:
        return ConvexPolygon([(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])
    if kind.tag == GaugeTag.REGULAR_KGON:
        return regular_kgon(kind.k, phase=math.pi / 2)
    if kind.tag == GaugeTag.DISK_APPROX:
        return disk_polygon(kind.m)
    raise GeometryError("a custom gauge has no catalog body")
