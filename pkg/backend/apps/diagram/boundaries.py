# backend/apps/diagram/boundaries.py
"""Per-gauge diagram descriptions: proved inequalities and boundary curves."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple

import numpy as np

from apps.convex.gauges import GaugeKind, GaugeTag
from core.exceptions import UnsupportedGaugeError
from core.tolerances import resolve
from . import inequalities as ineq
from .families import PENTAGON_JUNG_Y, hexagon_family_point, pentagon_family_point, triangle_family_point

SUPPORTED_KINDS = ('triangle', 'square', 'pentagon', 'hexagon', 'disk')
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)


class CurveStatus(str, Enum):
    PROVED = 'proved'
    CONJECTURED = 'conjectured'


@dataclass(frozen=True)
class BoundaryCurve:
    name: str
    status: CurveStatus
    param: Callable[[float], tuple]

    def points(self, samples=101):
        return np.array([self.param(t) for t in np.linspace(0.0, 1.0, samples)], dtype=float)


def _segment(a, b):
    return lambda t: (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


class Classification(NamedTuple):
    label: str
    tight: tuple
    worst: ineq.InequalityResult


@dataclass(frozen=True)
class DiagramSpec:
    gauge: GaugeKind
    s: float
    inequalities: tuple
    curves: tuple

    def slacks(self, x, y):
        return [ineq.InequalityResult(i.name, float(i(x, y, self.s)), i.budget) for i in self.inequalities]

    def contains(self, x, y, tol=None):
        tol = resolve(None).classify if tol is None else tol
        return all(res.passes(tol) for res in self.slacks(x, y))

    def classify(self, point, tol=None):
        """
        'outside' if a proved inequality fails, 'corner' if two or more are
        tight, 'boundary' if one is, 'interior' otherwise.
        """
        tol = resolve(None).classify if tol is None else tol
        results = self.slacks(*point)
        worst = ineq.worst(results)
        if not all(res.passes(tol) for res in results):
            return Classification('outside', (), worst)
        tight = tuple(res.name for res in results if abs(res.slack) <= tol + res.budget)
        if len(tight) >= 2:
            return Classification('corner', tight, worst)
        if tight:
            return Classification('boundary', tight, worst)
        return Classification('interior', (), worst)

    @property
    def proved_curves(self):
        return tuple(c for c in self.curves if c.status == CurveStatus.PROVED)

    @property
    def conjectured_curves(self):
        return tuple(c for c in self.curves if c.status == CurveStatus.CONJECTURED)


TOP = BoundaryCurve('D = 2R', CurveStatus.PROVED, _segment((0.0, 1.0), (1.0, 1.0)))


def _triangle_spec(kind):
    return DiagramSpec(
        kind, 2.0,
        (ineq.DIAMETER_BOUND, ineq.PLANAR_UPPER, ineq.PLANAR_LOWER),
        (
            TOP,
            BoundaryCurve('2r + R = 3D/2', CurveStatus.PROVED, _segment((0.25, 0.5), (1.0, 1.0))),
            BoundaryCurve('r/R = y(1-y)', CurveStatus.PROVED, lambda t: tuple(triangle_family_point(1.0 + t))),
        ),
    )


def _square_spec(kind):
    return DiagramSpec(kind, 1.0, (ineq.DIAMETER_BOUND, ineq.PARALLELOGRAM), (TOP,))


def _disk_spec(kind):
    jung_y = SQRT3 / 2.0
    return DiagramSpec(
        kind, 1.0,
        (ineq.DIAMETER_BOUND, ineq.SYMMETRIC_LINE) + ineq.disk_inequalities(kind),
        (
            TOP,
            BoundaryCurve('r + R = D', CurveStatus.PROVED, _segment((SQRT3 - 1.0, jung_y), (1.0, 1.0))),
            BoundaryCurve('D = sqrt3 R', CurveStatus.PROVED, _segment((0.5, jung_y), (SQRT3 - 1.0, jung_y))),
            BoundaryCurve(
                'Euclidean r-D-R bound', CurveStatus.PROVED,
                lambda t: (ineq.santalo_bound(jung_y + t * (1.0 - jung_y)), jung_y + t * (1.0 - jung_y)),
            ),
        ),
    )


def _hexagon_spec(kind):
    return DiagramSpec(
        kind, 1.0,
        (ineq.DIAMETER_BOUND, ineq.SYMMETRIC_LINE, ineq.BOHNENBLUST, ineq.HEXAGON_QUARTER),
        (
            TOP,
            BoundaryCurve('r + R = D', CurveStatus.PROVED, _segment((0.5, 0.75), (1.0, 1.0))),
            BoundaryCurve('r = R/4', CurveStatus.PROVED, _segment((0.25, 0.75), (0.25, 1.0))),
            BoundaryCurve(
                'hexagon triangles', CurveStatus.CONJECTURED,
                lambda t: tuple(hexagon_family_point(0.5 + 0.5 * t)),
            ),
        ),
    )


def _pentagon_spec(kind):
    left = pentagon_family_point(0.5)
    right_x = (3.0 + SQRT5) / 8.0
    return DiagramSpec(
        kind, SQRT5 - 1.0,
        (ineq.DIAMETER_BOUND, ineq.PENTAGON_LINE, ineq.PENTAGON_JUNG),
        (
            TOP,
            BoundaryCurve('(sqrt5-1)r + R = sqrt5 D/2', CurveStatus.PROVED, _segment((right_x, PENTAGON_JUNG_Y), (1.0, 1.0))),
            BoundaryCurve('D/R = (1+sqrt5)/2', CurveStatus.PROVED, _segment((left.x, PENTAGON_JUNG_Y), (right_x, PENTAGON_JUNG_Y))),
            BoundaryCurve(
                'pentagon triangles', CurveStatus.CONJECTURED,
                lambda t: tuple(pentagon_family_point(0.5 * t)),
            ),
        ),
    )


def boundary_spec(kind):
    """DiagramSpec of a catalog gauge; UnsupportedGaugeError otherwise"""
    kind = kind.canonical()
    if kind.tag == GaugeTag.TRIANGLE:
        return _triangle_spec(kind)
    if kind.tag == GaugeTag.SQUARE:
        return _square_spec(kind)
    if kind.tag == GaugeTag.DISK_APPROX:
        return _disk_spec(kind)
    if kind == GaugeKind.regular(6):
        return _hexagon_spec(kind)
    if kind == GaugeKind.regular(5):
        return _pentagon_spec(kind)
    raise UnsupportedGaugeError(kind, SUPPORTED_KINDS)


def classify(spec, point, tol=None):
    return spec.classify(point, tol=tol)


def union_spec(kind, s, symmetric=None):
    """
    DiagramSpec for a gauge without a complete description: the inequalities
    valid for every gauge with asymmetry s, plus the symmetric ones when
    s = 1. Used for polygon-file gauges and other k-gons.
    """
    if symmetric is None:
        symmetric = abs(s - 1.0) <= 1e-7
    line = BoundaryCurve(
        's r + R = (s+1)D/2', CurveStatus.PROVED,
        _segment((0.0, 1.0 / (s + 1.0)), (1.0, 1.0)),
    )
    return DiagramSpec(kind, s, ineq.applicable_inequalities(kind, symmetric), (TOP, line))
