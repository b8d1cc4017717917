# backend/apps/diagram/inequalities.py
"""
Proved inequalities between r, D and R, written in diagram coordinates
x = r/R, y = D/(2R) with s = s(C). Each slack is >= 0 when the inequality
holds; a check passes when slack >= -(tol + budget).
"""
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from apps.convex.gauges import GaugeKind, GaugeTag
from apps.radii.functionals import profile
from core.tolerances import resolve

SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)
# the hexagon bound r >= R/4 is only claimed below this height
HEXAGON_TOP_BAND = 1e-3


@dataclass(frozen=True)
class Inequality:
    name: str
    slack: Callable[[float, float, float], float]
    # extra allowance for gauges that only approximate a curved body
    budget: float = 0.0

    def __call__(self, x, y, s=1.0):
        return self.slack(x, y, s)


class InequalityResult(NamedTuple):
    name: str
    slack: float
    budget: float

    def passes(self, tol):
        return self.slack >= -(tol + self.budget)


def santalo_bound(y):
    """Least r/R of a Euclidean body with D/(2R) = y"""
    c = math.sqrt(max(0.0, 1.0 - y * y))
    return 2.0 * y * y * c / (1.0 + c)


def _hexagon_quarter(x, y, s):
    if y > 1.0 - HEXAGON_TOP_BAND:
        return math.inf
    return x - 0.25


DIAMETER_BOUND = Inequality("D <= 2R", lambda x, y, s: 1.0 - y)
PLANAR_UPPER = Inequality("2r + R <= 3D/2", lambda x, y, s: 3.0 * y - 2.0 * x - 1.0)
PLANAR_LOWER = Inequality("r/R >= y(1-y)", lambda x, y, s: x - y * (1.0 - y))
ASYMMETRY_LINE = Inequality("s r + R <= (s+1)D/2", lambda x, y, s: (s + 1.0) * y - s * x - 1.0)

SYMMETRIC_LINE = Inequality("r + R <= D", lambda x, y, s: 2.0 * y - x - 1.0)
BOHNENBLUST = Inequality("R <= 2D/3", lambda x, y, s: 4.0 * y / 3.0 - 1.0)

PARALLELOGRAM = Inequality("D >= 2R", lambda x, y, s: y - 1.0)
HEXAGON_QUARTER = Inequality("r >= R/4 when D < 2R", _hexagon_quarter)
PENTAGON_LINE = Inequality("(sqrt5-1)r + R <= sqrt5 D/2", lambda x, y, s: SQRT5 * y - (SQRT5 - 1.0) * x - 1.0)
PENTAGON_JUNG = Inequality("D/R >= (1+sqrt5)/2", lambda x, y, s: y - (1.0 + SQRT5) / 4.0)


def disk_inequalities(kind):
    budget = kind.model_error
    return (
        Inequality("D >= sqrt3 R", lambda x, y, s: y - SQRT3 / 2.0, budget),
        Inequality("Euclidean r-D-R bound", lambda x, y, s: x - santalo_bound(y), budget),
    )


UNIVERSAL = (DIAMETER_BOUND, PLANAR_UPPER, PLANAR_LOWER, ASYMMETRY_LINE)
SYMMETRIC = (SYMMETRIC_LINE, BOHNENBLUST)


def gauge_inequalities(kind):
    """Inequalities specific to a catalog gauge kind"""
    kind = kind.canonical()
    if kind.tag == GaugeTag.SQUARE:
        return (PARALLELOGRAM,)
    if kind == GaugeKind.regular(6):
        return (HEXAGON_QUARTER,)
    if kind == GaugeKind.regular(5):
        return (PENTAGON_LINE, PENTAGON_JUNG)
    if kind.tag == GaugeTag.DISK_APPROX:
        return disk_inequalities(kind)
    return ()


def applicable_inequalities(kind=None, symmetric=False):
    kind = kind or GaugeKind.custom()
    return UNIVERSAL + (SYMMETRIC if symmetric else ()) + gauge_inequalities(kind)


def evaluate_inequalities(x, y, s, kind=None, symmetric=None):
    """Signed slacks of every inequality applicable to (kind, symmetry)"""
    if symmetric is None:
        symmetric = abs(s - 1.0) <= 1e-7
    return [
        InequalityResult(ineq.name, float(ineq(x, y, s)), ineq.budget)
        for ineq in applicable_inequalities(kind, symmetric)
    ]


def inequality_suite(K, C, kind=None, tol=None):
    """
    All applicable inequalities for the pair (K, C). Symmetric-gauge
    inequalities switch on when s(C) = 1 within 1e-7, gauge-specific ones
    when ``kind`` names a catalog gauge.
    """
    prof = profile(K, C, tol=resolve(tol))
    return evaluate_inequalities(prof.x, prof.y, prof.s, kind, prof.symmetric)


def worst(results):
    """The result with the smallest slack after its budget"""
    return min(results, key=lambda res: res.slack + res.budget)
