# backend/apps/diagram/families.py
"""
Extremal families of triangles and their closed-form diagram points.

Vertex labels follow apps.convex.gauges: the triangle S with p1, p2, p3,
the hexagon H with q1..q6 clockwise from (0, 1), the pentagon P with
p1..p5 counterclockwise from (0, 1).
"""
import logging
import math
from enum import Enum
from typing import NamedTuple

import numpy as np

from apps.convex.gauges import (
    GaugeKind,
    gauge_polygon,
    hexagon_vertices,
    pentagon_midpoint,
    pentagon_vertices,
    triangle_vertices,
)
from apps.convex.geometry import ConvexPolygon, affine_map, convex_hull
from apps.radii.functionals import DiagramPoint, diagram_point, diameter
from core.exceptions import GeometryError

logger = logging.getLogger(__name__)

SQRT5 = math.sqrt(5.0)
# the equilateral Jung triangle of the pentagon sits at this parameter
PENTAGON_LAMBDA0 = (3.0 - SQRT5) / 4.0
PENTAGON_JUNG_Y = (1.0 + SQRT5) / 4.0


def _check_range(name, value, low, high):
    if not low <= value <= high:
        raise GeometryError(f"{name} must lie in [{low:g}, {high:g}], got {value}")


# ============================================
# Triangle gauge
# ============================================

def triangle_family(D):
    """
    Isosceles triangle T with R(T, S) = 1, D(T, S) = D and
    r(T, S) = (D/2)(1 - D/2): the lower-left boundary of the triangle diagram.
    D = 2 gives the segment [p1, p2].
    """
    _check_range("D", D, 1.0, 2.0)
    p1, p2, p3 = triangle_vertices()
    half = D / 2.0
    return convex_hull([(p1 + p2) / 2.0, half * p1 + (1.0 - half) * p3, half * p2 + (1.0 - half) * p3])


def triangle_family_point(D):
    _check_range("D", D, 1.0, 2.0)
    return DiagramPoint(D * (2.0 - D) / 4.0, D / 2.0)


# ============================================
# Hexagon gauge
# ============================================

def hexagon_family(lam):
    _check_range("lambda", lam, 0.0, 1.0)
    q = hexagon_vertices()
    return convex_hull([
        (1.0 - lam) * q[0] + lam * q[1],
        (1.0 - lam) * q[3] + lam * q[2],
        (q[4] + q[5]) / 2.0,
    ])


def hexagon_family_point(lam):
    """Closed form of f(T_λ, H), valid for λ ∈ [1/2, 1]"""
    _check_range("lambda", lam, 0.5, 1.0)
    return DiagramPoint((lam + 1.0) * (2.0 - lam) / (4.0 + lam), (1.0 + lam) / 2.0)


# ============================================
# Pentagon gauge
# ============================================

def pentagon_family(lam):
    """T_λ = conv{(1-λ)p1 + λp2, (1-λ)p1 + λp5, p34}; λ = 0 is a segment"""
    _check_range("lambda", lam, 0.0, 0.5)
    p = pentagon_vertices()
    return convex_hull([
        (1.0 - lam) * p[0] + lam * p[1],
        (1.0 - lam) * p[0] + lam * p[4],
        pentagon_midpoint(3, 4),
    ])


def pentagon_family_point(lam):
    _check_range("lambda", lam, 0.0, 0.5)
    y = 1.0 + lam * (SQRT5 - 3.0) / 2.0
    return DiagramPoint(lam * y, y)


def pentagon_jung_triangles():
    """
    (T, T') attaining the Jung ratio D/R = (√5 + 1)/2 of the pentagon:
    T = conv{p34, p15, p12} has two diametrical edges, the equilateral
    T' = conv{(1-λ0)p5 + λ0 p1, (1-λ0)p2 + λ0 p1, p34} has three.
    """
    p = pentagon_vertices()
    T = convex_hull([pentagon_midpoint(3, 4), pentagon_midpoint(1, 5), pentagon_midpoint(1, 2)])
    lam0 = PENTAGON_LAMBDA0
    T_prime = convex_hull([
        (1.0 - lam0) * p[4] + lam0 * p[0],
        (1.0 - lam0) * p[1] + lam0 * p[0],
        pentagon_midpoint(3, 4),
    ])
    return T, T_prime


# ============================================
# Helpers shared by the diagram checks
# ============================================

def edge_diameters(T, C):
    """D([v_i, v_{i+1}], C) for every edge of T"""
    pts = T.array
    return tuple(
        diameter(ConvexPolygon._trusted([a, b]), C).D
        for a, b in zip(pts, np.roll(pts, -1, axis=0))
    )


def minus_gauge_point(C):
    """f(-C, C), the equality point of s·r + R <= ((s + 1)/2)·D"""
    return diagram_point(-C, C)


class FamilyPoint(NamedTuple):
    family: str
    parameter: float
    body: ConvexPolygon
    closed_form: DiagramPoint | None


def family_points(kind, grid):
    """
    Members of the closed-form families for a catalog gauge, ``grid``
    parameters each; empty for gauges without known families.
    """
    kind = kind.canonical()
    rows = []
    if kind == GaugeKind.triangle():
        for D in np.linspace(1.0, 2.0, grid):
            rows.append(FamilyPoint('triangle', float(D), triangle_family(D), triangle_family_point(D)))
    elif kind == GaugeKind.regular(6):
        for lam in np.linspace(0.5, 1.0, grid):
            rows.append(FamilyPoint('hexagon', float(lam), hexagon_family(lam), hexagon_family_point(lam)))
    elif kind == GaugeKind.regular(5):
        for lam in np.linspace(0.0, 0.5, grid):
            rows.append(FamilyPoint('pentagon', float(lam), pentagon_family(lam), pentagon_family_point(lam)))
        T, T_prime = pentagon_jung_triangles()
        rows.append(FamilyPoint('jung-T', 0.5, T, pentagon_family_point(0.5)))
        rows.append(FamilyPoint('jung-T-prime', PENTAGON_LAMBDA0, T_prime, None))
    return rows



# ============================================
# k-gons converging to a limit gauge
# ============================================

class LimitTarget(str, Enum):
    TRIANGLE = 'triangle'
    HEXAGON = 'hexagon'
    PARALLELOGRAM = 'parallelogram'


class KgonLimitRow(NamedTuple):
    m: int
    hausdorff: float
    distance: float


def _bulge_height(base, m):
    """
    Largest bulge 1/(4m), capped so that tangents at the base vertices
    keep those vertices strictly convex.
    """
    edges = base.edges()
    lengths = np.linalg.norm(edges, axis=1)
    turns = np.arccos(np.clip(
        np.sum(edges * np.roll(edges, -1, axis=0), axis=1) / (lengths * np.roll(lengths, -1)),
        -1.0, 1.0,
    ))
    cap = float(np.min(lengths) * np.tan(np.min(turns) / 2.0) / 8.0)
    return min(0.25, cap) / m


def _bulged_points(base, counts, height):
    """Points on parabolic arcs of height ``height`` over the edges of ``base``"""
    normals = base.edge_normals()
    pts = base.array
    out = []
    for edge, count in enumerate(counts):
        a, b = pts[edge], pts[(edge + 1) % len(pts)]
        for j in range(1, count + 1):
            t = j / (count + 1)
            out.append(a + t * (b - a) + 4.0 * t * (1.0 - t) * height * normals[edge])
    return out


def _spread(extra, edges):
    return [extra // edges + (1 if edge < extra % edges else 0) for edge in range(edges)]


def kgon_approximation(k, m):
    """
    The triangle S with k - 3 extra vertices bulging at most 1/(4m) out of
    its edges; a k-gon within Hausdorff distance 1/(4m) of S.
    """
    if k < 3:
        raise GeometryError(f"a k-gon needs k >= 3, got {k}")
    S = gauge_polygon(GaugeKind.triangle())
    if k == 3:
        return S
    return convex_hull([*S.array, *_bulged_points(S, _spread(k - 3, 3), _bulge_height(S, m))])


def symmetric_kgon_approximation(k, m):
    """
    Centrally symmetric k-gon (k even, k >= 6) around the hexagon H, a
    linear image of S ∩ (-S), with bulges placed in opposite pairs.
    """
    if k < 6 or k % 2:
        raise GeometryError(f"a symmetric k-gon around the hexagon needs an even k >= 6, got {k}")
    H = gauge_polygon(GaugeKind.regular(6))
    if k == 6:
        return H
    half = _bulged_points(H, _spread((k - 6) // 2, 3), _bulge_height(H, m))
    return convex_hull([*H.array, *half, *(-p for p in half)])


def parallelogram_kgon_approximation(k, m):
    """The square [-1, 1]^2 with k - 4 extra vertices bulging out of its edges"""
    if k < 4:
        raise GeometryError(f"a k-gon around a parallelogram needs k >= 4, got {k}")
    Q = gauge_polygon(GaugeKind.square())
    if k == 4:
        return Q
    return convex_hull([*Q.array, *_bulged_points(Q, _spread(k - 4, 4), _bulge_height(Q, m))])


def limit_targets(k):
    """Limit gauges a sequence of k-gons can approach"""
    targets = [LimitTarget.TRIANGLE]
    if k >= 4:
        targets.append(LimitTarget.PARALLELOGRAM)
    if k >= 6 and k % 2 == 0:
        targets.append(LimitTarget.HEXAGON)
    return targets


def _rotated_triangles(count):
    S = gauge_polygon(GaugeKind.triangle())
    rows = []
    for angle in np.linspace(0.0, np.pi / 3.0, count, endpoint=False):
        c, s = np.cos(angle), np.sin(angle)
        rows.append(affine_map(S, [[c, -s], [s, c]]))
    return rows


class _LimitSetup(NamedTuple):
    base: GaugeKind
    approximation: object
    members: list
    targets: np.ndarray | None


def _limit_setup(target, grid):
    if target == LimitTarget.TRIANGLE:
        params = np.linspace(1.0, 2.0, grid)
        return _LimitSetup(GaugeKind.triangle(), kgon_approximation,
                           [triangle_family(D) for D in params],
                           np.array([triangle_family_point(D) for D in params]))
    if target == LimitTarget.HEXAGON:
        params = np.linspace(0.5, 1.0, grid)
        return _LimitSetup(GaugeKind.regular(6), symmetric_kgon_approximation,
                           [hexagon_family(lam) for lam in params],
                           np.array([hexagon_family_point(lam) for lam in params]))
    members = [triangle_family(D) for D in np.linspace(1.0, 2.0, grid)] + _rotated_triangles(grid)
    return _LimitSetup(GaugeKind.square(), parallelogram_kgon_approximation, members, None)


def kgon_limit_experiment(k, steps, grid=11, target=LimitTarget.TRIANGLE):
    """
    For m = 1..steps, the largest sup-norm distance between f(T, C_m) and
    f(T, C) over a family of bodies T, where the k-gons C_m converge to C.

    The triangle and hexagon targets use the extremal family of C and its
    closed form. Every body has D = 2R in a parallelogram, so that target
    reports max |1 - D/(2R)| over the triangle family and rotated copies of S.
    """
    target = LimitTarget(target)
    setup = _limit_setup(target, grid)
    base = gauge_polygon(setup.base)
    rows = []
    for m in range(1, steps + 1):
        C_m = setup.approximation(k, m)
        points = np.array([diagram_point(T, C_m) for T in setup.members])
        if setup.targets is None:
            distance = float(np.max(np.abs(1.0 - points[:, 1])))
        else:
            distance = float(np.max(np.abs(points - setup.targets)))
        hausdorff = _bulge_height(base, m) if k > len(base) else 0.0
        logger.debug("k-gon limit target=%s k=%d m=%d distance=%.3g", target.value, k, m, distance)
        rows.append(KgonLimitRow(m, hausdorff, distance))
    return rows
