# backend/apps/radii/functionals.py
"""
Circumradius, inradius, diameter and Minkowski asymmetry of a body K with
respect to a full-dimensional polygonal gauge C, and the diagram map
f(K, C) = (r/R, D/(2R)).
"""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from apps.convex.geometry import ConvexPolygon, Point, difference_body
from apps.lp.solver import LpProblem, LpStatus, solve
from core.exceptions import DegenerateGaugeError, GeometryError, LpError
from core.tolerances import resolve

logger = logging.getLogger(__name__)


class Circumradius(NamedTuple):
    R: float
    # K ⊆ center + R·C
    center: Point
    # (vertex of K, edge of C) pairs touching at the optimum
    tight: tuple


class Inradius(NamedTuple):
    r: float
    # center + r·C ⊆ K
    center: Point


class Diameter(NamedTuple):
    D: float
    pair: tuple
    direction: Point


class DiagramPoint(NamedTuple):
    x: float
    y: float


def _gauge_frame(C):
    """Edge normals of C and support values of C re-centered at its centroid"""
    if C.is_degenerate:
        raise DegenerateGaugeError("gauge must be full-dimensional")
    g = np.asarray(C.centroid)
    normals = C.edge_normals()
    offsets = np.einsum('ij,ij->i', normals, C.array - g)
    return normals, offsets, g


def _support_values(K, normals):
    return (K.array @ normals.T).max(axis=0)


def circumradius(K, C, tol=None):
    """
    Smallest R with K ⊆ t + R·C for some t.

    One LP row per edge normal n_i of C (C taken about its centroid g):
    h(K, n_i) - n_i·c <= λ·h(C - g, n_i), minimizing λ.
    """
    tol = resolve(tol)
    normals, offsets, g = _gauge_frame(C)
    hK = _support_values(K, normals)
    A = np.column_stack([-normals, -offsets])
    prob = LpProblem([0.0, 0.0, 1.0], A, -hK)
    sol = solve(prob, tol=tol)
    if sol.status != LpStatus.OPTIMAL:
        raise LpError(f"circumradius LP ended {sol.status.value}")

    c, lam = sol.z[:2], max(sol.value, 0.0)
    tight = []
    for i in sol.tight:
        vals = K.array @ normals[i]
        for v in np.flatnonzero(vals >= hK[i] - tol.geo * K.size):
            tight.append((int(v), int(i)))
    center = c - lam * g
    return Circumradius(lam, Point(float(center[0]), float(center[1])), tuple(sorted(tight)))


def inradius(K, C, tol=None):
    """
    Largest r with t + r·C ⊆ K for some t; 0 for points and segments.

    Rows per edge normal w_j of K: w_j·c + λ·h(C - g, w_j) <= h(K, w_j).
    """
    tol = resolve(tol)
    if C.is_degenerate:
        raise DegenerateGaugeError("gauge must be full-dimensional")
    if K.is_degenerate:
        return Inradius(0.0, K.centroid)
    g = np.asarray(C.centroid)
    normals, offsets = K.halfplanes()
    hC = _support_values(C.translate(-g), normals)
    A = np.column_stack([normals, hC])
    sol = solve(LpProblem([0.0, 0.0, -1.0], A, offsets), tol=tol)
    if sol.status != LpStatus.OPTIMAL:
        raise LpError(f"inradius LP ended {sol.status.value}")
    lam = max(-sol.value, 0.0)
    center = sol.z[:2] - lam * g
    return Inradius(lam, Point(float(center[0]), float(center[1])))


def diameter(K, C, tol=None):
    """
    D(K, C) = 2 max_u width(K, u) / width(C, u) over the edge normals u of C - C.

    The maximizing pair are the two vertices of K supporting K in
    directions u and -u; ``direction`` is u.
    """
    if C.is_degenerate:
        raise DegenerateGaugeError("gauge must be full-dimensional")
    directions = difference_body(C, eps=None if tol is None else tol.geo).edge_normals()
    proj_K = K.array @ directions.T
    proj_C = C.array @ directions.T
    ratios = (proj_K.max(axis=0) - proj_K.min(axis=0)) / (proj_C.max(axis=0) - proj_C.min(axis=0))
    best = int(np.argmax(ratios))
    hi = int(np.argmax(proj_K[:, best]))
    lo = int(np.argmin(proj_K[:, best]))
    u = directions[best]
    pair = (K.vertices[hi], K.vertices[lo])
    return Diameter(2.0 * float(ratios[best]), pair, Point(float(u[0]), float(u[1])))


def pairwise_diameter(K, C):
    """Brute force: 2 max over vertex pairs of the gauge of x - y in C - C"""
    if C.is_degenerate:
        raise DegenerateGaugeError("gauge must be full-dimensional")
    body = difference_body(C)
    normals, offsets = body.halfplanes()
    diffs = (K.array[:, None, :] - K.array[None, :, :]).reshape(-1, 2)
    gauges = np.maximum((diffs @ normals.T / offsets).max(axis=1), 0.0)
    best = int(np.argmax(gauges))
    n = len(K)
    return Diameter(2.0 * float(gauges[best]), (K.vertices[best // n], K.vertices[best % n]), Point(0.0, 0.0))


def asymmetry(C, tol=None):
    """s(C) = R(-C, C)"""
    return circumradius(-C, C, tol=tol).R


def diagram_point(K, C, tol=None):
    R = circumradius(K, C, tol=tol).R
    if R <= 0:
        raise GeometryError("diagram point of a single point is undefined")
    return DiagramPoint(inradius(K, C, tol=tol).r / R, diameter(K, C, tol=tol).D / (2.0 * R))


def normalize(K, C, tol=None):
    """The translate-and-dilate K' = (K - t)/R(K, C), optimally contained in C"""
    circ = circumradius(K, C, tol=tol)
    if circ.R <= 0:
        raise GeometryError("a single point cannot be normalized")
    return K.translate(-np.asarray(circ.center)).scaled(1.0 / circ.R)


@dataclass(frozen=True)
class RadiiProfile:
    r: float
    D: float
    R: float
    s: float
    incenter: Point
    circumcenter: Point
    diameter_pair: tuple
    width_direction: Point
    symmetric: bool

    @property
    def x(self):
        return self.r / self.R

    @property
    def y(self):
        return self.D / (2.0 * self.R)

    @property
    def point(self):
        return DiagramPoint(self.x, self.y)


def profile(K, C, tol=None, s=None):
    """
    All four functionals of (K, C). Pass ``s`` when evaluating many bodies
    against one gauge to skip the asymmetry LP.
    """
    tol = resolve(tol)
    circ = circumradius(K, C, tol=tol)
    if circ.R <= 0:
        raise GeometryError("radii profile of a single point is undefined")
    inr = inradius(K, C, tol=tol)
    dia = diameter(K, C, tol=tol)
    if s is None:
        s = asymmetry(C, tol=tol)
    return RadiiProfile(
        r=inr.r,
        D=dia.D,
        R=circ.R,
        s=s,
        incenter=inr.center,
        circumcenter=circ.center,
        diameter_pair=dia.pair,
        width_direction=dia.direction,
        symmetric=abs(s - 1.0) <= 1e-7,
    )
