# backend/apps/containment/reduction.py
"""
Reduction of an optimally contained pair (K, C) to a simplex T inside an
intersection S of at most three halfplanes: T ⊆ K ⊆ C ⊆ S, R(T, S) = 1,
r(T, S) <= r(K, C) and D(T, S) <= D(K, C). Two contacts make S a strip.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from apps.convex.geometry import ConvexPolygon, clip_halfplanes, convex_hull, intersect
from apps.radii.functionals import circumradius, diameter, inradius
from core.exceptions import GeometryError
from core.tolerances import resolve
from .certificates import certify

logger = logging.getLogger(__name__)

# half-size of the box clipping a strip, relative to the extent of C
STRIP_BOX_FACTOR = 1e3


@dataclass(frozen=True, eq=False)
class HalfplaneRegion:
    """
    {x : normals @ x <= offsets} with unit normals. A strip keeps its
    halfplanes for the analytic functionals; ``polygon`` is then the strip
    clipped to a large box and only serves drawing and containment checks.
    """
    normals: np.ndarray
    offsets: np.ndarray
    polygon: ConvexPolygon
    is_strip: bool
    extent: float

    @classmethod
    def build(cls, normals, offsets, center, extent):
        normals = np.asarray(normals, dtype=float)
        offsets = np.asarray(offsets, dtype=float)
        cross = normals[:, 0] * normals[0, 1] - normals[:, 1] * normals[0, 0]
        is_strip = bool(np.all(np.abs(cross) <= 1e-12))
        if is_strip:
            half = STRIP_BOX_FACTOR * extent
            box = ConvexPolygon._trusted(np.asarray(center) + half * np.array([[-1, -1], [1, -1], [1, 1], [-1, 1]]))
            polygon = clip_halfplanes(box, normals, offsets)
        else:
            polygon = _bounded_polygon(normals, offsets)
        if polygon is None:
            raise GeometryError("halfplane region is empty")
        return cls(normals, offsets, polygon, is_strip, extent)

    def reflected(self, center):
        """The region 2·center - self"""
        shift = 2.0 * (self.normals @ np.asarray(center))
        return HalfplaneRegion.build(-self.normals, self.offsets - shift, center, self.extent)

    def intersect(self, other):
        normals = np.vstack([self.normals, other.normals])
        offsets = np.concatenate([self.offsets, other.offsets])
        if self.is_strip and other.is_strip:
            return HalfplaneRegion.build(normals, offsets, self.polygon.centroid, self.extent)
        polygon = intersect(self.polygon, other.polygon)
        if polygon is None:
            raise GeometryError("halfplane region is empty")
        return HalfplaneRegion(normals, offsets, polygon, False, max(self.extent, other.extent))

    def strip_width(self):
        u = self.normals[0]
        along = self.normals @ u
        return float(self.offsets[along > 0].min() + self.offsets[along < 0].min())

    def contains_polygon(self, P, eps=1e-7):
        return bool(np.all((P.array @ self.normals.T).max(axis=0) <= self.offsets + eps * max(1.0, P.size)))

    def radii_of(self, T, tol=None):
        """(r, D, R) of T with respect to this region"""
        if not self.is_strip:
            return (
                inradius(T, self.polygon, tol=tol).r,
                diameter(T, self.polygon, tol=tol).D,
                circumradius(T, self.polygon, tol=tol).R,
            )
        R = T.width(self.normals[0]) / self.strip_width()
        return 0.0, 2.0 * R, R


def _bounded_polygon(normals, offsets):
    corners = []
    for a, b in itertools.combinations(range(len(normals)), 2):
        M = normals[[a, b]]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        p = np.linalg.solve(M, offsets[[a, b]])
        if np.all(normals @ p <= offsets + 1e-9 * max(1.0, float(np.max(np.abs(p))))):
            corners.append(p)
    if not corners:
        return None
    return convex_hull(corners)


@dataclass(frozen=True, eq=False)
class SimplexReduction:
    certificate: object
    T: ConvexPolygon
    S: HalfplaneRegion
    Ssym: HalfplaneRegion | None
    # functionals of the normalized K in C, and of T in S / Ssym
    r_KC: float
    D_KC: float
    r_TS: float
    D_TS: float
    R_TS: float
    r_Tsym: float | None = None
    D_Tsym: float | None = None

    @property
    def k(self):
        return self.certificate.k

    def guarantee_slacks(self):
        """Signed slacks of the reduction guarantees; >= -tol passes"""
        slacks = {
            'R(T,S) = 1': -abs(self.R_TS - 1.0),
            'r(T,S) <= r(K,C)': self.r_KC - self.r_TS,
            'D(T,S) <= D(K,C)': self.D_KC - self.D_TS,
        }
        if self.Ssym is not None:
            slacks['r(T,Ssym) <= r(K,C)'] = self.r_KC - self.r_Tsym
            slacks['D(T,Ssym) <= D(K,C)'] = self.D_KC - self.D_Tsym
        return slacks


def reduce(K, C, tol=None, certificate=None):
    """
    T = conv(p^j) and S = ∩ {x : u^j·x <= u^j·p^j} from the certificate of
    the normalized K; Ssym = S ∩ (2g - S) when C is symmetric about its
    centroid g.
    """
    tol = resolve(tol)
    cert = certificate if certificate is not None else certify(K, C, tol=tol)
    Kn = cert.normalized(K)
    points = np.array(cert.points)
    units = np.array(cert.normals)
    T = convex_hull(points)
    g = np.asarray(C.centroid)
    S = HalfplaneRegion.build(units, np.einsum('ij,ij->i', units, points), g, C.size)

    r_TS, D_TS, R_TS = S.radii_of(T, tol=tol)
    values = dict(
        r_KC=inradius(Kn, C, tol=tol).r,
        D_KC=diameter(Kn, C, tol=tol).D,
        r_TS=r_TS,
        D_TS=D_TS,
        R_TS=R_TS,
    )
    Ssym = None
    if C.is_symmetric():
        Ssym = S.intersect(S.reflected(g))
        values['r_Tsym'], values['D_Tsym'], _ = Ssym.radii_of(T, tol=tol)
    logger.debug("reduction k=%d strip=%s R(T,S)=%.12g", cert.k, S.is_strip, R_TS)
    return SimplexReduction(certificate=cert, T=T, S=S, Ssym=Ssym, **values)


class BohnenblustCheck(NamedTuple):
    holds: bool
    slacks: tuple


def bohnenblust_equality_check(K, C, tol=None):
    """
    Whether the triangle K (moved to centroid 0) satisfies both inclusions
    K - K ⊆ D(K, C)·C ⊆ 3 (K ∩ -K), with C about its centroid. Slacks are
    the largest support-function violations, relative to D.
    """
    tol = resolve(tol)
    if len(K) != 3:
        raise GeometryError("equality case requires a simplex")
    K0 = K.centered()
    C0 = C.centered()
    D = diameter(K0, C0, tol=tol).D
    outer = C0.scaled(D)

    normals = outer.edge_normals()
    h_diff = (K0.array @ normals.T).max(axis=0) + (-K0.array @ normals.T).max(axis=0)
    first = float(np.max(h_diff - (outer.array @ normals.T).max(axis=0))) / D

    core = intersect(K0, -K0).scaled(3.0)
    normals = core.edge_normals()
    second = float(np.max((outer.array @ normals.T).max(axis=0) - (core.array @ normals.T).max(axis=0))) / D

    holds = first <= tol.cert and second <= tol.cert
    return BohnenblustCheck(holds, (first, second))
