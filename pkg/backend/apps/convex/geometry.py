# backend/apps/convex/geometry.py
"""
Planar convex polygons and the operations the radii need: hulls, support
functions, Minkowski sums, clipping and gauge evaluation.

Polygons are immutable, counterclockwise and free of duplicate or collinear
vertices. A single point (1 vertex) and a segment (2 vertices) are valid
bodies; only full-dimensional polygons may act as gauges.
"""
import logging
import math
from typing import NamedTuple

import numpy as np

from core.exceptions import DegenerateGaugeError, GeometryError
from core.tolerances import resolve

logger = logging.getLogger(__name__)


class Point(NamedTuple):
    x: float
    y: float

    def __add__(self, other):
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def __mul__(self, factor):
        return Point(self.x * factor, self.y * factor)

    __rmul__ = __mul__

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other):
        return self.x * other[0] + self.y * other[1]

    def norm(self):
        return math.hypot(self.x, self.y)


class SupportValue(NamedTuple):
    value: float
    argmax: tuple


def _as_array(points):
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        raise GeometryError("empty point set")
    arr = arr.reshape(-1, 2)
    if not np.all(np.isfinite(arr)):
        raise GeometryError("coordinates must be finite")
    return arr


def _scale(arr):
    return max(1.0, float(np.max(np.abs(arr)))) if len(arr) else 1.0


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class ConvexPolygon:
    """
    Counterclockwise convex polygon (or point, or segment).

    The constructor accepts a vertex cycle in convex position in either
    orientation; it removes duplicates and collinear vertices and rejects
    reflex turns. Use ``convex_hull`` for arbitrary point sets.
    """
    __slots__ = ('_v',)

    def __init__(self, vertices, eps=None):
        arr = _as_array(vertices)
        self._v = _canonical_cycle(arr, resolve(None).geo if eps is None else eps)
        self._v.setflags(write=False)

    @classmethod
    def _trusted(cls, arr):
        poly = cls.__new__(cls)
        arr = np.array(arr, dtype=float).reshape(-1, 2)
        arr.setflags(write=False)
        poly._v = arr
        return poly

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def array(self):
        return self._v

    @property
    def vertices(self):
        return tuple(Point(float(x), float(y)) for x, y in self._v)

    def __len__(self):
        return len(self._v)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        pts = ', '.join(f"({x:.6g}, {y:.6g})" for x, y in self._v)
        return f"ConvexPolygon([{pts}])"

    @property
    def dimension(self):
        return min(len(self._v) - 1, 2)

    @property
    def is_degenerate(self):
        return len(self._v) < 3

    @property
    def centroid(self):
        """Vertex centroid (always interior for full-dimensional polygons)"""
        c = self._v.mean(axis=0)
        return Point(float(c[0]), float(c[1]))

    @property
    def area(self):
        if self.is_degenerate:
            return 0.0
        x, y = self._v[:, 0], self._v[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))

    @property
    def size(self):
        """Largest absolute coordinate, at least 1; scales the tolerances"""
        return _scale(self._v)

    # ------------------------------------------------------------------
    # Transformations
    # ------------------------------------------------------------------

    def translate(self, t):
        return ConvexPolygon._trusted(self._v + np.asarray(t, dtype=float))

    def scaled(self, factor, about=None):
        # negative factors are a point reflection, which keeps the orientation
        if factor == 0:
            origin = np.zeros(2) if about is None else np.asarray(about, dtype=float)
            return ConvexPolygon._trusted(origin.reshape(1, 2))
        if about is None:
            return ConvexPolygon._trusted(self._v * factor)
        about = np.asarray(about, dtype=float)
        return ConvexPolygon._trusted(about + (self._v - about) * factor)

    def centered(self):
        """Translate so the vertex centroid sits at the origin"""
        return self.translate(-np.asarray(self.centroid))

    def __neg__(self):
        # point reflection keeps the cyclic order counterclockwise
        return ConvexPolygon._trusted(-self._v)

    def __add__(self, other):
        return minkowski_sum(self, other)

    # ------------------------------------------------------------------
    # Faces
    # ------------------------------------------------------------------

    def edges(self):
        return np.roll(self._v, -1, axis=0) - self._v

    def edge_normals(self):
        """Unit outer normals, one per edge (edge i runs from vertex i to i+1)"""
        if self.is_degenerate:
            raise DegenerateGaugeError("a segment or point has no edge normals")
        e = self.edges()
        n = np.column_stack([e[:, 1], -e[:, 0]])
        return n / np.linalg.norm(n, axis=1)[:, None]

    def halfplanes(self):
        """
        (normals, offsets) with P = {x : normals @ x <= offsets}.

        Degenerate bodies get a closed description (two opposite lines plus
        end caps for a segment, an axis box of size zero for a point).
        """
        if not self.is_degenerate:
            normals = self.edge_normals()
            return normals, np.einsum('ij,ij->i', normals, self._v)
        if len(self._v) == 2:
            a, b = self._v
            d = (b - a) / np.linalg.norm(b - a)
            n = np.array([d[1], -d[0]])
            normals = np.array([n, -n, d, -d])
            return normals, np.array([n @ a, -(n @ a), d @ b, -(d @ a)])
        p = self._v[0]
        normals = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
        return normals, normals @ p

    def support(self, u, eps=None):
        return support(self, u, eps=eps)

    def width(self, u):
        """h(P, u) + h(P, -u)"""
        vals = self._v @ np.asarray(u, dtype=float)
        return float(vals.max() - vals.min())

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def contains(self, point, eps=None):
        tol = resolve(None).geo if eps is None else eps
        normals, offsets = self.halfplanes()
        p = np.asarray(point, dtype=float)
        return bool(np.all(normals @ p <= offsets + tol * self.size))

    def contains_polygon(self, other, eps=None):
        """Support dominance on this polygon's normals"""
        tol = resolve(None).geo if eps is None else eps
        normals, offsets = self.halfplanes()
        return bool(np.all((other.array @ normals.T).max(axis=0) <= offsets + tol * max(self.size, other.size)))

    def is_symmetric(self, eps=1e-7):
        """Centrally symmetric about the vertex centroid"""
        centered = self._v - self._v.mean(axis=0)
        return _same_vertex_set(centered, -centered, eps * self.size)

    def approx_equal(self, other, eps=1e-7):
        return _same_vertex_set(self._v, other.array, eps * max(self.size, other.size))


def _same_vertex_set(a, b, tol):
    if len(a) != len(b):
        return False
    dist = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    return bool(np.all(dist.min(axis=1) <= tol) and np.all(dist.min(axis=0) <= tol))


def _canonical_cycle(arr, eps):
    """Orientation fix, duplicate and collinear removal, convexity check"""
    tol = eps * _scale(arr)
    kept = [arr[0]]
    for p in arr[1:]:
        if np.linalg.norm(p - kept[-1]) > tol:
            kept.append(p)
    if len(kept) > 1 and np.linalg.norm(kept[0] - kept[-1]) <= tol:
        kept.pop()
    cyc = np.array(kept)
    if len(cyc) <= 2:
        return cyc.copy()

    x, y = cyc[:, 0], cyc[:, 1]
    signed = np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)
    area_tol = eps * _scale(cyc) ** 2
    if abs(signed) <= area_tol:
        # all collinear: keep the extreme pair
        return convex_hull(cyc, eps=eps).array.copy()
    if signed < 0:
        cyc = cyc[::-1]

    changed = True
    while changed and len(cyc) > 2:
        changed = False
        n = len(cyc)
        for i in range(n):
            c = _cross(cyc[i - 1], cyc[i], cyc[(i + 1) % n])
            if abs(c) <= tol * np.linalg.norm(cyc[(i + 1) % n] - cyc[i - 1]):
                cyc = np.delete(cyc, i, axis=0)
                changed = True
                break
            if c < 0:
                raise GeometryError("vertices are not in convex position")
    return cyc


# ============================================
# Operations
# ============================================

def convex_hull(points, eps=None):
    """Minimal counterclockwise hull (Andrew's monotone chain)"""
    pts = _as_array(points)
    eps = resolve(None).geo if eps is None else eps
    tol = eps * _scale(pts)

    pts = pts[np.lexsort((pts[:, 1], pts[:, 0]))]
    uniq = [pts[0]]
    for p in pts[1:]:
        if np.linalg.norm(p - uniq[-1]) > tol:
            uniq.append(p)
    if len(uniq) == 1:
        return ConvexPolygon._trusted(uniq)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= tol * np.linalg.norm(p - out[-2]):
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(uniq[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and np.linalg.norm(hull[0] - hull[1]) <= tol:
        hull = hull[:1]
    return ConvexPolygon._trusted(hull)


def support(P, u, eps=None):
    """h(P, u) and the indices of all vertices within eps of the maximum"""
    u = np.asarray(u, dtype=float)
    norm = float(np.linalg.norm(u))
    if norm == 0.0 or not math.isfinite(norm):
        raise GeometryError("support direction must be nonzero")
    eps = resolve(None).geo if eps is None else eps
    vals = P.array @ u
    value = float(vals.max())
    argmax = tuple(int(i) for i in np.flatnonzero(vals >= value - eps * P.size * norm))
    return SupportValue(value, argmax)


def _bottom_first(arr):
    start = np.lexsort((arr[:, 0], arr[:, 1]))[0]
    return np.roll(arr, -start, axis=0)


def minkowski_sum(P, Q, eps=None):
    """Exact Minkowski sum by merging the edge sequences in angular order"""
    if P.is_degenerate or Q.is_degenerate:
        sums = (P.array[:, None, :] + Q.array[None, :, :]).reshape(-1, 2)
        return convex_hull(sums, eps=eps)

    p, q = _bottom_first(P.array), _bottom_first(Q.array)
    ep = np.roll(p, -1, axis=0) - p
    eq = np.roll(q, -1, axis=0) - q
    edges = np.vstack([ep, eq])
    angles = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), 2 * np.pi)
    order = np.argsort(angles, kind='stable')
    steps = np.cumsum(edges[order], axis=0)
    verts = np.vstack([p[0] + q[0], p[0] + q[0] + steps[:-1]])
    return convex_hull(verts, eps=eps)


def difference_body(P, eps=None):
    """P + (-P), centrally symmetric about the origin"""
    return minkowski_sum(P, -P, eps=eps)


def gauge_value(B, x, eps=None):
    """
    Smallest lambda >= 0 with x in lambda*B, for one point or an (m, 2) array.

    B must be full-dimensional with the origin strictly inside.
    """
    if B.is_degenerate:
        raise DegenerateGaugeError("gauge body must be full-dimensional")
    eps = resolve(None).geo if eps is None else eps
    normals, offsets = B.halfplanes()
    if np.any(offsets <= eps * B.size):
        raise DegenerateGaugeError("gauge body must contain origin")
    pts = np.asarray(x, dtype=float)
    vals = np.atleast_2d(pts) @ normals.T / offsets
    result = np.maximum(vals.max(axis=1), 0.0)
    if pts.ndim == 1:
        return float(result[0])
    return result


def intersect(P, Q, eps=None):
    """P ∩ Q by clipping P against the halfplanes of Q; None when empty"""
    if Q.is_degenerate and not P.is_degenerate:
        P, Q = Q, P
    normals, offsets = Q.halfplanes()
    return clip_halfplanes(P, normals, offsets, eps=eps, scale=max(P.size, Q.size))


def clip_halfplanes(P, normals, offsets, eps=None, scale=None):
    """P ∩ {x : normals @ x <= offsets} (Sutherland-Hodgman); None when empty"""
    eps = resolve(None).geo if eps is None else eps
    tol = eps * (P.size if scale is None else scale)
    pts = P.array
    for n, b in zip(normals, offsets):
        s = pts @ n - b
        clipped = []
        m = len(pts)
        for i in range(m):
            j = (i + 1) % m
            if s[i] <= tol:
                clipped.append(pts[i])
            if (s[i] < -tol and s[j] > tol) or (s[i] > tol and s[j] < -tol):
                t = s[i] / (s[i] - s[j])
                clipped.append(pts[i] + t * (pts[j] - pts[i]))
        if not clipped:
            return None
        pts = np.array(clipped)
    return convex_hull(pts, eps=eps)


def regular_kgon(k, phase=0.0, radius=1.0):
    """Vertices radius*(cos(phase + 2πj/k), sin(phase + 2πj/k)), j = 0..k-1"""
    if int(k) != k or k < 3:
        raise GeometryError(f"a regular k-gon needs k >= 3, got {k}")
    angles = phase + 2.0 * np.pi * np.arange(int(k)) / int(k)
    return ConvexPolygon._trusted(radius * np.column_stack([np.cos(angles), np.sin(angles)]))


def affine_map(P, M, b=(0.0, 0.0), eps=None):
    """Image x -> Mx + b, reoriented counterclockwise when det(M) < 0"""
    M = np.asarray(M, dtype=float).reshape(2, 2)
    eps = resolve(None).geo if eps is None else eps
    det = float(np.linalg.det(M))
    if abs(det) <= eps * max(1.0, float(np.max(np.abs(M)))) ** 2:
        raise GeometryError("affine map is singular")
    image = P.array @ M.T + np.asarray(b, dtype=float)
    if det < 0:
        image = image[::-1]
    return ConvexPolygon._trusted(image)


def interpolate(K, C, lam, eps=None):
    """(1 - lam) K + lam C"""
    if not 0.0 <= lam <= 1.0:
        raise GeometryError(f"interpolation parameter must lie in [0, 1], got {lam}")
    if lam == 0.0:
        return K
    if lam == 1.0:
        return C
    return minkowski_sum(K.scaled(1.0 - lam), C.scaled(lam), eps=eps)
