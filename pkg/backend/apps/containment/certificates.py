# backend/apps/containment/certificates.py
"""
Certificates of optimal containment.

K is optimally contained in C (K ⊆ C and no smaller homothet of C contains a
translate of K) exactly when there are contact points p^1..p^k of K on the
boundary of C, k ∈ {2, 3}, with outer normals u^j of C at p^j and convex
weights μ_j such that Σ μ_j u^j = 0.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from apps.convex.geometry import Point, convex_hull
from apps.radii.functionals import circumradius
from core.exceptions import CertificateError, DegenerateGaugeError, GeometryError
from core.tolerances import resolve

logger = logging.getLogger(__name__)

# inward dilation applied once when the first attempt finds no certificate
FALLBACK_SHRINK = 1e-9
MAX_CANDIDATE_RAYS = 64


def _fmt_point(p):
    return f"({p[0]:.10g}, {p[1]:.10g})"


@dataclass(frozen=True)
class ContainmentCertificate:
    """
    Contacts are given in the frame of C: the body they touch is the
    normalized K' = (K - translation) / scale, with scale = R(K, C).
    """
    points: tuple
    normals: tuple
    weights: tuple
    translation: Point
    scale: float
    residual: float

    @property
    def k(self):
        return len(self.points)

    def normalized(self, K):
        return K.translate(-np.asarray(self.translation)).scaled(1.0 / self.scale)

    def as_line(self):
        """One-line text form used by the check report"""
        points = ', '.join(_fmt_point(p) for p in self.points)
        normals = ', '.join(_fmt_point(u) for u in self.normals)
        mu = ', '.join(f"{m:.10g}" for m in self.weights)
        return f"k={self.k} points=[{points}] normals=[{normals}] mu=[{mu}] residual={self.residual:.3g}"


class CertificateCheck(NamedTuple):
    valid: bool
    boundary_gap: float
    body_gap: float
    cone_gap: float
    residual: float


def _distance_to_hull(vectors):
    """Euclidean distance from the origin to conv(vectors)"""
    hull = convex_hull(vectors)
    if hull.dimension == 2 and hull.contains((0.0, 0.0), eps=0.0):
        return 0.0
    pts = hull.array
    if len(pts) == 1:
        return float(np.linalg.norm(pts[0]))
    best = np.inf
    for a, b in zip(pts, np.roll(pts, -1, axis=0)):
        d = b - a
        t = np.clip(-(a @ d) / (d @ d), 0.0, 1.0)
        best = min(best, float(np.linalg.norm(a + t * d)))
    return best


def _contact_rays(Kn, C, eps):
    """
    (edge of C, vertex of K') pairs in edge order; each tight edge keeps its
    lowest touching vertex. A vertex at a corner of C yields the two
    extreme rays of that normal cone.
    """
    normals, offsets = C.halfplanes()
    gaps = offsets[None, :] - Kn.array @ normals.T
    rays = []
    for i in range(len(normals)):
        touching = np.flatnonzero(gaps[:, i] <= eps * C.size)
        if len(touching):
            rays.append((i, int(touching[0])))
    return rays, normals


def _select(rays, normals, eps):
    """Antipodal pair if any, else the triple with the largest min weight"""
    ray_normals = normals[[i for i, _ in rays]]
    gram = ray_normals @ ray_normals.T
    # |n_a + n_b|^2 = 2 + 2 n_a·n_b
    antipodal = np.argwhere(np.triu(2.0 + 2.0 * gram <= eps * eps, k=1))
    if len(antipodal):
        a, b = antipodal[0]
        return [rays[a], rays[b]], np.array([0.5, 0.5])

    if len(rays) > MAX_CANDIDATE_RAYS:
        keep = np.unique(np.linspace(0, len(rays) - 1, MAX_CANDIDATE_RAYS).round().astype(int))
        rays = [rays[i] for i in keep]

    best, best_weights, best_min = None, None, -np.inf
    for triple in itertools.combinations(rays, 3):
        M = np.vstack([np.column_stack([normals[i] for i, _ in triple]), np.ones(3)])
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        weights = np.linalg.solve(M, [0.0, 0.0, 1.0])
        if weights.min() >= -eps and weights.min() > best_min:
            best, best_weights, best_min = list(triple), weights, weights.min()
    if best is None:
        return None, None
    weights = np.clip(best_weights, 0.0, None)
    return best, weights / weights.sum()


def _certify(K, C, tol):
    circ = circumradius(K, C, tol=tol)
    if circ.R <= 0:
        raise GeometryError("a single point has no containment certificate")
    Kn = K.translate(-np.asarray(circ.center)).scaled(1.0 / circ.R)
    rays, normals = _contact_rays(Kn, C, tol.cert)
    if not rays:
        raise CertificateError("no certificate within tolerance: no contacts", residual=None)

    chosen, weights = _select(rays, normals, tol.cert)
    if chosen is None:
        residual = _distance_to_hull(normals[[i for i, _ in rays]])
        raise CertificateError("no certificate within tolerance", residual=residual)

    # rays from one contact point merge into a single normal of its cone
    merged = {}
    for (i, v), w in zip(chosen, weights):
        merged[v] = merged.get(v, np.zeros(2)) + w * normals[i]
    vertices = sorted(merged)
    mu = np.array([np.linalg.norm(merged[v]) for v in vertices])
    if np.any(mu <= 0):
        raise CertificateError("no certificate within tolerance: cancelling rays", residual=None)
    units = np.array([merged[v] / m for v, m in zip(vertices, mu)])
    mu = mu / mu.sum()
    residual = float(np.linalg.norm(mu @ units))
    if len(vertices) < 2 or residual > tol.cert:
        raise CertificateError("no certificate within tolerance", residual=residual)

    return ContainmentCertificate(
        points=tuple(Kn.vertices[v] for v in vertices),
        normals=tuple(Point(float(u[0]), float(u[1])) for u in units),
        weights=tuple(float(m) for m in mu),
        translation=circ.center,
        scale=circ.R,
        residual=residual,
    )


def certify(K, C, tol=None):
    """
    Certificate that the normalized K is optimally contained in C.

    Raises CertificateError when the contacts admit no convex combination of
    normals summing to zero, after one retry on K dilated inward by 1e-9.
    """
    tol = resolve(tol)
    if C.is_degenerate:
        raise DegenerateGaugeError("gauge must be full-dimensional")
    try:
        return _certify(K, C, tol)
    except CertificateError as first:
        logger.warning("certificate fallback for %r: %s", K, first)
        shrunk = K.scaled(1.0 - FALLBACK_SHRINK, about=K.centroid)
        try:
            return _certify(shrunk, C, tol)
        except CertificateError as exc:
            residuals = [r for r in (first.residual, exc.residual) if r is not None]
            raise CertificateError(
                "no certificate within tolerance",
                residual=min(residuals) if residuals else None,
            ) from exc


def validate_certificate(cert, K, C, tol=None):
    """
    Independent four-part check: contacts on the boundary of C, contacts in
    the normalized K, normals in the normal cones, and zero in their hull.
    """
    tol = resolve(tol)
    eps = tol.cert * C.size
    Kn = cert.normalized(K)
    normals, offsets = C.halfplanes()
    pts = np.array(cert.points)
    units = np.array(cert.normals)
    mu = np.array(cert.weights)

    boundary_gap = float(np.max(np.abs((pts @ normals.T - offsets).max(axis=1))))
    k_normals, k_offsets = Kn.halfplanes()
    body_gap = float(max(0.0, np.max(pts @ k_normals.T - k_offsets)))
    support_C = (C.array @ units.T).max(axis=0)
    cone_gap = float(np.max(support_C - np.einsum('ij,ij->i', pts, units)))
    residual = float(np.linalg.norm(mu @ units))
    weights_ok = bool(np.all(mu >= -tol.cert) and abs(mu.sum() - 1.0) <= tol.cert)
    norms_ok = bool(np.allclose(np.linalg.norm(units, axis=1), 1.0, atol=tol.cert))

    valid = (
        2 <= cert.k <= 3
        and weights_ok
        and norms_ok
        and boundary_gap <= eps
        and body_gap <= eps
        and cone_gap <= eps
        and residual <= tol.cert
    )
    return CertificateCheck(valid, boundary_gap, body_gap, cone_gap, residual)
