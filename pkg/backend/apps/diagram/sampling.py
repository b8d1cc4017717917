# backend/apps/diagram/sampling.py
"""
Random bodies mapped into the diagram of a gauge.

Every sample is a pure function of (seed, index): its generator is
np.random.default_rng([seed, index]), so results do not depend on the
number of workers or the order in which they finish.
"""
import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from apps.convex.gauges import GaugeKind, gauge_polygon
from apps.convex.geometry import convex_hull, interpolate
from apps.radii.functionals import asymmetry, diagram_point, normalize, profile
from core.exceptions import GeometryError
from core.tolerances import gauge_radii_setting, resolve
from .families import family_points, triangle_family
from .inequalities import evaluate_inequalities, worst

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('gauge', 'strategy', 'seed', 'index', 'x', 'y', 'r', 'D', 'R', 's',
               'worst_inequality', 'worst_slack')
INTERPOLATION_GRID = np.round(np.arange(0, 10) / 10, 1)
FAMILY_GRID = 21
PROGRESS_EVERY = 1000


class Strategy(str, Enum):
    HULL = 'hull'
    INTERP = 'interp'
    MIX = 'mix'


@dataclass(frozen=True)
class SamplePoint:
    gauge: str
    strategy: str
    seed: int
    index: int
    x: float
    y: float
    r: float
    D: float
    R: float
    s: float
    slacks: dict = field(default_factory=dict)

    @property
    def worst(self):
        if not self.slacks:
            return None, None
        name = min(self.slacks, key=self.slacks.get)
        return name, self.slacks[name]

    def csv_row(self):
        name, slack = self.worst
        return [self.gauge, self.strategy, str(self.seed), str(self.index),
                *(repr(float(v)) for v in (self.x, self.y, self.r, self.D, self.R, self.s)),
                name or '', '' if slack is None else repr(float(slack))]


def random_hull(rng, low=3, high=12):
    """Hull of low..high uniform points in [-1, 1]^2"""
    count = int(rng.integers(low, high + 1))
    return convex_hull(rng.uniform(-1.0, 1.0, size=(count, 2)))


def _body(strategy, gauge, rng, index):
    if strategy == Strategy.MIX:
        strategy = Strategy.HULL if index % 2 == 0 else Strategy.INTERP
    K = random_hull(rng)
    while K.dimension == 0:
        K = random_hull(rng)
    if strategy == Strategy.HULL:
        return K, Strategy.HULL
    lam = float(rng.choice(INTERPOLATION_GRID))
    return interpolate(normalize(K, gauge), gauge, lam), Strategy.INTERP


def _sample_one(job):
    gauge, kind, label, s, seed, index, strategy, tol = job
    rng = np.random.default_rng([seed, index])
    K, used = _body(strategy, gauge, rng, index)
    prof = profile(K, gauge, tol=tol, s=s)
    results = evaluate_inequalities(prof.x, prof.y, s, kind, prof.symmetric)
    return SamplePoint(
        gauge=label, strategy=used.value, seed=seed, index=index,
        x=prof.x, y=prof.y, r=prof.r, D=prof.D, R=prof.R, s=s,
        slacks={res.name: res.slack + res.budget for res in results},
    )


def _family_samples(gauge, kind, label, s, seed, start, tol):
    rows = []
    for offset, member in enumerate(family_points(kind, FAMILY_GRID)):
        prof = profile(member.body, gauge, tol=tol, s=s)
        results = evaluate_inequalities(prof.x, prof.y, s, kind, prof.symmetric)
        rows.append(SamplePoint(
            gauge=label, strategy='family', seed=seed, index=start + offset,
            x=prof.x, y=prof.y, r=prof.r, D=prof.D, R=prof.R, s=s,
            slacks={res.name: res.slack + res.budget for res in results},
        ))
    return rows


def sample_bodies(gauge, n, seed=0, strategy=Strategy.HULL, kind=None, workers=None, tol=None):
    """
    n random bodies mapped into the diagram of ``gauge``.

    Strategies: 'hull' takes hulls of 3-12 uniform points; 'interp'
    normalizes such a hull K0 and takes (1 - λ)K0 + λC for λ on a 0.1 grid;
    'mix' alternates the two and appends the closed-form family members of
    ``kind`` (strategy 'family').
    """
    if n < 1:
        raise GeometryError(f"sample count must be at least 1, got {n}")
    strategy = Strategy(strategy)
    kind = kind or GaugeKind.custom()
    tol = resolve(tol)
    workers = workers or gauge_radii_setting('WORKERS', 1)
    label = kind.label
    s = asymmetry(gauge, tol=tol)
    jobs = [(gauge, kind, label, s, seed, i, strategy, tol) for i in range(n)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(_sample_one, jobs, chunksize=max(1, n // (8 * workers))))
    else:
        samples = []
        for job in jobs:
            samples.append(_sample_one(job))
            if len(samples) % PROGRESS_EVERY == 0:
                logger.debug("sampled %d/%d bodies for %s", len(samples), n, label)

    if strategy == Strategy.MIX:
        samples.extend(_family_samples(gauge, kind, label, s, seed, n, tol))

    for sample in samples:
        name, slack = sample.worst
        if slack is not None and slack < -tol.classify:
            logger.warning("sample %d for %s violates %s by %.3g", sample.index, label, name, -slack)
    return samples


def write_csv(samples, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for sample in samples:
        writer.writerow(sample.csv_row())


# ============================================
# Coverage of the triangle diagram
# ============================================

def coverage_points(grid, tol=None):
    """
    f((1 - λ)T_D + λS, S) on a grid x grid lattice of (D, λ) ∈ [1, 2] x [0, 1]:
    the boundary family and its interpolations towards (1, 1).
    """
    S = gauge_polygon(GaugeKind.triangle())
    points = []
    for D in np.linspace(1.0, 2.0, grid):
        T = triangle_family(D)
        for lam in np.linspace(0.0, 1.0, grid):
            points.append(diagram_point(interpolate(T, S, lam), S, tol=tol))
    return np.array(points, dtype=float)


def coverage_gap(points, spec, pitch=0.02, tol=None):
    """Largest sup-norm distance from a region grid point to the cloud"""
    ticks = np.arange(0.0, 1.0 + pitch / 2, pitch)
    region = np.array([(x, y) for x in ticks for y in ticks if spec.contains(x, y, tol=tol)])
    if len(region) == 0:
        return 0.0
    dist = np.abs(region[:, None, :] - points[None, :, :]).max(axis=2)
    return float(dist.min(axis=1).max())
