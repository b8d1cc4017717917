# backend/apps/lp/solver.py
"""
Small dense LPs: minimize c·z subject to A z <= b, z free, at most four
variables. Backed by the HiGHS dual simplex in scipy.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import linprog

from core.exceptions import GeometryError, LpError
from core.tolerances import gauge_radii_setting, resolve

logger = logging.getLogger(__name__)

MAX_VARIABLES = 4

# scipy status codes
_OPTIMAL, _INFEASIBLE, _UNBOUNDED = 0, 2, 3


class LpStatus(str, Enum):
    OPTIMAL = 'optimal'
    UNBOUNDED = 'unbounded'
    INFEASIBLE = 'infeasible'


@dataclass(frozen=True, eq=False)
class LpProblem:
    """minimize objective·z  s.t.  A[i]·z <= b[i] for every row i"""
    objective: np.ndarray
    A: np.ndarray
    b: np.ndarray
    lexicographic: bool | None = None

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).ravel()
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float).ravel()
        if A.ndim == 1:
            A = A.reshape(1, -1)
        if not 1 <= len(c) <= MAX_VARIABLES:
            raise GeometryError(f"LP needs 1 to {MAX_VARIABLES} variables, got {len(c)}")
        if len(b) == 0:
            raise GeometryError("LP needs at least one constraint")
        if A.shape != (len(b), len(c)):
            raise GeometryError(f"constraint matrix shape {A.shape} does not match {len(b)}x{len(c)}")
        if not (np.all(np.isfinite(c)) and np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise GeometryError("LP coefficients must be finite")
        object.__setattr__(self, 'objective', c)
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'b', b)

    @classmethod
    def from_constraints(cls, objective, constraints, lexicographic=None):
        """Build from an iterable of (row, bound) pairs meaning row·z <= bound"""
        rows, bounds = [], []
        for row, bound in constraints:
            rows.append(row)
            bounds.append(bound)
        if not rows:
            raise GeometryError("LP needs at least one constraint")
        return cls(objective, np.array(rows, dtype=float), np.array(bounds, dtype=float), lexicographic)

    @property
    def dimension(self):
        return len(self.objective)

    def __len__(self):
        return len(self.b)


@dataclass(frozen=True, eq=False)
class LpSolution:
    status: LpStatus
    z: np.ndarray | None = None
    value: float | None = None
    tight: tuple = ()
    # (b - A z) / |A_i|, the distance of z to each constraint line
    slacks: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def is_optimal(self):
        return self.status == LpStatus.OPTIMAL

    def tight_within(self, eps):
        """Constraints whose normalized slack is at most eps"""
        if not self.is_optimal:
            return ()
        return tuple(int(i) for i in np.flatnonzero(self.slacks <= eps))


def _normalized(prob):
    norms = np.linalg.norm(prob.A, axis=1)
    live = norms > 0
    A = np.zeros_like(prob.A)
    b = np.array(prob.b)
    A[live] = prob.A[live] / norms[live, None]
    b[live] = prob.b[live] / norms[live]
    return A, b, live


def _run(c, A, b, feas_tol):
    return linprog(
        c,
        A_ub=A,
        b_ub=b,
        bounds=[(None, None)] * len(c),
        method='highs-ds',
        options={
            'primal_feasibility_tolerance': feas_tol,
            'dual_feasibility_tolerance': feas_tol,
            'presolve': False,
        },
    )


def _refine(c, A, b, z, value, eps, feas_tol):
    """Lexicographically smallest optimal point, one coordinate at a time"""
    rows, bounds = [A, c.reshape(1, -1)], [b, [value + eps * max(1.0, abs(value))]]
    for j in range(len(c)):
        e = np.zeros(len(c))
        e[j] = 1.0
        res = _run(e, np.vstack(rows), np.concatenate(bounds), feas_tol)
        if res.status != _OPTIMAL:
            # optimal face unbounded below in z_j: nothing to break
            continue
        z = res.x
        rows.append(e.reshape(1, -1))
        bounds.append([z[j] + eps * max(1.0, abs(z[j]))])
    return z


def solve(prob, tol=None):
    """
    Optimal point, value and tight constraints of ``prob``.

    Infeasible and unbounded problems come back as statuses; any other
    backend failure raises LpError. With lexicographic tie-breaking (the
    default, see GAUGE_RADII['LEXICOGRAPHIC_TIES']) the reported z* is the
    lexicographically smallest optimal point, so repeated calls agree bit for
    bit.
    """
    tol = resolve(tol)
    lexicographic = prob.lexicographic
    if lexicographic is None:
        lexicographic = gauge_radii_setting('LEXICOGRAPHIC_TIES', True)

    A, b, live = _normalized(prob)
    if np.any(b[~live] < -tol.lp):
        logger.debug("LP infeasible: zero row with negative bound")
        return LpSolution(LpStatus.INFEASIBLE)
    A, b = A[live], b[live]
    if len(b) == 0:
        if np.any(prob.objective != 0):
            return LpSolution(LpStatus.UNBOUNDED)
        z = np.zeros(prob.dimension)
        return LpSolution(LpStatus.OPTIMAL, z, 0.0, tuple(range(len(prob))), np.zeros(len(prob)))

    feas_tol = max(1e-10, min(tol.lp, 1e-7))
    res = _run(prob.objective, A, b, feas_tol)
    if res.status == _INFEASIBLE:
        logger.debug("LP infeasible (d=%d, m=%d)", prob.dimension, len(prob))
        return LpSolution(LpStatus.INFEASIBLE)
    if res.status == _UNBOUNDED:
        logger.debug("LP unbounded (d=%d, m=%d)", prob.dimension, len(prob))
        return LpSolution(LpStatus.UNBOUNDED)
    if res.status != _OPTIMAL:
        raise LpError(f"LP backend failed: {res.message}")

    z = res.x
    value = float(prob.objective @ z)
    if lexicographic:
        # value stays the first optimum; z moves at most eps_lp along the optimal face
        z = _refine(prob.objective, A, b, z, value, tol.lp, feas_tol)

    norms = np.linalg.norm(prob.A, axis=1)
    slacks = np.where(norms > 0, (prob.b - prob.A @ z) / np.where(norms > 0, norms, 1.0), prob.b)
    scale = max(1.0, float(np.max(np.abs(z))))
    tight = tuple(int(i) for i in np.flatnonzero(slacks <= tol.lp * scale))
    if not tight:
        # a free LP optimum always sits on a constraint; take the nearest
        tight = (int(np.argmin(slacks)),)
    logger.debug("LP optimal (d=%d, m=%d) value=%.12g tight=%s", prob.dimension, len(prob), value, tight)
    return LpSolution(LpStatus.OPTIMAL, np.array(z, dtype=float), value, tight, slacks)
