# backend/apps/lp/tests.py
import itertools

import numpy as np
import pytest
from django.test import SimpleTestCase

from core.exceptions import GeometryError
from core.tolerances import Tolerances
from .solver import LpProblem, LpStatus, solve


def random_bounded_lp(rng, m=12, d=3):
    """Random feasible LP: a box plus m random halfspaces containing the origin"""
    rows = rng.normal(size=(m, d))
    bounds = rng.uniform(0.5, 2.0, size=m)
    box = np.vstack([np.eye(d), -np.eye(d)])
    A = np.vstack([rows, box])
    b = np.concatenate([bounds, np.full(2 * d, 5.0)])
    return LpProblem(rng.normal(size=d), A, b)


def basic_solution_oracle(prob):
    """Best objective over all feasible vertices (every d-subset of rows)"""
    d = prob.dimension
    best = np.inf
    for idx in itertools.combinations(range(len(prob)), d):
        sub = prob.A[list(idx)]
        if abs(np.linalg.det(sub)) < 1e-12:
            continue
        z = np.linalg.solve(sub, prob.b[list(idx)])
        if np.all(prob.A @ z <= prob.b + 1e-9):
            best = min(best, float(prob.objective @ z))
    return best


class SolveTests(SimpleTestCase):

    def test_single_lower_bound(self):
        # minimize λ s.t. -λ <= -3
        sol = solve(LpProblem([1.0], [[-1.0]], [-3.0]))
        self.assertEqual(sol.status, LpStatus.OPTIMAL)
        self.assertAlmostEqual(sol.value, 3.0, places=12)
        self.assertEqual(sol.tight, (0,))

    def test_nonnegative_quadrant(self):
        sol = solve(LpProblem.from_constraints([1.0, 1.0], [([-1.0, 0.0], 0.0), ([0.0, -1.0], 0.0)]))
        self.assertAlmostEqual(sol.value, 0.0, places=12)
        np.testing.assert_allclose(sol.z, [0.0, 0.0], atol=1e-12)
        self.assertEqual(sol.tight, (0, 1))

    def test_unbounded_is_a_status(self):
        sol = solve(LpProblem([1.0], [[1.0]], [1.0]))
        self.assertEqual(sol.status, LpStatus.UNBOUNDED)
        self.assertIsNone(sol.z)

    def test_infeasible_is_a_status(self):
        sol = solve(LpProblem([1.0], [[1.0], [-1.0]], [0.0, -1.0]))
        self.assertEqual(sol.status, LpStatus.INFEASIBLE)
        self.assertEqual(sol.tight_within(1.0), ())

    def test_lexicographic_tie_break(self):
        # every point of the segment y = 0, 0 <= x <= 1 is optimal
        prob = LpProblem([0.0, 1.0], [[0.0, -1.0], [-1.0, 0.0], [1.0, 0.0]], [0.0, 0.0, 1.0], lexicographic=True)
        sol = solve(prob)
        np.testing.assert_allclose(sol.z, [0.0, 0.0], atol=1e-9)

    def test_problem_validation(self):
        with self.assertRaises(GeometryError):
            LpProblem([1.0] * 5, np.ones((1, 5)), [1.0])
        with self.assertRaises(GeometryError):
            LpProblem.from_constraints([1.0], [])
        with self.assertRaises(GeometryError):
            LpProblem([1.0], [[np.nan]], [1.0])
        with self.assertRaises(GeometryError):
            LpProblem([1.0, 1.0], [[1.0]], [1.0])

    def test_constraints_satisfied(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            prob = random_bounded_lp(rng)
            sol = solve(prob)
            self.assertTrue(sol.is_optimal)
            self.assertTrue(np.all(prob.A @ sol.z <= prob.b + 1e-9))
            self.assertTrue(sol.tight)


def test_matches_basic_solution_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(30):
        prob = random_bounded_lp(rng)
        sol = solve(prob)
        assert sol.is_optimal
        assert abs(sol.value - basic_solution_oracle(prob)) <= 1e-8


def test_no_better_feasible_perturbation():
    rng = np.random.default_rng(5)
    prob = random_bounded_lp(rng, m=20)
    sol = solve(prob)
    candidates = sol.z + rng.normal(scale=0.05, size=(10_000, prob.dimension))
    feasible = np.all(candidates @ prob.A.T <= prob.b + 1e-12, axis=1)
    assert feasible.any()
    assert np.all(candidates[feasible] @ prob.objective >= sol.value - 1e-9)


def test_deterministic():
    rng = np.random.default_rng(9)
    prob = random_bounded_lp(rng)
    first, second = solve(prob), solve(prob)
    assert first.z.tobytes() == second.z.tobytes()
    assert first.tight == second.tight


@pytest.mark.parametrize('lexicographic', [True, False])
def test_row_scaling_leaves_optimum(lexicographic):
    rng = np.random.default_rng(13)
    prob = random_bounded_lp(rng)
    scaled = LpProblem(prob.objective, prob.A * 1e3, prob.b * 1e3, lexicographic)
    base = solve(LpProblem(prob.objective, prob.A, prob.b, lexicographic))
    np.testing.assert_allclose(solve(scaled).z, base.z, atol=1e-7)


def test_explicit_tolerances():
    sol = solve(LpProblem([1.0], [[-1.0]], [-3.0]), tol=Tolerances(lp=1e-6))
    assert sol.tight_within(1e-6) == (0,)
