# backend/apps/convex/factories.py
"""Random bodies for tests; seed with factory.random.reseed_random(...)"""
import math

import factory
import factory.random
import numpy as np

from .geometry import ConvexPolygon, convex_hull


def random_points(count, spread=1.0):
    rnd = factory.random.randgen
    return [(rnd.uniform(-spread, spread), rnd.uniform(-spread, spread)) for _ in range(count)]


def random_hull_vertices(low=3, high=12):
    return convex_hull(random_points(factory.random.randgen.randint(low, high))).vertices


def random_affine_matrix(max_condition=1e3):
    """Invertible 2x2 matrix with bounded condition number"""
    rnd = factory.random.randgen
    while True:
        m = np.array([[rnd.uniform(-2, 2), rnd.uniform(-2, 2)],
                      [rnd.uniform(-2, 2), rnd.uniform(-2, 2)]])
        if abs(np.linalg.det(m)) > 1e-3 and np.linalg.cond(m) <= max_condition:
            return m


def random_direction():
    angle = factory.random.randgen.uniform(0, 2 * math.pi)
    return np.array([math.cos(angle), math.sin(angle)])


class HullFactory(factory.Factory):
    """Convex hull of 3-12 uniform points in [-1, 1]^2"""

    class Meta:
        model = ConvexPolygon

    vertices = factory.LazyFunction(random_hull_vertices)


class TriangleFactory(HullFactory):
    vertices = factory.LazyFunction(lambda: random_hull_vertices(3, 3))


class SymmetricBodyFactory(factory.Factory):
    """Centrally symmetric polygon: hull of random points and their negatives"""

    class Meta:
        model = ConvexPolygon

    vertices = factory.LazyFunction(
        lambda: convex_hull([p for q in random_points(factory.random.randgen.randint(2, 6))
                             for p in (q, (-q[0], -q[1]))]).vertices
    )
