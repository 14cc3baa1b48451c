"""Shared random generators for the test suite (all seeded by callers)."""

import math
import random

from loxpair import INF, Matrix2C, from_axis_and_multiplier, normalize


def random_complex(rng: random.Random, scale: float) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def random_unimodular(rng: random.Random, scale: float = 5.0, min_det: float = 0.5) -> Matrix2C:
    """Random det-1 matrix; resamples until the raw determinant is
    well-conditioned so normalized entries stay below ~2*scale."""
    while True:
        a, b, c, d = (random_complex(rng, scale) for _ in range(4))
        if abs(a * d - b * c) >= min_det:
            return normalize(a, b, c, d)


def random_conjugator(rng: random.Random, scale: float = 2.0) -> Matrix2C:
    return random_unimodular(rng, scale=scale, min_det=0.5)


def separated_real_endpoints(rng: random.Random):
    """Two non-interlacing real endpoint pairs (disjoint coplanar axes)."""
    while True:
        xs = sorted(rng.uniform(-8.0, 8.0) for _ in range(4))
        gaps = [xs[i + 1] - xs[i] for i in range(3)]
        if min(gaps) > 0.15:
            return (xs[0], xs[1]), (xs[2], xs[3])


def random_coplanar_hyperbolic_pair(rng: random.Random):
    """Hyperbolic pair with real axis endpoints, axes disjoint."""
    (p1, q1), (p2, q2) = separated_real_endpoints(rng)
    mu1 = math.exp(rng.uniform(0.3, 2.5))
    mu2 = math.exp(rng.uniform(0.3, 2.5))
    return from_axis_and_multiplier(p1, q1, mu1), from_axis_and_multiplier(p2, q2, mu2)


def random_skew_hyperbolic_pair(rng: random.Random, min_gap: float = 0.3):
    """Hyperbolic pair with complex axis endpoints, axes disjoint.

    Endpoints are kept pairwise far apart; pairs whose axes come too
    close (nearly intersecting or nearly shared) are resampled via the
    caller-supplied gap on the four boundary points.
    """
    while True:
        pts = [random_complex(rng, 3.0) for _ in range(4)]
        ok = all(
            abs(pts[i] - pts[j]) > min_gap for i in range(4) for j in range(i + 1, 4)
        )
        if not ok:
            continue
        mu1 = math.exp(rng.uniform(0.3, 2.0))
        mu2 = math.exp(rng.uniform(0.3, 2.0))
        f = from_axis_and_multiplier(pts[0], pts[1], mu1)
        g = from_axis_and_multiplier(pts[2], pts[3], mu2)
        return f, g


def random_loxodromic(rng: random.Random, t_low: float = 1e-3, t_high: float = 3.0) -> Matrix2C:
    """Loxodromic with translation length in [t_low, t_high] and a
    uniformly random rotation angle, on a random axis."""
    t = math.exp(rng.uniform(math.log(t_low), math.log(t_high)))
    theta = rng.uniform(-math.pi, math.pi)
    mu = complex(math.cos(theta), math.sin(theta)) * math.exp(t)
    p = random_complex(rng, 4.0)
    while True:
        q = random_complex(rng, 4.0)
        if abs(p - q) > 0.2:
            break
    return from_axis_and_multiplier(p, q, mu)
