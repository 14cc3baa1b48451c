"""Two-generator analysis.

The conjugacy class of a pair (f, g) with gamma != 0 is captured by the
parameter triple (beta(f), beta(g), gamma(f,g)). When both generators
have axes, the complex identity

    4 * gamma / (beta_f * beta_g) = sinh(delta + i*phi)**2

recovers the hyperbolic distance delta between the axes and the angle
phi in [0, pi] between the half-planes spanned with the common
perpendicular. Coplanar axes have phi in {0, pi}, where the identity
reduces to sinh(delta)**2 on the right.

`geodesic_distance` is an independent check on delta: it minimizes the
upper-half-space metric between two boundary-parametrized geodesics
and never looks at traces.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .algebra import Matrix2C, commutator, inverse, mul, trace
from .errors import (
    DegenerateParameters,
    NotApplicable,
    ParabolicGenerator,
    SharedAxis,
    SharedEndpoint,
    UnsupportedParameters,
)
from .moebius import (
    CLASS_TOL,
    INF,
    Kind,
    Point,
    beta,
    classify,
    fixed_points,
    is_inf,
    points_equal,
)

# |4*gamma/(beta_f*beta_g)| at or below this means a shared fixed point.
W_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class PairParameters:
    beta_f: complex
    beta_g: complex
    gamma: complex


@dataclass(frozen=True)
class AxisGeometry:
    """delta >= 0, phi in [0, pi]; coplanar iff phi is 0 or pi."""

    delta: float
    phi: float
    coplanar: bool


@dataclass(frozen=True)
class GeodesicH3:
    """Geodesic of upper half-space, named by its two boundary endpoints."""

    e1: Point
    e2: Point

    def __post_init__(self):
        if points_equal(self.e1, self.e2):
            raise ValueError("geodesic endpoints must be distinct")


def gamma(f: Matrix2C, g: Matrix2C) -> complex:
    """tr(f g f^-1 g^-1) - 2; joint conjugation invariant."""
    return trace(commutator(f, g)) - 2.0


def pair_parameters(f: Matrix2C, g: Matrix2C) -> PairParameters:
    return PairParameters(beta(f), beta(g), gamma(f, g))


def _axis_endpoint_sets_equal(f: Matrix2C, g: Matrix2C) -> bool:
    pf, pg = fixed_points(f), fixed_points(g)
    straight = points_equal(pf.p1, pg.p1) and points_equal(pf.p2, pg.p2)
    crossed = points_equal(pf.p1, pg.p2) and points_equal(pf.p2, pg.p1)
    return straight or crossed


def axis_geometry(f: Matrix2C, g: Matrix2C) -> AxisGeometry:
    """Distance and angle between the axes of f and g.

    Takes the principal arcsinh of the principal square root of
    w = 4*gamma/(beta_f*beta_g) and canonicalizes the result z into
    delta = Re(z) >= 0, phi = Im(z) in [0, pi), using the symmetries
    z -> -z and z -> z + i*pi which leave sinh(z)**2 fixed. When
    delta = 0 the representatives phi and pi - phi are also
    indistinguishable; the smaller one is returned.
    """
    bf, bg = beta(f), beta(g)
    for b, name in ((bf, "f"), (bg, "g")):
        if abs(b) <= CLASS_TOL:
            raise ParabolicGenerator(f"generator {name} has no axis geometry (beta = 0)")
    if _axis_endpoint_sets_equal(f, g):
        raise SharedAxis("generators have the same axis")
    w = 4.0 * gamma(f, g) / (bf * bg)
    if abs(w) <= W_DEGENERATE_TOL:
        raise DegenerateParameters(
            "gamma = 0 with distinct axes: the generators share one fixed point"
        )
    z = cmath.asinh(cmath.sqrt(w))
    delta, phi = z.real, z.imag
    if delta < 0.0:
        delta, phi = -delta, -phi
    if phi < 0.0:
        phi += math.pi
    if delta <= CLASS_TOL and phi > math.pi / 2.0:
        phi = math.pi - phi
    coplanar = phi <= CLASS_TOL or phi >= math.pi - CLASS_TOL
    return AxisGeometry(delta, phi, coplanar)


def axis_of(f: Matrix2C) -> GeodesicH3:
    """The geodesic joining the two fixed points of a nonparabolic f."""
    k = classify(f)
    if k.kind in (Kind.IDENTITY, Kind.PARABOLIC):
        raise NotApplicable(f"no axis for {k.kind.value}")
    p = fixed_points(f)
    return GeodesicH3(p.p1, p.p2)


def _parametrize(geo: GeodesicH3):
    """Unit-speed parametrization s -> (horizontal: complex, height: float).

    A geodesic with a finite endpoint pair is the semicircle over the
    segment: center m, radius r, point m + r*tanh(s)*u at height
    r/cosh(s). With one endpoint at infinity it is the vertical ray
    over the other endpoint at height e^s.
    """
    e1, e2 = geo.e1, geo.e2
    if is_inf(e1):
        e1, e2 = e2, e1
    if is_inf(e2):
        base = complex(e1)

        def vertical(s: float):
            return base, math.exp(s)

        return vertical
    m = (e1 + e2) / 2.0
    r = abs(e2 - e1) / 2.0
    u = (e2 - e1) / abs(e2 - e1)

    def semicircle(s: float):
        return m + r * math.tanh(s) * u, r / math.cosh(s)

    return semicircle


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(fn, lo: float, hi: float, tol: float) -> float:
    """Argmin of a unimodal fn on [lo, hi] by golden-section search."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = fn(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = fn(x2)
    return (lo + hi) / 2.0


def geodesic_distance(
    g1: GeodesicH3,
    g2: GeodesicH3,
    *,
    span: float = 35.0,
    step_tol: float = 1e-9,
    max_sweeps: int = 200,
) -> float:
    """Hyperbolic distance between two geodesics, by direct minimization.

    Minimizes Q(s, t) = |x(s) - y(t)|^2 / (2 x3 y3) (the distance is
    acosh(1 + Q)) with coordinate descent, each line minimization by
    golden section over [-span, span]. Q is jointly convex, so the
    sweep converges to the global minimum; 0 means the geodesics
    intersect. Endpoint sets must be disjoint: asymptotic pairs have
    infimum 0 that is never attained and are rejected instead.
    """
    for e in (g1.e1, g1.e2):
        for e_ in (g2.e1, g2.e2):
            if points_equal(e, e_):
                raise SharedEndpoint("geodesics share a boundary endpoint")
    p1, p2 = _parametrize(g1), _parametrize(g2)

    def q(s: float, t: float) -> float:
        x, hx = p1(s)
        y, hy = p2(t)
        d2 = abs(x - y) ** 2 + (hx - hy) ** 2
        return d2 / (2.0 * hx * hy)

    s = t = 0.0
    for _ in range(max_sweeps):
        s_new = _golden_min(lambda v: q(v, t), -span, span, 1e-11)
        t_new = _golden_min(lambda v: q(s_new, v), -span, span, 1e-11)
        moved = abs(s_new - s) + abs(t_new - t)
        s, t = s_new, t_new
        if moved < step_tol:
            break
    return math.acosh(1.0 + q(s, t))


def _quadratic_roots(b: complex, c: complex) -> tuple[complex, complex]:
    """Roots of x^2 + b x + c, larger modulus first, cancellation-safe."""
    sq = cmath.sqrt(b * b - 4.0 * c)
    q = -(b + sq) / 2.0 if abs(b + sq) >= abs(b - sq) else -(b - sq) / 2.0
    if abs(q) == 0.0:
        return 0.0j, 0.0j
    return q, c / q


def group_from_parameters(
    beta_f: complex, beta_g: complex, gam: complex
) -> tuple[Matrix2C, Matrix2C]:
    """A normalized pair with the prescribed parameter triple.

    f = diag(u, 1/u) with (u - 1/u)^2 = beta_f and |u| >= 1 (unit
    circle ties: Im u >= 0); g = [[a, 1], [cg, d]] with
    cg = -gamma/beta_f, a + d the principal root of beta_g + 4, a the
    root of larger modulus. Feeding the result to pair_parameters
    reproduces the inputs; the pair is unique up to conjugacy.
    """
    beta_f, beta_g, gam = complex(beta_f), complex(beta_g), complex(gam)
    if abs(beta_f) <= CLASS_TOL:
        raise UnsupportedParameters("beta_f = 0 (parabolic first generator) is not supported")
    if abs(gam) <= CLASS_TOL:
        raise UnsupportedParameters("gamma must be nonzero")
    w = cmath.sqrt(beta_f)
    u, other = _quadratic_roots(-w, -1.0 + 0.0j)  # u - 1/u = sqrt(beta_f)
    if abs(abs(u) - 1.0) <= CLASS_TOL:
        # Both roots lie on the unit circle with equal imaginary parts;
        # prefer Im >= 0, then the larger real part for determinism.
        candidates = [r for r in (u, other) if r.imag >= -CLASS_TOL]
        u = max(candidates or [u], key=lambda r: r.real)
    f = Matrix2C(u, 0.0, 0.0, 1.0 / u)
    cg = -gam / beta_f
    s = cmath.sqrt(beta_g + 4.0)
    a, d = _quadratic_roots(-s, 1.0 + cg)
    g = Matrix2C(a, 1.0, cg, d)
    return f, g
