"""Single-transformation analysis.

A determinant-one matrix [[a,b],[c,d]] acts on the extended plane as
z -> (az+b)/(cz+d). This module computes the trace parameter
beta = tr^2 - 4, the conjugacy class, the multiplier mu of the normal
form z -> mu*z, the translation length t and rotation angle theta with

    beta = 4 * sinh((t + i*theta)/2)**2,

and the fixed points on the extended plane.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .algebra import SINGULAR_TOL, Matrix2C, inverse, mul, normalize, trace
from .errors import IdentityHasAllPoints, NotApplicable

# Absolute tolerance for every classification boundary test.
CLASS_TOL = 1e-9


class Kind(Enum):
    IDENTITY = "Identity"
    PARABOLIC = "Parabolic"
    ELLIPTIC = "Elliptic"
    HYPERBOLIC = "Hyperbolic"
    STRICTLY_LOXODROMIC = "StrictlyLoxodromic"


class _Infinity:
    """Point at infinity of the extended complex plane."""

    __slots__ = ()

    def __repr__(self):
        return "INF"


INF = _Infinity()

# An extended-plane point is a complex number or INF.
Point = complex | _Infinity


def is_inf(p) -> bool:
    return isinstance(p, _Infinity)


def points_equal(p: Point, q: Point, tol: float = 1e-9) -> bool:
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    return abs(p - q) <= tol * max(1.0, abs(p), abs(q))


@dataclass(frozen=True)
class TransformClass:
    """Conjugacy class plus the multiplier mu (None for parabolic).

    mu has |mu| >= 1 and satisfies beta = mu - 2 + 1/mu.
    """

    kind: Kind
    multiplier: complex | None


@dataclass(frozen=True)
class TranslationData:
    """Translation length t >= 0 and rotation angle theta in (-pi, pi]."""

    t: float
    theta: float


@dataclass(frozen=True)
class FixedPoints:
    p1: Point
    p2: Point


def beta(f: Matrix2C) -> complex:
    """tr(f)^2 - 4; conjugation invariant."""
    return trace(f) ** 2 - 4.0


def _is_identity(f: Matrix2C) -> bool:
    for sign in (1.0, -1.0):
        if (
            abs(f.a - sign) <= CLASS_TOL
            and abs(f.d - sign) <= CLASS_TOL
            and abs(f.b) <= CLASS_TOL
            and abs(f.c) <= CLASS_TOL
        ):
            return True
    return False


def _multiplier(b: complex) -> complex:
    # mu and 1/mu are the roots of x^2 - (beta + 2) x + 1 = 0.
    s = b + 2.0
    sq = cmath.sqrt(b * (b + 4.0))
    q = s + sq if abs(s + sq) >= abs(s - sq) else s - sq
    mu = q / 2.0  # root of larger modulus, so |mu| >= 1
    if abs(abs(mu) - 1.0) <= CLASS_TOL and mu.imag < 0.0:
        mu = 1.0 / mu  # unit circle tie: take Im(mu) >= 0
    return mu


def classify(f: Matrix2C) -> TransformClass:
    """Conjugacy class of f, with tolerance CLASS_TOL at the boundaries.

    Identity: f = +/-I. Parabolic: beta = 0 otherwise. Elliptic: beta
    real in [-4, 0). Loxodromic otherwise; hyperbolic iff mu is real
    with mu > 1, strictly loxodromic for every other multiplier.
    Boundary values fall into the closed elliptic interval, so
    beta = -4 is the order-two rotation with mu = -1.
    """
    if _is_identity(f):
        return TransformClass(Kind.IDENTITY, 1.0 + 0.0j)
    b = beta(f)
    if abs(b) <= CLASS_TOL:
        return TransformClass(Kind.PARABOLIC, None)
    mu = _multiplier(b)
    if abs(b.imag) <= CLASS_TOL and -4.0 - CLASS_TOL <= b.real < 0.0:
        return TransformClass(Kind.ELLIPTIC, mu)
    if abs(mu.imag) <= CLASS_TOL and mu.real > 1.0:
        return TransformClass(Kind.HYPERBOLIC, complex(mu.real, 0.0))
    return TransformClass(Kind.STRICTLY_LOXODROMIC, mu)


def translation_data(f: Matrix2C) -> TranslationData:
    """Translation length and rotation angle of a nonparabolic f.

    t is forced by cosh(t) = (|beta+4| + |beta|)/4. The same moduli
    give cos(theta) = (|beta+4| - |beta|)/4, which pins theta up to
    sign; the sign is resolved by requiring 4*sinh((t+i*theta)/2)**2
    to reproduce beta, with ties going to theta >= 0 and -pi
    canonicalized to pi.
    """
    k = classify(f)
    if k.kind in (Kind.IDENTITY, Kind.PARABOLIC):
        raise NotApplicable(f"no translation data for {k.kind.value}")
    b = beta(f)
    ch = (abs(b + 4.0) + abs(b)) / 4.0
    t = math.acosh(max(1.0, ch))  # clamp float noise just below 1
    cs = (abs(b + 4.0) - abs(b)) / 4.0
    theta = math.acos(min(1.0, max(-1.0, cs)))
    if theta > 0.0:
        plus = 4.0 * cmath.sinh((t + 1j * theta) / 2.0) ** 2
        minus = 4.0 * cmath.sinh((t - 1j * theta) / 2.0) ** 2
        if abs(minus - b) < abs(plus - b):
            theta = -theta
    if theta <= -math.pi:
        theta = math.pi
    return TranslationData(t, theta)


def fixed_points(f: Matrix2C) -> FixedPoints:
    """Solutions of f(z) = z on the extended plane.

    Roots of c z^2 + (d - a) z - b = 0. If c = 0 then infinity is
    fixed, paired with b/(d-a), or doubly fixed when also d = a.
    Parabolic maps return their single fixed point twice.
    """
    if _is_identity(f):
        raise IdentityHasAllPoints("every point is fixed")
    if abs(f.c) <= SINGULAR_TOL:
        if abs(f.d - f.a) <= SINGULAR_TOL:
            return FixedPoints(INF, INF)
        return FixedPoints(INF, f.b / (f.d - f.a))
    # Stable quadratic: A = c, B = d - a, C = -b, disc = tr^2 - 4.
    bq = f.d - f.a
    sq = cmath.sqrt(trace(f) ** 2 - 4.0)
    q = -(bq + sq) / 2.0 if abs(bq + sq) >= abs(bq - sq) else -(bq - sq) / 2.0
    if abs(q) <= SINGULAR_TOL:
        z = -bq / (2.0 * f.c)  # double root (parabolic, b = 0 case)
        return FixedPoints(z, z)
    return FixedPoints(q / f.c, -f.b / q)


def apply(f: Matrix2C, z: Point) -> Point:
    """Evaluate (az+b)/(cz+d) with the usual infinity conventions."""
    if is_inf(z):
        if abs(f.c) <= SINGULAR_TOL:
            return INF
        return f.a / f.c
    den = f.c * z + f.d
    if abs(den) <= 1e-12 * max(1.0, abs(f.c * z), abs(f.d)):
        return INF
    return (f.a * z + f.b) / den


def beta_of_power(f: Matrix2C, m: int) -> complex:
    """beta(f^m) via the multiplier: mu^m - 2 + mu^-m.

    O(1) in m, unlike forming the matrix power.
    """
    if m < 1:
        raise ValueError("exponent must be >= 1")
    k = classify(f)
    if k.kind == Kind.PARABOLIC:
        raise NotApplicable("no multiplier for a parabolic transformation")
    mu_m = k.multiplier**m
    return mu_m - 2.0 + 1.0 / mu_m


def from_axis_and_multiplier(p: Point, q: Point, mu: complex) -> Matrix2C:
    """Transformation fixing p and q with map multiplier mu.

    Conjugates z -> mu*z (fixing 0 and infinity) by a map sending
    (p, q) to (0, infinity). beta of the result is mu - 2 + 1/mu.
    """
    if points_equal(p, q):
        raise ValueError("axis endpoints must be distinct")
    if is_inf(p):
        s = normalize(0, 1, 1, -q)
    elif is_inf(q):
        s = normalize(1, -p, 0, 1)
    else:
        s = normalize(1, -p, 1, -q)
    u = cmath.sqrt(mu)
    return mul(mul(inverse(s), Matrix2C(u, 0, 0, 1.0 / u)), s)
