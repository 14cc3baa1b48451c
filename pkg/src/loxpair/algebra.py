"""Determinant-one 2x2 complex matrices and their group operations."""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from .errors import SingularMatrix

# |det - 1| allowed where raw data enters the system (normalize, JSON).
DET_TOL = 1e-9
# |det| at or below this is treated as singular.
SINGULAR_TOL = 1e-12


def _require_finite(z: complex, what: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{what} must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Matrix2C:
    """2x2 complex matrix [[a, b], [c, d]] with ad - bc = 1.

    Immutable value; every operation returns a new matrix. The
    determinant condition is enforced where raw data enters the system
    (`normalize`, `matrix_from_json`). Products and powers of already
    normalized matrices preserve the determinant exactly in exact
    arithmetic, so results are not re-gated: for large entries the
    floating-point determinant cancels catastrophically and is not a
    reliable check. Intended entry magnitudes are <= 1e3.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _require_finite(getattr(self, name), f"entry {name}"))

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Matrix2C") -> "Matrix2C":
        return mul(self, other)


IDENTITY = Matrix2C(1, 0, 0, 1)


def normalize(a: complex, b: complex, c: complex, d: complex) -> Matrix2C:
    """Scale a raw matrix by 1/sqrt(det) so the result has det = 1.

    Uses the principal square root. The residual sign ambiguity (+/-m
    induce the same Moebius map) is harmless downstream: tr is squared
    in beta and the commutator cancels signs in gamma.
    """
    a, b, c, d = (_require_finite(z, "entry") for z in (a, b, c, d))
    det = a * d - b * c
    if abs(det) <= SINGULAR_TOL:
        raise SingularMatrix(f"determinant {det!r} is numerically zero")
    s = cmath.sqrt(det)
    return Matrix2C(a / s, b / s, c / s, d / s)


def mul(m1: Matrix2C, m2: Matrix2C) -> Matrix2C:
    return Matrix2C(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: Matrix2C) -> Matrix2C:
    # Adjugate; valid because det = 1.
    return Matrix2C(m.d, -m.b, -m.c, m.a)


def power(m: Matrix2C, n: int) -> Matrix2C:
    """m**n for n >= 0 by repeated squaring; m**0 is the identity."""
    if n < 0:
        raise ValueError("exponent must be >= 0")
    result = IDENTITY
    base = m
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def commutator(f: Matrix2C, g: Matrix2C) -> Matrix2C:
    """f g f^-1 g^-1."""
    return mul(mul(f, g), mul(inverse(f), inverse(g)))


def trace(m: Matrix2C) -> complex:
    return m.a + m.d


def max_abs_diff(m1: Matrix2C, m2: Matrix2C) -> float:
    """Entrywise infinity-norm of m1 - m2 (the repo-wide test metric)."""
    return max(
        abs(m1.a - m2.a), abs(m1.b - m2.b), abs(m1.c - m2.c), abs(m1.d - m2.d)
    )


def _reject_constant(name):
    raise ValueError(f"non-finite number {name!r} in matrix JSON")


def _entry_from_json(obj, key) -> complex:
    try:
        re, im = obj[key]
    except (KeyError, TypeError, ValueError):
        raise ValueError(f"matrix JSON entry {key!r} must be a [re, im] pair")
    if not (isinstance(re, (int, float)) and isinstance(im, (int, float))):
        raise ValueError(f"matrix JSON entry {key!r} must hold two numbers")
    return _require_finite(complex(re, im), f"entry {key}")


def matrix_from_json(text_or_obj) -> Matrix2C:
    """Parse {"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}.

    Rejects non-finite numbers and determinants away from 1.
    """
    obj = text_or_obj
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj, parse_constant=_reject_constant)
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object with keys a, b, c, d")
    entries = {k: _entry_from_json(obj, k) for k in ("a", "b", "c", "d")}
    det = entries["a"] * entries["d"] - entries["b"] * entries["c"]
    if abs(det) <= SINGULAR_TOL:
        raise SingularMatrix(f"determinant {det!r} is numerically zero")
    if abs(det - 1.0) > DET_TOL:
        raise ValueError(f"matrix JSON must have determinant 1, got {det!r}")
    return Matrix2C(**entries)


def matrix_to_json(m: Matrix2C) -> dict:
    return {
        "a": [m.a.real, m.a.imag],
        "b": [m.b.real, m.b.imag],
        "c": [m.c.real, m.c.imag],
        "d": [m.d.real, m.d.imag],
    }
