import cmath
import json
import math
import random

import pytest

from loxpair import (
    IDENTITY,
    Matrix2C,
    SingularMatrix,
    commutator,
    inverse,
    matrix_from_json,
    matrix_to_json,
    max_abs_diff,
    mul,
    normalize,
    power,
    trace,
)
from helpers import random_unimodular


def test_normalize_scalar_matrix():
    m = normalize(2, 0, 0, 2)
    assert max_abs_diff(m, IDENTITY) < 1e-15
    assert abs(m.det() - 1) < 1e-15


def test_normalize_already_unimodular():
    m = normalize(1, 1, 0, 1)
    assert max_abs_diff(m, Matrix2C(1, 1, 0, 1)) < 1e-15


def test_normalize_diag_2_1():
    m = normalize(2, 0, 0, 1)
    assert abs(m.a - math.sqrt(2)) < 1e-15
    assert abs(m.d - 1 / math.sqrt(2)) < 1e-15
    assert abs(m.det() - 1) < 1e-15


def test_normalize_singular_rejected():
    with pytest.raises(SingularMatrix):
        normalize(1, 2, 2, 4)


def test_nonfinite_entries_rejected():
    with pytest.raises(ValueError):
        Matrix2C(float("nan"), 0, 0, 1)
    with pytest.raises(ValueError):
        normalize(float("inf"), 0, 0, 1)


def test_mul_examples():
    g = Matrix2C(1, 1, 1, 2)
    assert max_abs_diff(mul(IDENTITY, g), g) == 0
    par = Matrix2C(1, 1, 0, 1)
    assert max_abs_diff(mul(par, par), Matrix2C(1, 2, 0, 1)) < 1e-15
    f = Matrix2C(2, 0, 0, 0.5)
    assert max_abs_diff(mul(f, g), Matrix2C(2, 2, 0.5, 1)) < 1e-15


def test_inverse_examples():
    assert max_abs_diff(inverse(IDENTITY), IDENTITY) == 0
    assert max_abs_diff(inverse(Matrix2C(1, 1, 0, 1)), Matrix2C(1, -1, 0, 1)) == 0
    assert max_abs_diff(inverse(Matrix2C(2, 0, 0, 0.5)), Matrix2C(0.5, 0, 0, 2)) == 0


def test_inverse_random():
    rng = random.Random(7)
    for _ in range(200):
        m = random_unimodular(rng)
        assert max_abs_diff(mul(m, inverse(m)), IDENTITY) <= 1e-9


def test_power_examples():
    f = Matrix2C(2, 0, 0, 0.5)
    assert max_abs_diff(power(f, 0), IDENTITY) == 0
    assert max_abs_diff(power(f, 3), Matrix2C(8, 0, 0, 0.125)) < 1e-12
    par = Matrix2C(1, 1, 0, 1)
    assert max_abs_diff(power(par, 5), Matrix2C(1, 5, 0, 1)) < 1e-12
    with pytest.raises(ValueError):
        power(f, -1)


def test_power_additivity():
    # mild multipliers keep entries small enough for an absolute bound
    rng = random.Random(11)
    for _ in range(60):
        m = random_unimodular(rng, scale=1.2, min_det=0.6)
        a, b = rng.randint(0, 16), rng.randint(0, 16)
        lhs = power(m, a + b)
        rhs = mul(power(m, a), power(m, b))
        assert max_abs_diff(lhs, rhs) <= 1e-8


def test_det_preserved_by_mul():
    rng = random.Random(13)
    for _ in range(200):
        m1, m2 = random_unimodular(rng), random_unimodular(rng)
        assert abs(mul(m1, m2).det() - 1) <= 1e-8


def test_commutator_trivial_cases():
    g = Matrix2C(1, 1, 1, 2)
    assert max_abs_diff(commutator(IDENTITY, g), IDENTITY) < 1e-15
    assert max_abs_diff(commutator(g, g), IDENTITY) < 1e-12


def test_commutator_trace_example():
    f = Matrix2C(2, 0, 0, 0.5)
    g = Matrix2C(1, 1, 1, 2)
    assert abs(trace(commutator(f, g)) - (-0.25)) < 1e-12


def test_commutator_conjugation_equivariance():
    rng = random.Random(17)
    for _ in range(100):
        f, g, h = (random_unimodular(rng, scale=2.0) for _ in range(3))
        lhs = commutator(mul(mul(h, f), inverse(h)), mul(mul(h, g), inverse(h)))
        rhs = mul(mul(h, commutator(f, g)), inverse(h))
        assert max_abs_diff(lhs, rhs) <= 1e-8


def test_trace_examples():
    assert trace(IDENTITY) == 2
    assert abs(trace(Matrix2C(2, 0, 0, 0.5)) - 2.5) == 0
    assert trace(Matrix2C(1, 1, 1, 2)) == 3


def test_json_round_trip():
    m = Matrix2C(2, 1 + 1j, 0.5 - 0.25j, complex((1 + (1 + 1j) * (0.5 - 0.25j)).real / 2,
                                                 (1 + (1 + 1j) * (0.5 - 0.25j)).imag / 2))
    m = normalize(m.a, m.b, m.c, m.d)
    again = matrix_from_json(json.dumps(matrix_to_json(m)))
    assert max_abs_diff(m, again) < 1e-15


def test_json_rejects_bad_payloads():
    with pytest.raises(ValueError):
        matrix_from_json('{"a":[1,0],"b":[0,0],"c":[0,0]}')  # missing d
    with pytest.raises(ValueError):
        matrix_from_json('{"a":[1,0],"b":[0,0],"c":[0,0],"d":["x",0]}')
    with pytest.raises(ValueError):
        matrix_from_json('{"a":[Infinity,0],"b":[0,0],"c":[0,0],"d":[1,0]}')
    with pytest.raises(ValueError):
        matrix_from_json('{"a":[2,0],"b":[0,0],"c":[0,0],"d":[1,0]}')  # det 2
    with pytest.raises(SingularMatrix):
        matrix_from_json('{"a":[1,0],"b":[2,0],"c":[2,0],"d":[4,0]}')
