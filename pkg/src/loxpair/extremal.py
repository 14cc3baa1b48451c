"""Extremal constants, lemma gates, inequality evaluators, and the
two-parameter family of loxodromic pairs with no uniform lower bound
on |beta(f) beta(g)| sinh(delta)^(4/3).

The constants c and d come from the (2,3,7) triangle group:

    c = 2(cos(2*pi/7) + cos(pi/7) - 1) = 1.048917...
    d = 2(1 - cos(pi/7))               = 0.198062...

Inequalities are reported, never proved: discreteness of <f, g> is not
decidable here, so every report records it as an assumed hypothesis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Matrix2C
from .errors import BadOrder, CapExceeded, DomainError, NotApplicable
from .moebius import Kind, beta, classify, translation_data
from .pair import axis_geometry, gamma

C = 2.0 * (math.cos(2.0 * math.pi / 7.0) + math.cos(math.pi / 7.0) - 1.0)
D = 2.0 * (1.0 - math.cos(math.pi / 7.0))
LAMBDA_A = 0.471  # three-digit constant of the intersecting-axes bound A
B_LOW = 0.777  # default b for T3 and B (the conservative endpoint)
B_HIGH = 0.884

# Axes count as disjoint above, intersecting below, this delta.
DISJOINT_TOL = 1e-7

THEOREM_IDS = ("T1", "T2", "T3", "T4", "T5", "A", "B")
LEMMA_IDS = ("L1", "L2", "L4")

_DISCRETENESS_NOTE = "discreteness of <f,g> assumed, not verified"


@dataclass(frozen=True)
class BoundConstants:
    c: float
    d: float
    lambda_a: float
    b_low: float
    b_high: float


def constants() -> BoundConstants:
    return BoundConstants(C, D, LAMBDA_A, B_LOW, B_HIGH)


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated inequality: lhs >= rhs, margin = lhs - rhs.

    `satisfied` means margin >= -1e-9 and only carries weight when
    `applicable` is true; `reason` lists failed or assumed hypotheses.
    Inapplicable reports carry NaN sides.
    """

    theorem_id: str
    lhs: float
    rhs: float
    satisfied: bool
    margin: float
    applicable: bool
    reason: str


@dataclass(frozen=True)
class CounterexamplePoint:
    """One member of the counterexample family (lam, mu > 0).

    delta solves sinh(delta) * sinh(lam) * sinh(mu) = 2, which is the
    normalization making the product f g^-1 parabolic of trace -2, and
    u = |beta(f) beta(g)| sinh(delta)^(4/3)
      = 2^(16/3) sinh(lam)^(2/3) sinh(mu)^(2/3).
    """

    lam: float
    mu: float
    delta: float
    trace_fg_inv: complex
    u: float


def a_of_n(n: int) -> float:
    """Commutator lower-bound constant for an elliptic of order n >= 3."""
    if n < 3:
        raise BadOrder(f"order must be >= 3, got {n}")
    if n == 3:
        return 2.0 * math.cos(2.0 * math.pi / 7.0) - 1.0
    if n in (4, 5):
        return 2.0 * math.cos(2.0 * math.pi / 5.0)
    if n == 6:
        return 2.0 * math.cos(2.0 * math.pi / 6.0)
    return 2.0 * math.cos(2.0 * math.pi / n) - 1.0


def lemma3_find_m(f: Matrix2C, cap: int = 10**6) -> int:
    """Smallest m >= 1 with |beta(f^m)| <= (4*pi/sqrt(3)) * sinh(t(f)).

    Powers rotate the multiplier, so |beta(f^m)| dips whenever the
    rotation returns near the positive axis; such an m always exists
    for a loxodromic f. The scan is O(1) per step via the multiplier.
    Since |beta(f^m)| >= 4*sinh(m*t/2)^2 grows monotonically, the scan
    stops early once no larger exponent can qualify.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    k = classify(f)
    if k.kind not in (Kind.HYPERBOLIC, Kind.STRICTLY_LOXODROMIC):
        raise NotApplicable("power search requires a loxodromic transformation")
    t = translation_data(f).t
    rhs = (4.0 * math.pi / math.sqrt(3.0)) * math.sinh(t)
    mu = k.multiplier
    mu_m = 1.0 + 0.0j
    for m in range(1, cap + 1):
        mu_m *= mu
        beta_m = mu_m - 2.0 + 1.0 / mu_m
        if abs(beta_m) <= rhs:
            return m
        if 4.0 * math.sinh(m * t / 2.0) ** 2 > rhs:
            raise CapExceeded(
                f"no exponent can qualify beyond m = {m} (floating-point boundary case)"
            )
    raise CapExceeded(f"no admissible exponent up to cap = {cap}")


def theorem2_proof_constants() -> tuple[float, float]:
    """Threshold and root of the cascade bound for disjoint axes.

    Returns (k, u*) where k = 16*d*c evaluated with the three-decimal
    values d = 0.198, c = 1.048 (the precision the bound is stated
    at), and u* is the unique positive root of

        u^3 / c^2 + 4 u^(3/2) = k,

    found by bisection on [0.1, 2] to 1e-12. The left side is strictly
    increasing, so the root is the infimum of admissible u.
    """
    d3 = math.floor(D * 1000.0) / 1000.0
    c3 = math.floor(C * 1000.0) / 1000.0
    k = 16.0 * d3 * c3

    def chain(u: float) -> float:
        return u**3 / C**2 + 4.0 * u**1.5 - k

    lo, hi = 0.1, 2.0
    while hi - lo > 1e-12:
        mid = (lo + hi) / 2.0
        if chain(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return k, (lo + hi) / 2.0


def counterexample_matrices(lam: float, mu: float) -> tuple[Matrix2C, Matrix2C]:
    """The pair with axis endpoints (+-e^delta) and (+-1).

    f = [[cosh(lam), e^delta sinh(lam)], [e^-delta sinh(lam), cosh(lam)]],
    g = [[cosh(mu), sinh(mu)], [sinh(mu), cosh(mu)]],
    with sinh(delta) = 2 / (sinh(lam) sinh(mu)).
    """
    _require_positive(lam, "lam")
    _require_positive(mu, "mu")
    sl, sm = math.sinh(lam), math.sinh(mu)
    sd = 2.0 / (sl * sm)
    e_delta = sd + math.hypot(1.0, sd)  # sinh + cosh
    f = Matrix2C(math.cosh(lam), e_delta * sl, sl / e_delta, math.cosh(lam))
    g = Matrix2C(math.cosh(mu), sm, sm, math.cosh(mu))
    return f, g


def _require_positive(x: float, name: str) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0.0):
        raise ValueError(f"{name} must be a positive finite real, got {x!r}")


def counterexample_point(lam: float, mu: float) -> CounterexamplePoint:
    """Evaluate the family at (lam, mu).

    delta comes from the defining normalization
    sinh(delta) sinh(lam) sinh(mu) = 2 (equivalently, the trace of
    f g^-1 is pinned at -2, making the product parabolic), and u is
    computed from the matrices as |beta(f) beta(g)| sinh(delta)^(4/3).
    """
    f, g = counterexample_matrices(lam, mu)
    sl, sm = math.sinh(lam), math.sinh(mu)
    sd = 2.0 / (sl * sm)
    delta = math.asinh(sd)
    trace_fg_inv = complex(2.0 - 2.0 * sd * sl * sm, 0.0)
    u = abs(beta(f) * beta(g)) * sd ** (4.0 / 3.0)
    return CounterexamplePoint(float(lam), float(mu), delta, trace_fg_inv, u)


def counterexample_sweep(mu: float, lambdas: list[float]) -> list[CounterexamplePoint]:
    """Pointwise family evaluation, output ordered as the input list."""
    return [counterexample_point(lam, mu) for lam in lambdas]


def elliptic_order(f: Matrix2C, max_order: int = 1000, tol: float = 1e-6) -> int | None:
    """Order of an elliptic f: smallest n >= 2 with n*theta in 2*pi*Z.

    None if the rotation angle is not a rational multiple of 2*pi
    within tol (then f generates an infinite rotation group).
    """
    if classify(f).kind != Kind.ELLIPTIC:
        raise NotApplicable("order is defined for elliptic transformations")
    theta = translation_data(f).theta
    for n in range(2, max_order + 1):
        turns = n * theta / (2.0 * math.pi)
        if abs(n * theta - 2.0 * math.pi * round(turns)) <= tol and round(turns) != 0:
            return n
    return None


def _nan_report(theorem_id: str, reasons: list[str]) -> InequalityReport:
    nan = float("nan")
    return InequalityReport(theorem_id, nan, nan, False, nan, False, "; ".join(reasons))


def _finish(theorem_id: str, lhs: float, rhs: float, reasons: list[str]) -> InequalityReport:
    margin = lhs - rhs
    return InequalityReport(
        theorem_id, lhs, rhs, margin >= -1e-9, margin, True, "; ".join(reasons)
    )


def _kind_gate(k, want_hyperbolic: bool) -> str | None:
    if want_hyperbolic:
        return None if k.kind == Kind.HYPERBOLIC else f"{k.kind.value} generator, hyperbolic required"
    if k.kind in (Kind.HYPERBOLIC, Kind.STRICTLY_LOXODROMIC):
        return None
    return f"{k.kind.value} generator, loxodromic required"


def evaluate_theorem(
    theorem_id: str,
    f: Matrix2C,
    g: Matrix2C,
    b: float = B_LOW,
    order: int | None = None,
) -> InequalityReport:
    """Evaluate one of the built-in inequalities on the pair (f, g).

    T1: sinh(t_f/2) sinh(t_g/2) sinh(delta) >= sqrt(d)/2
        (hyperbolic pair, disjoint axes)
    T2: |beta_f beta_g| sinh(delta)^(4/3) >= 4d
        (loxodromic pair, disjoint axes, sinh(delta) <= 1)
    T3: sinh(t_f) sinh(t_g) sinh(delta)^(4/3) >= 3b/(16 pi^2)
        (hypotheses as T2)
    T4: sinh(t_f) sinh(delta) >= sqrt(3d)/(2 pi)
        (loxodromic pair, beta_f = beta_g, disjoint axes)
    T5: sinh(t_f) sin(pi/n)^2 sinh(delta)^2 >= sqrt(3) a(n)/(4 pi)
        (f loxodromic, g elliptic of order n >= 3, disjoint axes;
        for n >= 5 the alternate bound sqrt(3) cos(2 pi/n)/(2 pi) is
        noted in the reason)
    A:  sinh(t_f/2) sinh(t_g/2) sin(phi) >= lambda_a^2
        (hyperbolic pair, axes intersecting at 0 < phi < pi)
    B:  |beta_f beta_g| sin(phi)^(4/3) >= b
        (loxodromic pair, intersecting axes)

    Hypothesis failures produce applicable = False with the reason
    spelled out; discreteness is always an assumption, echoed in every
    report.
    """
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    notes = [_DISCRETENESS_NOTE]
    failures: list[str] = []

    kf, kg = classify(f), classify(g)
    want_hyp = theorem_id in ("T1", "A")
    for k, name in ((kf, "f"), (kg, "g")):
        if theorem_id == "T5" and name == "g":
            continue
        msg = _kind_gate(k, want_hyp)
        if msg:
            failures.append(f"{name}: {msg}")
    if theorem_id == "T5" and kg.kind != Kind.ELLIPTIC:
        failures.append(f"g: {kg.kind.value} generator, elliptic required")
    if failures:
        return _nan_report(theorem_id, failures + notes)

    try:
        geo = axis_geometry(f, g)
    except DomainError as exc:
        return _nan_report(theorem_id, [f"axis geometry unavailable: {exc}"] + notes)

    intersecting_wanted = theorem_id in ("A", "B")
    if intersecting_wanted:
        if geo.delta > DISJOINT_TOL:
            failures.append(f"axes disjoint (delta = {geo.delta:.6g}), must intersect")
        elif not (DISJOINT_TOL < geo.phi < math.pi - DISJOINT_TOL):
            failures.append("axes do not intersect at an interior angle")
    else:
        if geo.delta <= DISJOINT_TOL:
            failures.append("axes intersect, must be disjoint")
    if theorem_id in ("T2", "T3") and math.sinh(geo.delta) > 1.0 + 1e-12:
        failures.append(f"sinh(delta) = {math.sinh(geo.delta):.6g} > 1")

    bf, bg = beta(f), beta(g)
    if theorem_id == "T4":
        if abs(bf - bg) > 1e-9 * max(1.0, abs(bf), abs(bg)):
            failures.append("beta mismatch: beta(f) != beta(g)")

    n = None
    if theorem_id == "T5":
        n = order if order is not None else elliptic_order(g)
        if n is None:
            failures.append("rotation angle of g is not a rational multiple of 2*pi")
        elif n < 3:
            failures.append(f"elliptic order {n} < 3")
        elif order is not None:
            turns = n * translation_data(g).theta / (2.0 * math.pi)
            if abs(turns - round(turns)) * 2.0 * math.pi > 1e-6:
                failures.append(f"g is not of order {n}")
    if failures:
        return _nan_report(theorem_id, failures + notes)

    sinh_delta = math.sinh(geo.delta)
    if theorem_id == "T1":
        tf, tg = translation_data(f).t, translation_data(g).t
        lhs = math.sinh(tf / 2.0) * math.sinh(tg / 2.0) * sinh_delta
        rhs = math.sqrt(D) / 2.0
    elif theorem_id == "T2":
        lhs = abs(bf * bg) * sinh_delta ** (4.0 / 3.0)
        rhs = 4.0 * D
    elif theorem_id == "T3":
        tf, tg = translation_data(f).t, translation_data(g).t
        lhs = math.sinh(tf) * math.sinh(tg) * sinh_delta ** (4.0 / 3.0)
        rhs = 3.0 * b / (16.0 * math.pi**2)
    elif theorem_id == "T4":
        tf = translation_data(f).t
        lhs = math.sinh(tf) * sinh_delta
        rhs = math.sqrt(3.0 * D) / (2.0 * math.pi)
    elif theorem_id == "T5":
        tf = translation_data(f).t
        lhs = math.sinh(tf) * math.sin(math.pi / n) ** 2 * sinh_delta**2
        rhs = math.sqrt(3.0) * a_of_n(n) / (4.0 * math.pi)
        if n >= 5:
            alt = math.sqrt(3.0) * math.cos(2.0 * math.pi / n) / (2.0 * math.pi)
            notes.append(f"alternate rhs for n >= 5: {alt:.12g}")
    elif theorem_id == "A":
        tf, tg = translation_data(f).t, translation_data(g).t
        lhs = math.sinh(tf / 2.0) * math.sinh(tg / 2.0) * math.sin(geo.phi)
        rhs = LAMBDA_A**2
    else:  # B
        lhs = abs(bf * bg) * math.sin(geo.phi) ** (4.0 / 3.0)
        rhs = b
    return _finish(theorem_id, lhs, rhs, notes)


def lemma_bound_check(
    which: str, f: Matrix2C, g: Matrix2C, n: int | None = None
) -> InequalityReport:
    """Commutator lower bounds: |gamma(f,g)| >= rhs.

    L1: rhs = d under a Fuchsian hypothesis (assumed, echoed).
    L2: rhs = d under a Kleinian hypothesis, gated on
        |beta(f)| <= c or beta(f) = beta(g).
    L4: rhs = a(n) for f elliptic of order n >= 3 and g not of
        order 2.
    """
    if which not in LEMMA_IDS:
        raise ValueError(f"unknown lemma id {which!r}")
    lhs = abs(gamma(f, g))
    if which == "L1":
        return _finish("L1", lhs, D, ["Fuchsian hypothesis assumed, not verified"])
    if which == "L2":
        notes = ["Kleinian hypothesis assumed, not verified"]
        bf, bg = beta(f), beta(g)
        small = abs(bf) <= C + 1e-12
        equal = abs(bf - bg) <= 1e-9 * max(1.0, abs(bf), abs(bg))
        if not (small or equal):
            return _nan_report(
                "L2", [f"gate fails: |beta(f)| = {abs(bf):.6g} > c and beta(f) != beta(g)"] + notes
            )
        notes.append("gate: " + ("|beta(f)| <= c" if small else "beta(f) = beta(g)"))
        return _finish("L2", lhs, D, notes)
    notes = ["Kleinian hypothesis assumed, not verified"]
    kf, kg = classify(f), classify(g)
    if kf.kind != Kind.ELLIPTIC:
        return _nan_report("L4", [f"f: {kf.kind.value} generator, elliptic required"] + notes)
    order = n if n is not None else elliptic_order(f)
    if order is None or order < 3:
        return _nan_report("L4", [f"f must have elliptic order >= 3, got {order}"] + notes)
    if kg.kind == Kind.ELLIPTIC and elliptic_order(g) == 2:
        return _nan_report("L4", ["g has order 2"] + notes)
    return _finish("L4", lhs, a_of_n(order), notes)


__all__ = [
    "C",
    "D",
    "LAMBDA_A",
    "B_LOW",
    "B_HIGH",
    "BoundConstants",
    "constants",
    "InequalityReport",
    "CounterexamplePoint",
    "a_of_n",
    "lemma3_find_m",
    "theorem2_proof_constants",
    "counterexample_matrices",
    "counterexample_point",
    "counterexample_sweep",
    "elliptic_order",
    "evaluate_theorem",
    "lemma_bound_check",
]
