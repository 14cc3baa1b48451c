"""Numerics for two-generator Moebius groups.

Determinant-one 2x2 complex matrices act on the extended plane and on
hyperbolic 3-space. This package classifies single transformations,
extracts translation lengths and rotation angles, recovers the
distance and angle between two axes from the trace parameters
(beta(f), beta(g), gamma(f,g)), cross-checks that geometry against a
direct upper-half-space minimizer, and evaluates a family of extremal
inequalities for pairs with disjoint or intersecting axes.
"""

from .algebra import (
    DET_TOL,
    IDENTITY,
    SINGULAR_TOL,
    Matrix2C,
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
from .errors import (
    BadOrder,
    CapExceeded,
    DegenerateParameters,
    DomainError,
    IdentityHasAllPoints,
    NotApplicable,
    ParabolicGenerator,
    SharedAxis,
    SharedEndpoint,
    SingularMatrix,
    UnsupportedParameters,
)
from .extremal import (
    B_HIGH,
    B_LOW,
    C,
    D,
    LAMBDA_A,
    BoundConstants,
    CounterexamplePoint,
    InequalityReport,
    a_of_n,
    constants,
    counterexample_matrices,
    counterexample_point,
    counterexample_sweep,
    elliptic_order,
    evaluate_theorem,
    lemma3_find_m,
    lemma_bound_check,
    theorem2_proof_constants,
)
from .moebius import (
    INF,
    FixedPoints,
    Kind,
    TransformClass,
    TranslationData,
    apply,
    beta,
    beta_of_power,
    classify,
    fixed_points,
    from_axis_and_multiplier,
    is_inf,
    translation_data,
)
from .pair import (
    AxisGeometry,
    GeodesicH3,
    PairParameters,
    axis_geometry,
    axis_of,
    gamma,
    geodesic_distance,
    group_from_parameters,
    pair_parameters,
)

__version__ = "0.1.0"
