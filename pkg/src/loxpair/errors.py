"""Domain errors raised by the library.

Everything derives from DomainError so callers (notably the CLI) can
distinguish "the input is outside the mathematical domain of the
operation" from programming errors.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class SingularMatrix(DomainError):
    """Matrix determinant is (numerically) zero; cannot normalize."""


class NotApplicable(DomainError):
    """Operation undefined for this transformation class."""


class IdentityHasAllPoints(DomainError):
    """Fixed-point extraction on (plus or minus) the identity."""


class ParabolicGenerator(DomainError):
    """A generator without an axis where an axis is required."""


class SharedAxis(DomainError):
    """The two generators have identical fixed-point sets."""


class DegenerateParameters(DomainError):
    """gamma = 0 with distinct axes: the pair shares a single fixed point."""


class SharedEndpoint(DomainError):
    """Asymptotic geodesics: distance 0 in the closure but not attained."""


class UnsupportedParameters(DomainError):
    """Parameter triple outside the normalization implemented here."""


class BadOrder(DomainError):
    """Elliptic order outside the admissible range."""


class CapExceeded(DomainError):
    """Power search hit its cap without finding an admissible exponent."""
