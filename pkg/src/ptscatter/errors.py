"""Exception types shared across the package.

The split follows the usual numerics convention: :class:`ArgumentError` flags
inputs that are malformed regardless of their values (wrong shape, NaN/Inf,
out-of-range configuration), while :class:`AssumptionError` flags structurally
valid inputs that fail a mathematical precondition (a matrix that is not an
involution, a spectral point on the wrong side of the real axis, ...).
"""


class ArgumentError(ValueError):
    """Raised when an argument is malformed (shape, finiteness, range)."""


class AssumptionError(ValueError):
    """Raised when a valid-looking input violates a mathematical precondition."""


class SingularMatrixError(AssumptionError):
    """Raised when a matrix that must be inverted is singular or too
    ill-conditioned to invert reliably.

    The offending spectral point, when known, is attached as ``z``.
    """

    def __init__(self, message, z=None):
        super().__init__(message)
        self.z = z
