"""Closed-form primitives for 2x2 complex matrices.

Every norm, inverse and eigenvalue used in this package reduces to an exact
2x2 formula (trace/determinant discriminants), so nothing here calls an
iterative LAPACK routine.  That keeps all tolerance checks deterministic and
platform independent.
"""

from __future__ import annotations

import numpy as np

from .errors import ArgumentError, SingularMatrixError


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2x2 complex ndarray."""
    a = np.asarray(m, dtype=complex)
    if a.shape != (2, 2):
        raise ArgumentError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ArgumentError("matrix entries must be finite")
    return a


def as_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.shape != (2,):
        raise ArgumentError(f"expected a length-2 vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ArgumentError("vector entries must be finite")
    return a


def det(m) -> complex:
    a = as_matrix(m)
    return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])


def operator_norm(m) -> float:
    """Largest singular value, from the eigenvalues of m* m."""
    a = as_matrix(m)
    t = float(np.sum(np.abs(a) ** 2))  # tr(m* m)
    d = abs(det(a)) ** 2               # det(m* m)
    disc = max(t * t / 4.0 - d, 0.0)
    return float(np.sqrt(t / 2.0 + np.sqrt(disc)))


def condition_number(m) -> float:
    """Spectral condition number s_max / s_min.

    s_min is recovered from |det m| = s_max * s_min, which avoids the
    cancellation the direct eigenvalue formula suffers for ill-conditioned
    input.  Returns inf for singular matrices.
    """
    a = as_matrix(m)
    top = operator_norm(a)
    d = abs(det(a))
    if top == 0.0 or d == 0.0:
        return float("inf")
    return max(top * top / d, 1.0)


def inverse(m, condition_limit: float | None = None, z=None) -> np.ndarray:
    """Adjugate-over-determinant inverse.

    When ``condition_limit`` is given, matrices whose condition number
    exceeds it are rejected with :class:`SingularMatrixError` (carrying the
    spectral point ``z`` if supplied).
    """
    a = as_matrix(m)
    d = det(a)
    if d == 0:
        raise SingularMatrixError("matrix is singular", z=z)
    if condition_limit is not None and condition_number(a) > condition_limit:
        raise SingularMatrixError(
            f"matrix condition number exceeds {condition_limit:g}", z=z)
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]], dtype=complex) / d


def is_hermitian(m, tol: float) -> bool:
    a = as_matrix(m)
    return operator_norm(a - a.conj().T) <= tol


def hermitian_eigenvalues(m) -> tuple[float, float]:
    """Eigenvalues (ascending) of a Hermitian 2x2 matrix, closed form.

    Only the real parts of the diagonal and the modulus of the (0, 1) entry
    enter, so an almost-Hermitian matrix is quietly projected; callers that
    need a hard Hermiticity guarantee must check :func:`is_hermitian` first.
    """
    a = as_matrix(m)
    p = a[0, 0].real
    q = a[1, 1].real
    mid = (p + q) / 2.0
    rad = float(np.hypot((p - q) / 2.0, abs(a[0, 1])))
    return (float(mid - rad), float(mid + rad))
