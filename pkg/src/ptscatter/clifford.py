"""The Clifford algebra Cl2 realized on C^2.

The two anti-commuting unitary involutions generating the algebra are
represented by Pauli matrices,

    P -> sigma_3,    R -> sigma_1,    iRP -> sigma_2,

so the basis {I, P, R, iRP} is {sigma_0, sigma_3, sigma_1, sigma_2} and the
algebra is all of M_2(C).  The one-parameter family of PT-symmetric unitary
involutions

    P_xi = e^{i xi R} P = [[cos xi, -i sin xi], [i sin xi, -cos xi]]

together with the hyperbolic rotations e^{chi i R P_xi} builds the
C-operators C = cosh(chi) P_xi + i sinh(chi) R and the positive metric
e^{-chi i R P_xi} used by the rest of the package.  All exponentials of
involutions are evaluated in closed form, cosh/sinh of the parameter, never
through a general-purpose expm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, AssumptionError
from .matrix2 import as_matrix, operator_norm

DEFAULT_TOL = 1e-10
TWO_PI = 2.0 * math.pi

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
for _s in (SIGMA0, SIGMA1, SIGMA2, SIGMA3):
    _s.setflags(write=False)
del _s


def _finite_scalar(name, value) -> complex:
    c = complex(value)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ArgumentError(f"{name} must be finite, got {value!r}")
    return c


def _finite_angle(name, value) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise ArgumentError(f"{name} must be finite, got {value!r}")
    return x


@dataclass(frozen=True)
class PauliCoefficients:
    """Coefficients (a0, a1, a2, a3) of I, P (sigma_3), R (sigma_1), iRP (sigma_2)."""

    a0: complex
    a1: complex
    a2: complex
    a3: complex

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, _finite_scalar(name, getattr(self, name)))

    def as_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])


@dataclass(frozen=True)
class KreinMetricParams:
    """The pair (xi, chi): xi selects the involution P_xi, chi the hyperbolic
    strength of the C-operator and of the metric.  xi is stored reduced to
    [0, 2*pi)."""

    xi: float
    chi: float

    def __post_init__(self):
        xi = _finite_angle("xi", self.xi)
        chi = _finite_angle("chi", self.chi)
        object.__setattr__(self, "xi", xi % TWO_PI)
        object.__setattr__(self, "chi", chi)


def p_xi(xi: float) -> np.ndarray:
    """The PT-symmetric unitary involution e^{i xi R} P.

    Hermitian, squares to the identity, and anti-commutes with R = sigma_1.
    """
    x = _finite_angle("xi", xi)
    c, s = math.cos(x), math.sin(x)
    return np.array([[c, -1j * s], [1j * s, -c]], dtype=complex)


def pauli_compose(coeffs, xi: float = 0.0) -> np.ndarray:
    """a0*I + a1*P_xi + a2*R + a3*(i R P_xi).

    The default xi = 0 is the plain basis {I, sigma_3, sigma_1, sigma_2};
    nonzero xi expands in the rotated involution pair (P_xi, R) instead.
    """
    if isinstance(coeffs, PauliCoefficients):
        a0, a1, a2, a3 = coeffs.a0, coeffs.a1, coeffs.a2, coeffs.a3
    else:
        arr = np.asarray(coeffs, dtype=complex)
        if arr.shape != (4,):
            raise ArgumentError(f"expected 4 coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ArgumentError("coefficients must be finite")
        a0, a1, a2, a3 = arr
    j = p_xi(xi)
    return a0 * SIGMA0 + a1 * j + a2 * SIGMA1 + a3 * (1j * (SIGMA1 @ j))


def pauli_decompose(m, xi: float = 0.0) -> PauliCoefficients:
    """Invert :func:`pauli_compose`; closed-form linear inversion.

    With xi = 0: a0 = (m00+m11)/2, a1 = (m00-m11)/2, a2 = (m01+m10)/2,
    a3 = i(m01-m10)/2.  General xi rotates the (a1, a3) pair by -xi.
    """
    a = as_matrix(m)
    a0 = (a[0, 0] + a[1, 1]) / 2.0
    s1 = (a[0, 0] - a[1, 1]) / 2.0
    s2 = (a[0, 1] + a[1, 0]) / 2.0
    s3 = 1j * (a[0, 1] - a[1, 0]) / 2.0
    x = _finite_angle("xi", xi)
    if x == 0.0:
        return PauliCoefficients(a0, s1, s2, s3)
    c, s = math.cos(x), math.sin(x)
    return PauliCoefficients(a0, c * s1 + s * s3, s2, -s * s1 + c * s3)


def c_operator(params: KreinMetricParams) -> np.ndarray:
    """C = e^{chi i R P_xi} P_xi = cosh(chi) P_xi + i sinh(chi) R.

    Satisfies C^2 = I and commutes with the antilinear PT map.
    """
    return math.cosh(params.chi) * p_xi(params.xi) + 1j * math.sinh(params.chi) * SIGMA1


def metric(params: KreinMetricParams) -> np.ndarray:
    """The positive metric e^{-chi i R P_xi} = cosh(chi) I - sinh(chi) (i R P_xi).

    Hermitian with eigenvalues e^{chi} and e^{-chi}; multiplying it by the
    matching :func:`c_operator` gives back P_xi.
    """
    j = 1j * (SIGMA1 @ p_xi(params.xi))
    return math.cosh(params.chi) * SIGMA0 - math.sinh(params.chi) * j


def exp_involution(theta, j, tol: float = DEFAULT_TOL) -> np.ndarray:
    """e^{theta j} = cosh(theta) I + sinh(theta) j for an involution j.

    Raises :class:`AssumptionError` when ``||j^2 - I||`` exceeds ``tol``.
    """
    jm = as_matrix(j)
    th = _finite_scalar("theta", theta)
    defect = operator_norm(jm @ jm - SIGMA0)
    if defect > tol:
        raise AssumptionError(f"j is not an involution: ||j^2 - I|| = {defect:.3e}")
    return np.cosh(th) * SIGMA0 + np.sinh(th) * jm


def is_unitary_involution(m, tol: float = DEFAULT_TOL) -> bool:
    """True iff m^2 = I and m m* = I within tol (operator norm)."""
    if tol <= 0:
        raise ArgumentError("tol must be positive")
    a = as_matrix(m)
    return (operator_norm(a @ a - SIGMA0) <= tol
            and operator_norm(a @ a.conj().T - SIGMA0) <= tol)
