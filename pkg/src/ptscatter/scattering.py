"""Scattering matrix of the zero-range model and its characteristic checks.

For an extension parameter T the scattering matrix continued into the open
lower half-plane is the matrix Mobius function

    S(z) = (I - 2(1+iz) T) (I - 2(1-iz) T)^{-1},      Im z < 0,

with boundary values on the real axis given by the same rational formula.
Numerator and denominator are polynomials in T and commute, so the quotient
order is immaterial.  A single interior sample of S recovers T:

    T = (I - S(z)) (2(1+iz) I - 2(1-iz) S(z))^{-1},

which is the factored form of the Mobius inverse
(1/(2(iz-1))) (I - S)(S - theta(z) I)^{-1}, theta(z) = (1+iz)/(1-iz); the
factored form stays finite at z = -i where theta has a pole.

The check_condition_* functions verify the characteristic properties that
single out scattering matrices of nonnegative metric-self-adjoint extensions
(G denotes the metric e^{-chi i R P_xi}):

    (a)  S(z)* G S(z) <= G                        for all  Im z < 0,
    (b)  G S(z) = S(-conj z)* G                   for Im z <= 0,
    (c)  (Re z)[G - S* G S] = i (Im z)[S* G - G S]  at one interior point
         with Re z != 0,
    (d)  P_xi S(z) = S(-conj z)* P_xi             for Im z <= 0,

plus the antilinear criterion sigma_3 conj(S(z)) sigma_3 = S(-conj z), which
holds exactly when T is PT-symmetric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import (DEFAULT_TOL, SIGMA0, SIGMA1, SIGMA3, KreinMetricParams,
                       exp_involution, metric, p_xi)
from .errors import ArgumentError, SingularMatrixError
from .extensions import ExtensionParams
from .matrix2 import as_matrix, hermitian_eigenvalues, operator_norm

DEFAULT_CONDITION_LIMIT = 1e12


def _spectral_point(z, interior: bool = False) -> complex:
    zz = complex(z)
    if not (math.isfinite(zz.real) and math.isfinite(zz.imag)):
        raise ArgumentError(f"z must be finite, got {z!r}")
    if interior:
        if not zz.imag < 0:
            raise ArgumentError(f"z must lie strictly in the lower half-plane, got {zz}")
    elif zz.imag > 0:
        raise ArgumentError(f"z must lie in the closed lower half-plane, got {zz}")
    return zz


@dataclass(frozen=True)
class ScatteringEvaluation:
    """One evaluation of S(z), with the condition number of the inverted
    denominator recorded."""

    z: complex
    s: np.ndarray
    condition_number: float


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one characteristic-property check: the worst residual over
    the sampled points and the point that produced it."""

    passed: bool
    residual: float
    witness_z: complex


@dataclass(frozen=True)
class PropertyReport:
    cond_a: PropertyCheck
    cond_b: PropertyCheck
    cond_c: PropertyCheck
    cond_d: PropertyCheck
    pt_criterion: PropertyCheck


def _quotient(num, den, z, condition_limit):
    """num @ den^{-1} with the denominator's condition number, sharing one
    determinant evaluation between the conditioning check and the adjugate."""
    d = complex(den[0, 0] * den[1, 1] - den[0, 1] * den[1, 0])
    absd = abs(d)
    if absd == 0.0:
        raise SingularMatrixError(f"denominator is singular at z = {z}", z=z)
    frob = float((den.real ** 2 + den.imag ** 2).sum())
    disc = max(frob * frob / 4.0 - absd * absd, 0.0)
    cond = max((frob / 2.0 + math.sqrt(disc)) / absd, 1.0)
    if cond > condition_limit:
        raise SingularMatrixError(
            f"denominator condition number {cond:.3e} exceeds "
            f"{condition_limit:g} at z = {z}", z=z)
    adj = np.array([[den[1, 1], -den[0, 1]], [-den[1, 0], den[0, 0]]])
    return num @ adj / d, cond


def s_matrix(t, z, condition_limit: float = DEFAULT_CONDITION_LIMIT) -> ScatteringEvaluation:
    """Evaluate S(z) = (I - 2(1+iz) t)(I - 2(1-iz) t)^{-1}.

    Raises :class:`SingularMatrixError` when the denominator's condition
    number exceeds ``condition_limit``.
    """
    a = as_matrix(t)
    zz = _spectral_point(z)
    num = SIGMA0 - 2.0 * (1.0 + 1j * zz) * a
    den = SIGMA0 - 2.0 * (1.0 - 1j * zz) * a
    s, cond = _quotient(num, den, zz, condition_limit)
    return ScatteringEvaluation(z=zz, s=s, condition_number=cond)


def s_matrix_zero_range(e: ExtensionParams, z,
                        condition_limit: float = DEFAULT_CONDITION_LIMIT) -> ScatteringEvaluation:
    """Evaluate S(z) from (beta0, beta1, chi, xi) without assembling T.

    Numerator and denominator are built directly from P_xi and the
    hyperbolic factor e^{chi i R P_xi}:

        [1 - 2(1+iz) beta0] P_xi - [2(1+iz) beta1] e^{chi i R P_xi}

    over the same expression with 1+iz replaced by 1-iz; this agrees with
    s_matrix(t_from_betas(e), z) to rounding wherever the denominator is
    well conditioned.
    """
    zz = _spectral_point(z)
    sx = p_xi(e.metric.xi)
    hyp = exp_involution(e.metric.chi, 1j * (SIGMA1 @ sx))
    ap = 2.0 * (1.0 + 1j * zz)
    am = 2.0 * (1.0 - 1j * zz)
    num = (1.0 - ap * e.beta0) * sx - (ap * e.beta1) * hyp
    den = (1.0 - am * e.beta0) * sx - (am * e.beta1) * hyp
    s, cond = _quotient(num, den, zz, condition_limit)
    return ScatteringEvaluation(z=zz, s=s, condition_number=cond)


def t_from_s(s, z, condition_limit: float = DEFAULT_CONDITION_LIMIT) -> np.ndarray:
    """Recover T from one interior sample of the scattering matrix.

    Requires Im z < 0 strictly; the recovered T does not depend on which
    interior z was used.  Raises :class:`SingularMatrixError` when
    2(1+iz) I - 2(1-iz) S is not safely invertible.
    """
    sm = as_matrix(s)
    zz = _spectral_point(z, interior=True)
    a = 2.0 * (1.0 + 1j * zz)
    b = 2.0 * (1.0 - 1j * zz)
    t, _ = _quotient(SIGMA0 - sm, a * SIGMA0 - b * sm, zz, condition_limit)
    return t


def check_condition_a(t, p: KreinMetricParams, zs, tol: float = DEFAULT_TOL) -> PropertyCheck:
    """Metric contraction G - S(z)* G S(z) >= 0 over interior points.

    The residual is the most negative eigenvalue encountered, clamped at 0;
    the witness is the point that produced it.
    """
    g = metric(p)
    worst = math.inf
    worst_z = None
    for z in zs:
        zz = _spectral_point(z, interior=True)
        s = s_matrix(t, zz).s
        low = hermitian_eigenvalues(g - s.conj().T @ g @ s)[0]
        if low < worst:
            worst, worst_z = low, zz
    if worst_z is None:
        raise ArgumentError("zs must be nonempty")
    residual = max(0.0, -worst)
    return PropertyCheck(passed=residual <= tol, residual=residual, witness_z=worst_z)


def check_condition_b(t, p: KreinMetricParams, zs, tol: float = DEFAULT_TOL) -> PropertyCheck:
    """Symmetry G S(z) = S(-conj z)* G over points of the closed half-plane."""
    g = metric(p)
    worst = -math.inf
    worst_z = None
    for z in zs:
        zz = _spectral_point(z)
        s = s_matrix(t, zz).s
        s_ref = s_matrix(t, -zz.conjugate()).s
        res = operator_norm(g @ s - s_ref.conj().T @ g)
        if res > worst:
            worst, worst_z = res, zz
    if worst_z is None:
        raise ArgumentError("zs must be nonempty")
    return PropertyCheck(passed=worst <= tol, residual=worst, witness_z=worst_z)


def check_condition_c(t, p: KreinMetricParams, z, tol: float = DEFAULT_TOL) -> PropertyCheck:
    """Interior identity (Re z)[G - S* G S] = i (Im z)[S* G - G S] at one z.

    Requires Re z != 0 and Im z < 0.
    """
    zz = _spectral_point(z, interior=True)
    if zz.real == 0.0:
        raise ArgumentError("condition (c) needs a point with Re z != 0")
    g = metric(p)
    s = s_matrix(t, zz).s
    sh = s.conj().T
    lhs = zz.real * (g - sh @ g @ s)
    rhs = 1j * zz.imag * (sh @ g - g @ s)
    res = operator_norm(lhs - rhs)
    return PropertyCheck(passed=res <= tol, residual=res, witness_z=zz)


def check_condition_d(t, xi: float, z, tol: float = DEFAULT_TOL) -> PropertyCheck:
    """Krein symmetry P_xi S(z) = S(-conj z)* P_xi at one point of the
    closed half-plane."""
    zz = _spectral_point(z)
    j = p_xi(xi)
    s = s_matrix(t, zz).s
    s_ref = s_matrix(t, -zz.conjugate()).s
    res = operator_norm(j @ s - s_ref.conj().T @ j)
    return PropertyCheck(passed=res <= tol, residual=res, witness_z=zz)


def check_pt_criterion(t, zs, tol: float = DEFAULT_TOL) -> PropertyCheck:
    """Antilinear criterion sigma_3 conj(S(z)) sigma_3 = S(-conj z) over
    interior points; passes exactly when t is PT-symmetric."""
    worst = -math.inf
    worst_z = None
    for z in zs:
        zz = _spectral_point(z, interior=True)
        s = s_matrix(t, zz).s
        s_ref = s_matrix(t, -zz.conjugate()).s
        res = operator_norm(SIGMA3 @ np.conj(s) @ SIGMA3 - s_ref)
        if res > worst:
            worst, worst_z = res, zz
    if worst_z is None:
        raise ArgumentError("zs must be nonempty")
    return PropertyCheck(passed=worst <= tol, residual=worst, witness_z=worst_z)


def standard_contraction_norm(t, zs) -> float:
    """Largest singular value of S(z) over the sampled points (plain C^2 norm)."""
    worst = -math.inf
    for z in zs:
        worst = max(worst, operator_norm(s_matrix(t, z).s))
    if worst == -math.inf:
        raise ArgumentError("zs must be nonempty")
    return worst


def lower_half_plane_grid(re_min: float = -3.0, re_max: float = 3.0,
                          im_min: float = -3.0, im_max: float = -0.1,
                          steps: int = 7) -> list[complex]:
    """steps x steps points, row-major: imaginary part outer (ascending),
    real part inner (ascending).  The defaults give the standard 49-point
    grid used by the verification suites."""
    if steps < 1:
        raise ArgumentError("steps must be >= 1")
    if im_max > 0:
        raise ArgumentError("grid must stay in the closed lower half-plane")
    res = np.linspace(re_min, re_max, steps)
    ims = np.linspace(im_min, im_max, steps)
    return [complex(x, y) for y in ims for x in res]


def real_axis_points(lo: float = -3.0, hi: float = 3.0, steps: int = 7) -> list[complex]:
    """Boundary-value sample points on the real axis."""
    if steps < 1:
        raise ArgumentError("steps must be >= 1")
    return [complex(x, 0.0) for x in np.linspace(lo, hi, steps)]


def _merge(checks: list[PropertyCheck], tol: float) -> PropertyCheck:
    worst = max(checks, key=lambda c: c.residual)
    return PropertyCheck(passed=worst.residual <= tol, residual=worst.residual,
                         witness_z=worst.witness_z)


def property_report(t, p: KreinMetricParams, interior=None, boundary=None,
                    witness: complex = 1.0 - 1.0j,
                    tol: float = DEFAULT_TOL) -> PropertyReport:
    """Run all characteristic checks for one extension parameter.

    Conditions (a) and the PT criterion sweep the interior grid; (b) and (d)
    additionally take boundary (real-axis) samples.  The single-point
    conditions (c) and (d) are evaluated at the fixed ``witness`` and, for
    stronger evidence, at every admissible grid point, keeping the worst
    residual.
    """
    interior = list(interior) if interior is not None else lower_half_plane_grid()
    boundary = list(boundary) if boundary is not None else real_axis_points()
    witness = _spectral_point(witness, interior=True)

    cond_a = check_condition_a(t, p, interior, tol)
    cond_b = check_condition_b(t, p, interior + boundary, tol)
    c_points = [witness] + [z for z in interior if complex(z).real != 0.0]
    cond_c = _merge([check_condition_c(t, p, z, tol) for z in c_points], tol)
    d_points = [witness] + interior + boundary
    cond_d = _merge([check_condition_d(t, p.xi, z, tol) for z in d_points], tol)
    pt = check_pt_criterion(t, interior, tol)
    return PropertyReport(cond_a=cond_a, cond_b=cond_b, cond_c=cond_c,
                          cond_d=cond_d, pt_criterion=pt)
