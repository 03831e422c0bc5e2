#!/usr/bin/env python3
"""Classify a handful of operators by PT, Krein and C symmetry.

A 2x2 operator is PT-symmetric when its I, P, iRP coefficients are real and
its R coefficient purely imaginary.  Every such operator is self-adjoint in
some Krein space with involution P_xi; the solver pins the angle.  The
nontrivial PT-symmetric involutions are exactly the C-operators, and the
(xi, chi) recovery below inverts that presentation.
"""

import numpy as np

from ptscatter import (SIGMA1, SIGMA2, SIGMA3, KreinMetricParams, c_operator,
                       pauli_compose, symmetry_report)

CANDIDATES = {
    "sigma_3": SIGMA3,
    "sigma_1 (not PT)": SIGMA1,
    "i sigma_1": 1j * SIGMA1,
    "sigma_2": SIGMA2,
    "scalar 0.3 I": 0.3 * np.eye(2),
    "C(xi=1.0, chi=0.8)": c_operator(KreinMetricParams(1.0, 0.8)),
    # real I, P, iRP coefficients and an imaginary R coefficient
    "generic PT": pauli_compose((0.2, -0.4, 0.3j, 0.5)),
}

for name, m in CANDIDATES.items():
    rep = symmetry_report(m)
    print(f"--- {name}")
    print("    PT-symmetric:", rep.pt_symmetric)
    if rep.krein_xi is not None:
        tag = " (degenerate: every xi works)" if rep.xi_degenerate else ""
        print(f"    Krein involution angle xi = {rep.krein_xi:.6f}{tag}")
    if rep.c_params is not None:
        print(f"    C-operator presentation: xi = {rep.c_params.xi:.6f}, "
              f"chi = {rep.c_params.chi:.6f}")
    print("    residuals:", {k: f"{v:.2e}" for k, v in rep.residuals.items()})
