#!/usr/bin/env python3
"""Tour of the Clifford-algebra building blocks.

Everything on the two-dimensional boundary space is generated by two
anti-commuting unitary involutions, represented here by Pauli matrices
(P = sigma_3, R = sigma_1).  This script builds the rotated involutions
P_xi, the C-operators and the positive metric, and checks their defining
identities numerically.
"""

import numpy as np

from ptscatter import (SIGMA0, SIGMA1, KreinMetricParams, c_operator,
                       hermitian_eigenvalues, is_unitary_involution, metric,
                       operator_norm, p_xi, pauli_compose, pauli_decompose)

np.set_printoptions(precision=4, suppress=True)

print("=== Pauli composition ===")
m = pauli_compose((0.5, 1.0, 2j, -0.25))
print("0.5 I + 1.0 P + 2i R - 0.25 iRP =\n", m)
c = pauli_decompose(m)
print("decomposed back:", c.a0, c.a1, c.a2, c.a3)

print("\n=== The involution family P_xi ===")
for xi in (0.0, np.pi / 4, np.pi / 2):
    j = p_xi(xi)
    print(f"xi = {xi:.4f}: P_xi =\n{j}")
    print("  unitary involution:", is_unitary_involution(j))
    print("  anti-commutes with R:", operator_norm(j @ SIGMA1 + SIGMA1 @ j) < 1e-14)

print("\n=== C-operators and the metric ===")
params = KreinMetricParams(xi=0.7, chi=1.2)
C = c_operator(params)
G = metric(params)
print("C =\n", C)
print("C^2 - I residual:", operator_norm(C @ C - SIGMA0))
print("metric G =\n", G)
lo, hi = hermitian_eigenvalues(G)
print(f"metric eigenvalues: {lo:.6f}, {hi:.6f}  (= e^-chi, e^+chi)")
print("G @ C recovers P_xi:", operator_norm(G @ C - p_xi(params.xi)) < 1e-14)
