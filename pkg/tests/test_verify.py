"""The composite suites: sampling, expected-outcome logic and determinism."""

import numpy as np
import pytest

from ptscatter import (classify_nonnegative, draw_extension_params,
                       extension_params, formula_equivalence_residual,
                       lower_half_plane_grid, mobius_round_trip_residuals,
                       quadratic_eigenvalue_residual, run_parameter_suite,
                       run_random_suite, t_from_betas)
from ptscatter.errors import ArgumentError


def test_draws_respect_region_and_margins():
    rng = np.random.default_rng(50)
    for _ in range(200):
        e = draw_extension_params(rng, admissible=True)
        assert classify_nonnegative(e).nonnegative
        e = draw_extension_params(rng, admissible=False)
        assert not classify_nonnegative(e).nonnegative
    for _ in range(100):
        e = draw_extension_params(rng, admissible=True, min_beta1=0.05, min_chi=0.5)
        assert abs(e.beta1) >= 0.05 and abs(e.metric.chi) >= 0.5
        assert classify_nonnegative(e).nonnegative
    with pytest.raises(ArgumentError):
        draw_extension_params(rng, min_beta1=0.3)


def test_residual_helpers_are_small_for_betas_family():
    rng = np.random.default_rng(51)
    grid = lower_half_plane_grid()
    for _ in range(30):
        e = draw_extension_params(rng, admissible=bool(rng.random() < 0.5))
        recovery, spread = mobius_round_trip_residuals(t_from_betas(e))
        assert recovery <= 1e-10 and spread <= 1e-10
        assert quadratic_eigenvalue_residual(e) <= 1e-10
    # the two S routes agree to 1e-12 where the denominator is well
    # conditioned; admissible parameters keep it so on the whole grid
    for _ in range(30):
        e = draw_extension_params(rng, admissible=True)
        assert formula_equivalence_residual(e, grid) <= 1e-12


def test_parameter_suite_admissible_is_consistent():
    suite = run_parameter_suite(extension_params(0.25, 0.2, chi=1.0, xi=0.0))
    assert suite["consistent"]
    assert suite["classification"]["nonnegative"]
    assert suite["metric_inequality"]
    assert suite["checks"]["condition_a"]["passed"]
    assert suite["contraction_witness_found"]


def test_parameter_suite_inadmissible_is_still_consistent():
    suite = run_parameter_suite(extension_params(0.25, 0.3, chi=1.0, xi=0.0))
    assert suite["consistent"]
    assert not suite["classification"]["nonnegative"]
    assert not suite["metric_inequality"]
    entry = suite["checks"]["condition_a"]
    assert not entry["passed"] and not entry["expected_pass"] and entry["consistent"]
    for name in ("condition_b", "condition_c", "condition_d", "pt_criterion"):
        assert suite["checks"][name]["passed"]


def test_parameter_suite_scalar_family_has_contraction_bound():
    suite = run_parameter_suite(extension_params(0.3, 0.0, chi=0.0, xi=0.0))
    assert suite["consistent"]
    assert suite["checks"]["contraction_bound"]["passed"]


def test_random_suite_consistent_and_deterministic():
    a = run_random_suite(16, seed=123)
    b = run_random_suite(16, seed=123)
    assert a == b
    assert a["all_consistent"]
    assert a["consistent_draws"] == 16
    assert a["first_violation"] is None
    c = run_random_suite(16, seed=124)
    assert c != a
