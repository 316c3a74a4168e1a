"""Acceptance gate: the thirteen primary verification criteria.

Each test runs one named check of the verification suite at seed 0 and
emits exactly one pass/fail line; the numeric tolerances are the ones
the checks themselves enforce (see abharmonic.verify).
"""

import pytest

from abharmonic.verify import CHECK_NAMES, run_all


@pytest.fixture(scope="module")
def reports():
    return {rep["name"]: rep for rep in run_all(seed=0)}


def _gate(reports, idx, name):
    rep = reports[name]
    status = "PASS" if rep["passed"] else "FAIL"
    print(f"criterion {idx:02d} {status} {name}: {rep['details']}")
    assert rep["passed"], f"criterion {idx:02d} {name}: {rep['details']}"


def test_criteria_cover_the_whole_suite():
    assert len(CHECK_NAMES) == 13


def test_criterion_01_hypergeometric_identities(reports):
    """Euler transform to 1e-10 relative, series derivative to 1e-6 vs FD."""
    _gate(reports, 1, "hypergeometric-identities")


def test_criterion_02_gauss_limit(reports):
    """Gamma-formula boundary value to 1e-3 relative; log slope within 5%."""
    _gate(reports, 2, "gauss-limit")


def test_criterion_03_kernel_normalization(reports):
    """Unit mass to 1e-8; integral-mean bounds with slack >= -1e-6;
    radial mass limit within 5e-3."""
    _gate(reports, 3, "kernel-normalization")


def test_criterion_04_two_route_extension(reports):
    """Series and quadrature extensions agree to 1e-7 for |z| <= 0.9."""
    _gate(reports, 4, "two-route-extension")


def test_criterion_05_derivative_triangle(reports):
    """Closed-form Wirtinger derivatives vs finite differences (1e-5),
    kernel-route decompositions (1e-6), angular identity (1e-6)."""
    _gate(reports, 5, "derivative-triangle")


def test_criterion_06_angular_derivative_bound(reports):
    """Mean bound slack >= -1e-6 across the corpus; sharp attainment case
    matches its bound to 1e-9."""
    _gate(reports, 6, "angular-derivative-bound")


def test_criterion_07_derivative_hardy_bound(reports):
    """Radial and uniform derivative bounds hold with slack >= -1e-6."""
    _gate(reports, 7, "derivative-hardy-bound")


def test_criterion_08_blowup_witness(reports):
    """Witness growth exponent within 0.05 of alpha+beta; means grow by
    a factor >= 2 toward the boundary."""
    _gate(reports, 8, "blowup-witness")


def test_criterion_09_membership_table(reports):
    """Twelve-row verdict matrix reproduced exactly and deterministically."""
    _gate(reports, 9, "membership-table")


def test_criterion_10_polyharmonic_decomposition(reports):
    """Integer-order split reconstructs to 1e-10 with residual <= 1e-3."""
    _gate(reports, 10, "polyharmonic-decomposition")


def test_criterion_11_operator_annihilation(reports):
    """Weighted operator annihilates kernels, modes and extensions to 1e-3."""
    _gate(reports, 11, "operator-annihilation")


def test_criterion_12_quasiregular_bound(reports):
    """Distortion-weighted derivative bound holds with slack >= -1e-6."""
    _gate(reports, 12, "quasiregular-bound")


def test_criterion_13_radial_weight_reduction(reports):
    """Half-weight parameter mapping reproduces membership, rigidity and
    witness growth for the radially weighted operator."""
    _gate(reports, 13, "radial-weight-reduction")
