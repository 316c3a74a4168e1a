"""Tests for boundary data: trig polynomials, sampling, transforms, IO."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abharmonic import (
    BoundaryFunction,
    DomainError,
    TrigPolynomial,
    boundary_from_csv,
    boundary_to_csv,
    derivative,
    fourier_coefficients,
    hilbert_transform,
    load_boundary,
    lp_norm,
    riesz_project,
    times_e_minus_it,
    times_eit,
    trig_from_json_dict,
    trig_to_json_dict,
)


def grid(n):
    return np.arange(n) * (2.0 * np.pi / n)


# -- trig polynomials ------------------------------------------------------


def test_trig_polynomial_drops_zero_coefficients():
    tp = TrigPolynomial({1: 0.0, 2: 3.0})
    assert tp.coeffs == {2: 3.0}
    assert tp.max_freq == 2
    assert TrigPolynomial({}).max_freq == 0


def test_trig_polynomial_evaluate():
    tp = TrigPolynomial({1: 1.0, -1: 1.0})
    for t in (0.0, 0.7, 2.5):
        assert tp.evaluate(t) == pytest.approx(2.0 * math.cos(t), abs=1e-14)


def test_trig_polynomial_derivative():
    tp = TrigPolynomial({2: 1.0, 0: 5.0})
    d = tp.derivative()
    assert d.coeffs == {2: 2.0j}
    assert TrigPolynomial({0: 5.0}).derivative().coeffs == {}


def test_trig_polynomial_shift():
    tp = TrigPolynomial({1: 1.0, -2: 3.0})
    assert tp.shifted(1).coeffs == {2: 1.0, -1: 3.0}
    assert tp.shifted(-1).coeffs == {0: 1.0, -3: 3.0}


# -- boundary functions ----------------------------------------------------


def test_boundary_function_requires_power_of_two():
    with pytest.raises(DomainError):
        BoundaryFunction(np.zeros(1000, dtype=complex))
    with pytest.raises(DomainError):
        BoundaryFunction(np.zeros(2, dtype=complex))


def test_boundary_function_checks_exact_consistency():
    tp = TrigPolynomial({1: 1.0})
    good = np.exp(1j * grid(64))
    BoundaryFunction(good, exact=tp)
    with pytest.raises(DomainError):
        BoundaryFunction(good + 0.01, exact=tp)


def test_boundary_function_nyquist_guard():
    # 8 samples cannot resolve frequency 4
    with pytest.raises(DomainError):
        BoundaryFunction.from_trig(TrigPolynomial({4: 1.0}), n=8)


def test_values_on_grid_upsampling_exact_path():
    f = BoundaryFunction.from_trig(TrigPolynomial({3: 1.0}), n=16)
    vals = f.values_on_grid(64)
    assert np.max(np.abs(vals - np.exp(3j * grid(64)))) < 1e-12


def test_values_on_grid_upsampling_spectral_path():
    raw = BoundaryFunction(np.exp(3j * grid(16)))
    vals = raw.values_on_grid(64)
    assert np.max(np.abs(vals - np.exp(3j * grid(64)))) < 1e-12
    with pytest.raises(DomainError):
        raw.values_on_grid(8)


def test_from_callable_matches_samples():
    f = BoundaryFunction.from_callable(lambda t: math.cos(t), n=32)
    assert np.max(np.abs(f.samples - np.cos(grid(32)))) < 1e-14
    assert f.exact is None


# -- Fourier coefficients --------------------------------------------------


def test_fourier_coefficients_exact_path():
    f = BoundaryFunction.from_trig(TrigPolynomial({2: 1.0, -1: 0.5j}))
    tp = fourier_coefficients(f, 4)
    assert tp.coeffs == {2: 1.0, -1: 0.5j}
    # a kmax cut drops higher frequencies entirely
    assert fourier_coefficients(f, 1).coeffs == {-1: 0.5j}


def test_fourier_coefficients_sampled_path():
    f = BoundaryFunction(np.exp(2j * grid(128)))
    tp = fourier_coefficients(f, 5)
    assert abs(tp.coeffs[2] - 1.0) < 1e-12
    # the FFT route keeps rounding-level junk in the other bins
    others = [v for k, v in tp.coeffs.items() if k != 2]
    assert max(abs(v) for v in others) < 1e-13


def test_fourier_coefficients_kmax_guard():
    f = BoundaryFunction(np.ones(64, dtype=complex))
    with pytest.raises(DomainError):
        fourier_coefficients(f, 32)
    with pytest.raises(DomainError):
        fourier_coefficients(f, -1)


@given(
    st.dictionaries(
        st.integers(-6, 6),
        st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False),
        max_size=5,
    )
)
@settings(max_examples=40, deadline=None)
def test_fourier_round_trip_property(coeffs):
    tp = TrigPolynomial(coeffs)
    raw = BoundaryFunction(tp.evaluate(grid(64)))  # sampled path only
    back = fourier_coefficients(raw, 6)
    for k in range(-6, 7):
        want = tp.coeffs.get(k, 0.0)
        got = back.coeffs.get(k, 0.0)
        assert abs(got - want) < 1e-10


# -- pointwise transforms --------------------------------------------------


def test_derivative_of_modes():
    f = BoundaryFunction.from_trig(TrigPolynomial({3: 1.0}))
    d = derivative(f)
    assert d.exact.coeffs == {3: 3.0j}
    const = derivative(BoundaryFunction.from_trig(TrigPolynomial({0: 2.0})))
    assert np.max(np.abs(const.samples)) == 0.0


def test_derivative_spectral_path():
    raw = BoundaryFunction(np.cos(grid(128)))
    d = derivative(raw)
    assert np.max(np.abs(d.samples + np.sin(grid(128)))) < 1e-12


def test_modulation_shifts():
    one = BoundaryFunction.from_trig(TrigPolynomial({0: 1.0}))
    up = times_eit(one)
    assert up.exact.coeffs == {1: 1.0}
    assert np.max(np.abs(up.samples - np.exp(1j * up.grid()))) < 1e-14
    back = times_e_minus_it(up)
    assert back.exact.coeffs == {0: 1.0}


def test_lp_norm_values():
    rot = BoundaryFunction.from_trig(TrigPolynomial({1: 1.0}))
    assert lp_norm(rot, 2.0) == pytest.approx(1.0, rel=1e-12)
    assert lp_norm(rot, math.inf) == pytest.approx(1.0, rel=1e-12)
    cos = BoundaryFunction.from_trig(TrigPolynomial({1: 0.5, -1: 0.5}))
    assert lp_norm(cos, 2.0) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-10)
    # grid mean of |cos| carries one aliased term of size 4/(pi (n^2 - 1))
    assert lp_norm(cos, 1.0) == pytest.approx(2.0 / math.pi, rel=1e-4)
    with pytest.raises(DomainError):
        lp_norm(rot, 0.5)


# -- conjugation operators -------------------------------------------------


def test_hilbert_transform_of_modes():
    cos = BoundaryFunction.from_trig(TrigPolynomial({1: 0.5, -1: 0.5}))
    h = hilbert_transform(cos)
    assert np.max(np.abs(h.samples - np.sin(h.grid()))) < 1e-12
    const = hilbert_transform(BoundaryFunction.from_trig(TrigPolynomial({0: 3.0})))
    assert np.max(np.abs(const.samples)) == 0.0


def test_hilbert_transform_involution(rng):
    coeffs = {k: complex(rng.normal(), rng.normal()) for k in range(-5, 6)}
    coeffs = {k: v for k, v in coeffs.items() if k != 0}
    # make the samples real so the classical involution identity applies
    real_coeffs = {}
    for k, v in coeffs.items():
        real_coeffs[k] = real_coeffs.get(k, 0.0) + 0.5 * v
        real_coeffs[-k] = real_coeffs.get(-k, 0.0) + 0.5 * v.conjugate()
    f = BoundaryFunction.from_trig(TrigPolynomial(real_coeffs))
    hh = hilbert_transform(hilbert_transform(f))
    assert np.max(np.abs(hh.samples + f.samples)) < 1e-10  # mean is zero here


def test_analytic_signal_identity():
    # u + i H(u) + mean(u) = 2 * (projection onto nonnegative modes)
    tp = TrigPolynomial({0: 0.3, 1: 0.5, -1: 0.5, 2: -0.25j, -2: 0.25j})
    u = BoundaryFunction.from_trig(tp)
    proj = riesz_project(u)
    lhs = (
        u.samples
        + 1j * hilbert_transform(u).samples
        + np.mean(u.samples)
    )
    rhs = 2.0 * proj.evaluate(u.grid())
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_riesz_project_examples():
    down = BoundaryFunction.from_trig(TrigPolynomial({-1: 1.0}))
    assert riesz_project(down).coeffs == {}
    cos2 = BoundaryFunction.from_trig(TrigPolynomial({1: 1.0, -1: 1.0}))
    assert riesz_project(cos2).coeffs == {1: 1.0}


# -- serialisation ---------------------------------------------------------


def test_trig_json_round_trip():
    tp = TrigPolynomial({2: 1.0 + 0.5j, -1: -0.25})
    back = trig_from_json_dict(trig_to_json_dict(tp))
    assert back.coeffs == tp.coeffs


def test_csv_round_trip(tmp_path):
    f = BoundaryFunction.from_trig(TrigPolynomial({1: 1.0, -2: 0.5j}), n=64)
    path = tmp_path / "data.csv"
    boundary_to_csv(f, path)
    back = boundary_from_csv(path)
    assert back.n == 64
    assert np.array_equal(back.samples, f.samples)


def test_csv_two_column_real_data(tmp_path):
    thetas = grid(8)
    lines = ["theta,re"] + [f"{t},{math.cos(t)}" for t in thetas]
    path = tmp_path / "real.csv"
    path.write_text("\n".join(lines) + "\n")
    f = boundary_from_csv(path)
    assert np.max(np.abs(f.samples - np.cos(thetas))) < 1e-12


def test_csv_rejects_bad_grids(tmp_path):
    path = tmp_path / "bad.csv"
    # non power of two row count
    rows = [f"{t},1.0" for t in grid(8)[:6]]
    path.write_text("\n".join(rows) + "\n")
    with pytest.raises(DomainError):
        boundary_from_csv(path)
    # jittered grid
    thetas = grid(8).copy()
    thetas[3] += 1e-4
    path.write_text("\n".join(f"{t},1.0" for t in thetas) + "\n")
    with pytest.raises(DomainError):
        boundary_from_csv(path)


def test_load_boundary_dispatch(tmp_path):
    tp = TrigPolynomial({1: 2.0})
    jpath = tmp_path / "f.json"
    jpath.write_text(json.dumps(trig_to_json_dict(tp)))
    f = load_boundary(jpath, n=32)
    assert f.exact.coeffs == {1: 2.0}
    assert f.n == 32

    cpath = tmp_path / "f.csv"
    boundary_to_csv(BoundaryFunction.from_trig(tp, n=16), cpath)
    g = load_boundary(cpath)
    assert g.n == 16
