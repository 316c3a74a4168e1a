"""Shared fixtures for the test suite."""

import numpy as np
import pytest

from abharmonic import BoundaryFunction, TrigPolynomial


@pytest.fixture
def make_trig():
    """Build a TrigPolynomial from a {frequency: coefficient} dict."""

    def build(coeffs):
        return TrigPolynomial({int(k): complex(v) for k, v in coeffs.items()})

    return build


@pytest.fixture
def make_boundary(make_trig):
    """Build an exact-backed BoundaryFunction from a coefficient dict."""

    def build(coeffs, n=256):
        return BoundaryFunction.from_trig(make_trig(coeffs), n=n)

    return build


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
