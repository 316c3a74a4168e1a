"""Cross-checks between the compiled core and the numpy fallback."""

import importlib.util
import os
import subprocess
import sys

import numpy as np
import pytest

from abharmonic import BACKEND
from abharmonic import _purepy

HAVE_COMPILED = importlib.util.find_spec("abharmonic._accel") is not None
needs_compiled = pytest.mark.skipif(
    not HAVE_COMPILED, reason="compiled extension not built"
)


def test_backend_reports_active_choice():
    assert BACKEND in ("compiled", "fallback")
    forced = os.environ.get("ABHARMONIC_BACKEND", "")
    if forced:
        assert BACKEND == forced
    elif HAVE_COMPILED:
        assert BACKEND == "compiled"  # preferred when available


@needs_compiled
def test_hyp2f1_sum_agrees():
    from abharmonic import _accel

    cases = [
        (0.3, -1.2, 1.7, 0.56),
        (1.0, 1.0, 2.0, 0.9),
        (0.25, 0.25, 1.0, 0.999),
        (-0.5, 2.5, 1.3, 0.1),
    ]
    for a, b, c, x in cases:
        vc, okc = _accel.hyp2f1_sum(a, b, c, x, 10_000_000)
        vp, okp = _purepy.hyp2f1_sum(a, b, c, x, 10_000_000)
        assert okc and okp
        assert vc == pytest.approx(vp, rel=1e-12)


@needs_compiled
def test_hyp2f1_terminating_agrees():
    from abharmonic import _accel

    for a, b, c, x, m in [(-3.0, 1.7, 2.2, 0.35, 3), (2.5, -2.0, 1.3, 0.8, 2)]:
        assert _accel.hyp2f1_terminating(a, b, c, x, m) == pytest.approx(
            _purepy.hyp2f1_terminating(a, b, c, x, m), rel=1e-14
        )


@needs_compiled
def test_kernel_row_agrees():
    from abharmonic import _accel

    thetas = np.arange(64) * (2.0 * np.pi / 64)
    for alpha, beta, z in [(1.0, 1.0, 0.5 + 0.3j), (2.0, -0.5, 0.9j), (-0.25, -0.25, 0.85)]:
        rc = np.asarray(_accel.kernel_row(alpha, beta, z, thetas))
        rp = np.asarray(_purepy.kernel_row(alpha, beta, z, thetas))
        assert np.max(np.abs(rc - rp)) < 1e-10 * np.max(np.abs(rp))


@needs_compiled
def test_i_lambda_quad_agrees():
    from abharmonic import _accel

    for lam, r in [(1.0, 0.5), (2.0, 0.99), (-0.7, 0.9)]:
        assert _accel.i_lambda_quad(lam, r, 4096) == pytest.approx(
            _purepy.i_lambda_quad(lam, r, 4096), rel=1e-12
        )


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env["ABHARMONIC_BACKEND"] = env_value
    proc = subprocess.run(
        [sys.executable, "-c", "import abharmonic; print(abharmonic.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


def test_env_var_forces_fallback():
    assert _backend_in_subprocess("fallback") == "fallback"


@needs_compiled
def test_env_var_forces_compiled():
    assert _backend_in_subprocess("compiled") == "compiled"
