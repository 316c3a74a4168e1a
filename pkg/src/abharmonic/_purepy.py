"""Numpy implementations of the hot numerical loops.

Selected when the compiled extension is unavailable.  Semantics match
``_accel`` up to normal floating-point reassociation: the same term
recurrences, the same stop rule, the same node placement.
"""
from __future__ import annotations

import numpy as np

REL_TOL = 1e-15
SMALL_RUN = 3  # consecutive negligible terms required before stopping
_BLOCK = 16384


def hyp2f1_sum(a, b, c, x, max_terms):
    """Direct Gauss series summation.  Returns (value, converged)."""
    if x == 0.0:
        return 1.0, True
    total = 1.0
    term = 1.0
    n0 = 0
    run = 0
    while n0 < max_terms:
        m = min(_BLOCK, max_terms - n0)
        n = np.arange(n0, n0 + m, dtype=np.float64)
        ratio = (a + n) * (b + n) * x / ((c + n) * (n + 1.0))
        terms = term * np.cumprod(ratio)
        partial = total + np.cumsum(terms)
        small = np.abs(terms) < REL_TOL * np.abs(partial)
        # stop at the first run of SMALL_RUN consecutive small terms,
        # carrying the run across block boundaries
        prev = np.array([run >= 2, run >= 1], dtype=bool)
        ext = np.concatenate((prev, small))
        hits = np.flatnonzero(ext[2:] & ext[1:-1] & ext[:-2])
        if hits.size:
            return float(partial[hits[0]]), True
        total = float(partial[-1])
        term = float(terms[-1])
        off = np.flatnonzero(~small)
        run = (m - 1 - int(off[-1])) if off.size else run + m
        n0 += m
    return total, False


def hyp2f1_terminating(a, b, c, x, m):
    """Exact polynomial case: m+1 nonzero terms, evaluated by Horner."""
    coeffs = np.empty(m + 1)
    coeffs[0] = 1.0
    t = 1.0
    for n in range(m):
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0))
        coeffs[n + 1] = t
    v = 0.0
    for cn in coeffs[::-1]:
        v = v * x + cn
    return float(v)


def kernel_row(alpha, beta, z, thetas):
    """Weighted kernel K(z e^{-i theta}) on a grid of angles."""
    z = complex(z)
    w = z * np.exp(-1j * np.asarray(thetas, dtype=np.float64))
    rho2 = z.real * z.real + z.imag * z.imag
    omw = 1.0 - w
    return (
        (1.0 - rho2) ** (alpha + beta + 1.0)
        * omw ** (-(alpha + 1.0))
        * np.conj(omw) ** (-(beta + 1.0))
    )


def i_lambda_quad(lam, r, n):
    """Trapezoid mean of (1-r^2)^lam / |1 - r e^{-i theta}|^(lam+1)."""
    theta = np.arange(n) * (2.0 * np.pi / n)
    q = 1.0 - 2.0 * r * np.cos(theta) + r * r
    return float((1.0 - r * r) ** lam * np.mean(q ** (-(lam + 1.0) / 2.0)))
