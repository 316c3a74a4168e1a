# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot numerical loops.

Mirrors ``_purepy``: same term recurrences, same stop rule, same node
placement.  Kahan compensation is used in the long summations.
"""

import numpy as np

from libc.math cimport atan2, cos, exp, fabs, log, pow, sin

cdef double REL_TOL = 1e-15
cdef double TWO_PI = 6.283185307179586476925287


def hyp2f1_sum(double a, double b, double c, double x, long max_terms):
    """Direct Gauss series summation.  Returns (value, converged)."""
    cdef double total = 1.0
    cdef double comp = 0.0
    cdef double term = 1.0
    cdef double y, t
    cdef long n = 0
    cdef int run = 0
    if x == 0.0:
        return 1.0, True
    while n < max_terms:
        term *= (a + n) * (b + n) * x / ((c + n) * (n + 1.0))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if fabs(term) < REL_TOL * fabs(total):
            run += 1
            if run >= 3:
                return total, True
        else:
            run = 0
        n += 1
    return total, False


def hyp2f1_terminating(double a, double b, double c, double x, long m):
    """Exact polynomial case: m+1 nonzero terms, evaluated by Horner."""
    cdef double[::1] coeffs = np.empty(m + 1)
    cdef double t = 1.0
    cdef double v = 0.0
    cdef long n
    coeffs[0] = 1.0
    for n in range(m):
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0))
        coeffs[n + 1] = t
    for n in range(m, -1, -1):
        v = v * x + coeffs[n]
    return v


def kernel_row(double alpha, double beta, double complex z, double[::1] thetas):
    """Weighted kernel K(z e^{-i theta}) on a grid of angles."""
    cdef Py_ssize_t n = thetas.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double zr = z.real
    cdef double zi = z.imag
    cdef double rho2 = zr * zr + zi * zi
    cdef double base = pow(1.0 - rho2, alpha + beta + 1.0)
    cdef double ea = -(alpha + 1.0)
    cdef double eb = -(beta + 1.0)
    cdef double ct, st, wr, wi, m2, ang, mag, ph
    cdef Py_ssize_t j
    for j in range(n):
        ct = cos(thetas[j])
        st = sin(thetas[j])
        wr = zr * ct + zi * st
        wi = zi * ct - zr * st
        # (1-w)^ea * conj(1-w)^eb with 1-w = m e^{i ang}
        m2 = (1.0 - wr) * (1.0 - wr) + wi * wi
        ang = atan2(-wi, 1.0 - wr)
        mag = base * pow(m2, 0.5 * (ea + eb))
        ph = ang * (ea - eb)
        ov[j] = mag * cos(ph) + 1j * (mag * sin(ph))
    return out


def i_lambda_quad(double lam, double r, long n):
    """Trapezoid mean of (1-r^2)^lam / |1 - r e^{-i theta}|^(lam+1)."""
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double step = TWO_PI / n
    cdef double e = -(lam + 1.0) / 2.0
    cdef double r2 = r * r
    cdef double q, y, t
    cdef long j
    for j in range(n):
        q = 1.0 - 2.0 * r * cos(step * j) + r2
        y = pow(q, e) - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return pow(1.0 - r2, lam) * s / n
