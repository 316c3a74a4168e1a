"""Real-argument Gamma, Pochhammer symbols, and the Gauss hypergeometric
series with its transformation, derivative, and boundary-limit rules.

Everything here is scalar and deterministic.  The series engine lives in
the backend (compiled or numpy); this module owns parameter snapping,
route selection, and the Gamma-quotient limit formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import DomainError, NoConvergence, PoleError

SNAP_TOL = 1e-12  # integer detection tolerance for parameters

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def snap_nonpositive_int(x: float, tol: float = SNAP_TOL):
    """Return the nearest integer if x is within tol of an integer <= 0."""
    r = round(x)
    if r <= 0 and abs(x - r) < tol:
        return int(r)
    return None


def gamma(x: float) -> float:
    """Gamma(x) by the Lanczos approximation, reflection for x < 0.5.

    Raises PoleError at (within SNAP_TOL of) zero and negative integers.
    """
    if snap_nonpositive_int(x) is not None:
        raise PoleError(f"gamma pole at x={x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    xx = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (xx + i)
    t = xx + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (xx + 0.5) * math.exp(-t) * acc


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n by direct product; exact zeros are preserved."""
    if n < 0:
        raise DomainError(f"pochhammer order must be >= 0, got {n}")
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


@dataclass(frozen=True)
class HypParams:
    """Parameter triple (a, b, c) of the Gauss series.

    c must not be zero or a negative integer, otherwise the series is
    undefined from some term onward.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if snap_nonpositive_int(self.c) is not None:
            raise DomainError(
                f"hypergeometric c={self.c} is zero or a negative integer"
            )


_BASE_CAP = 100_000
_HARD_CAP = 100_000_000


def _series_cap(x: float) -> int:
    # Close to x=1 the tail decays only through x^n, so the default cap is
    # scaled with 1/(1-x) (convergence there needs ~ -ln(tol)/(1-x) terms).
    if x <= 0.99:
        return _BASE_CAP
    return max(_BASE_CAP, min(_HARD_CAP, int(60.0 / (1.0 - x)) + _BASE_CAP))


def terminating_order(a: float, b: float):
    """Series length minus one when a or b snaps to an integer <= 0."""
    ra = snap_nonpositive_int(a)
    rb = snap_nonpositive_int(b)
    if ra is None and rb is None:
        return None
    return min(-r for r in (ra, rb) if r is not None)


def hyp2f1_raw(a: float, b: float, c: float, x: float) -> float:
    """Series evaluation without parameter validation (c assumed valid)."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"hyp2f1 argument x={x} outside [0, 1)")
    m = terminating_order(a, b)
    if m is not None:
        ra = snap_nonpositive_int(a)
        rb = snap_nonpositive_int(b)
        aa = float(ra) if ra is not None else a
        bb = float(rb) if rb is not None else b
        return _backend.hyp2f1_terminating(aa, bb, c, x, m)
    s = c - a - b
    if s < 0.0 and x > 0.9:
        # the transformed series has positive parameter excess -s and is
        # numerically stable where the direct one blows up term-wise
        return (1.0 - x) ** s * hyp2f1_raw(c - a, c - b, c, x)
    val, ok = _backend.hyp2f1_sum(a, b, c, x, _series_cap(x))
    if not ok:
        raise NoConvergence(
            f"hypergeometric series ({a}, {b}; {c}) at x={x} did not meet the "
            f"stop rule within {_series_cap(x)} terms"
        )
    return val


def hyp2f1(p: HypParams, x: float) -> float:
    """Gauss series F(a, b; c; x) on 0 <= x < 1.

    Terminating cases (a or b within SNAP_TOL of an integer <= 0) are
    summed exactly by Horner.  Otherwise the series stops once three
    consecutive terms are below 1e-15 of the partial sum; with negative
    parameter excess c-a-b and x > 0.9 the Euler-transformed series is
    summed instead.
    """
    return hyp2f1_raw(p.a, p.b, p.c, x)


def euler_transform(p: HypParams, x: float) -> float:
    """(1-x)^(c-a-b) * F(c-a, c-b; c; x); equals hyp2f1 on [0, 1)."""
    if not 0.0 <= x < 1.0:
        raise DomainError(f"euler_transform argument x={x} outside [0, 1)")
    s = p.c - p.a - p.b
    return (1.0 - x) ** s * hyp2f1(HypParams(p.c - p.a, p.c - p.b, p.c), x)


def hyp2f1_derivative(p: HypParams, x: float) -> float:
    """d/dx F(a, b; c; x) = (a b / c) F(a+1, b+1; c+1; x)."""
    return p.a * p.b / p.c * hyp2f1(HypParams(p.a + 1.0, p.b + 1.0, p.c + 1.0), x)


def hyp2f1_at_one(p: HypParams) -> float:
    """Limit of F(a, b; c; x) as x -> 1, requiring c - a - b > 0.

    Returns exactly 0.0 when a denominator Gamma sits on a pole (c-a or
    c-b a non-positive integer); downstream coefficient recovery branches
    on that zero.
    """
    s = p.c - p.a - p.b
    if s <= 0.0:
        raise DomainError(f"boundary limit needs c-a-b > 0, got {s}")
    if (
        snap_nonpositive_int(p.c - p.a) is not None
        or snap_nonpositive_int(p.c - p.b) is not None
    ):
        return 0.0
    return gamma(p.c) * gamma(s) / (gamma(p.c - p.a) * gamma(p.c - p.b))


def gauss_log_coefficient(a: float, b: float) -> float:
    """Coefficient of log(1-x) in F(a, b; a+b; x) as x -> 1-.

    The balanced series diverges logarithmically; this is the leading
    coefficient -Gamma(a+b) / (Gamma(a) Gamma(b)).
    """
    return -gamma(a + b) / (gamma(a) * gamma(b))
