"""Harmonic extension of boundary data under the weighted disc operator.

Two independent routes are kept side by side on purpose:

* quadrature: u(z) = c * (1/N) sum K(z e^{-i theta_j}) f(theta_j), with the
  node count boosted near the boundary (poisson_extend);
* series: u(z) = sum_k c_k R_k(|z|^2) z^k + sum_k c_{-k} S_k(|z|^2) zbar^k,
  where the radial factors R_k, S_k are Gauss hypergeometric functions and
  the c_k are recovered from Fourier data (coeffs_from_boundary,
  eval_series).

The closed-form Wirtinger derivatives of the series, the kernel-form
decompositions of z du/dz and zbar du/dzbar, the circle means, a
finite-difference residual of the defining operator, and the graded
polynomial decomposition for integer first exponent all live here.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .boundary import (
    BoundaryFunction,
    TrigPolynomial,
    derivative,
    fourier_coefficients,
    times_e_minus_it,
    times_eit,
)
from .errors import (
    DegenerateCoefficient,
    DomainError,
    PreconditionFailed,
    StepTooLarge,
)
from .kernels import Params, as_point, c_alpha_beta, quadrature_count
from .special import HypParams, hyp2f1_at_one, hyp2f1_raw, pochhammer

COEFF_ZERO_TOL = 1e-10  # treat series coefficients below this as absent


@dataclass(frozen=True)
class Expansion:
    """Coefficients of the homogeneous series of an extension.

    Index k >= 0 multiplies R_k(|z|^2) z^k, index -k < 0 multiplies
    S_k(|z|^2) zbar^k.  Zero coefficients are dropped.
    """

    params: Params
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {
            int(k): complex(v) for k, v in self.coeffs.items() if complex(v) != 0
        }
        object.__setattr__(self, "coeffs", clean)

    def items_sorted(self):
        return sorted(self.coeffs.items())

    @property
    def bandwidth(self) -> int:
        return max((abs(k) for k in self.coeffs), default=0)


# -- radial factors --------------------------------------------------------


def _hyp_pos(p: Params, k: int, x: float) -> float:
    return hyp2f1_raw(-p.alpha, k - p.beta, k + 1.0, x)


def _hyp_neg(p: Params, k: int, x: float) -> float:
    return hyp2f1_raw(-p.beta, k - p.alpha, k + 1.0, x)


def _hyp_pos_d(p: Params, k: int, x: float) -> float:
    # derivative factor after the Euler rewrite; paired with (1-x)^(a+b)
    return hyp2f1_raw(k + p.alpha + 1.0, p.beta + 1.0, k + 2.0, x)


def _hyp_neg_d(p: Params, k: int, x: float) -> float:
    return hyp2f1_raw(k + p.beta + 1.0, p.alpha + 1.0, k + 2.0, x)


# -- coefficient recovery --------------------------------------------------


def coeffs_from_boundary(p: Params, fhat: TrigPolynomial) -> Expansion:
    """Series coefficients from Fourier data.

    c_k = fhat(k) / R_k(1) and c_{-k} = fhat(-k) / S_k(1), the radial
    factors at the boundary being Gamma quotients.  A zero denominator
    against a nonzero fhat raises DegenerateCoefficient; zero over zero
    is taken as zero (absent coefficients never reach the division).
    """
    p.require_poisson()
    out = {}
    for k, v in fhat.items_sorted():
        if k >= 0:
            denom = hyp2f1_at_one(HypParams(-p.alpha, k - p.beta, k + 1.0))
        else:
            m = -k
            denom = hyp2f1_at_one(HypParams(-p.beta, m - p.alpha, m + 1.0))
        if denom == 0.0:
            raise DegenerateCoefficient(
                f"boundary mode {k} has nonzero data {v} but a vanishing "
                f"radial factor at the boundary"
            )
        out[k] = v / denom
    return Expansion(p, out)


# -- quadrature route ------------------------------------------------------


def _extension_grid(f: BoundaryFunction, r: float) -> int:
    target = max(f.n, 1024)
    if r > 0.9:
        target = max(target, quadrature_count(r))
    return 1 << (target - 1).bit_length()  # power of two for resampling


def poisson_extend(p: Params, f: BoundaryFunction, z) -> complex:
    """Quadrature evaluation of the normalised kernel integral."""
    p.require_poisson()
    zp = as_point(z)
    n = _extension_grid(f, zp.r)
    vals = f.values_on_grid(n)
    thetas = np.arange(n) * (2.0 * np.pi / n)
    row = _backend.kernel_row(p.alpha, p.beta, zp.z, thetas)
    return c_alpha_beta(p) * complex(np.mean(row * vals))


def _kernel_quadrature(a: float, b: float, f: BoundaryFunction, zp, n: int) -> complex:
    """(1/N) sum K_{a,b}(z e^{-i theta_j}) f_j for raw exponents (a, b)."""
    vals = f.values_on_grid(n)
    thetas = np.arange(n) * (2.0 * np.pi / n)
    row = _backend.kernel_row(a, b, zp.z, thetas)
    return complex(np.mean(row * vals))


# -- series route ----------------------------------------------------------


def eval_series(e: Expansion, z) -> complex:
    """Pointwise evaluation of the homogeneous series."""
    p = e.params
    z = as_point(z).z
    zb = z.conjugate()
    w = (z * zb).real
    total = 0j
    for k, c in e.items_sorted():
        if k >= 0:
            total += c * _hyp_pos(p, k, w) * z**k
        else:
            m = -k
            total += c * _hyp_neg(p, m, w) * zb**m
    return total


def dz_series(e: Expansion, z) -> complex:
    """Term-wise d/dz of the series, via the closed derivative forms."""
    p = e.params
    z = as_point(z).z
    zb = z.conjugate()
    w = (z * zb).real
    base = (1.0 - w) ** p.total
    total = 0j
    for k, c in e.items_sorted():
        if k >= 0:
            t = (
                c
                * (-p.alpha)
                * (k - p.beta)
                / (k + 1.0)
                * base
                * _hyp_pos_d(p, k, w)
                * zb
                * z**k
            )
            if k >= 1:
                t += k * c * _hyp_pos(p, k, w) * z ** (k - 1)
        else:
            m = -k
            t = (
                c
                * (-p.beta)
                * (m - p.alpha)
                / (m + 1.0)
                * base
                * _hyp_neg_d(p, m, w)
                * zb ** (m + 1)
            )
        total += t
    return total


def dzbar_series(e: Expansion, z) -> complex:
    """Term-wise d/dzbar of the series (conjugate mirror of dz_series)."""
    p = e.params
    z = as_point(z).z
    zb = z.conjugate()
    w = (z * zb).real
    base = (1.0 - w) ** p.total
    total = 0j
    for k, c in e.items_sorted():
        if k >= 0:
            t = (
                c
                * (-p.alpha)
                * (k - p.beta)
                / (k + 1.0)
                * base
                * _hyp_pos_d(p, k, w)
                * z ** (k + 1)
            )
        else:
            m = -k
            t = (
                c
                * (-p.beta)
                * (m - p.alpha)
                / (m + 1.0)
                * base
                * _hyp_neg_d(p, m, w)
                * z
                * zb**m
            )
            if m >= 1:
                t += m * c * _hyp_neg(p, m, w) * zb ** (m - 1)
        total += t
    return total


def dtheta(p: Params, f: BoundaryFunction, z) -> complex:
    """Angular derivative of the extension: the extension of df/dtheta."""
    return poisson_extend(p, derivative(f), z)


# -- kernel-form derivative decompositions ---------------------------------


def zdz_decomposition(p: Params, f: BoundaryFunction, z) -> complex:
    """z du/dz via shifted-kernel quadratures:

        z du/dz = -i c ( K_{a,b-1}[f'] + i b zbar K_{a-1,b}[e^{it} f] ),

    with f' = df/dtheta and K_{.,.}[g] the unnormalised kernel quadrature.
    The shifted kernels lose one power of boundary decay, so quadrature
    error grows near |z| -> 1 when alpha + beta <= 0; accuracy is
    quoted for |z| <= 0.9.
    """
    p.require_poisson()
    zp = as_point(z)
    n = _extension_grid(f, zp.r)
    fdot = derivative(f)
    f1 = times_eit(f)
    t1 = _kernel_quadrature(p.alpha, p.beta - 1.0, fdot, zp, n)
    t2 = _kernel_quadrature(p.alpha - 1.0, p.beta, f1, zp, n)
    return -1j * c_alpha_beta(p) * (t1 + 1j * p.beta * zp.z.conjugate() * t2)


def zbar_dzbar_decomposition(p: Params, f: BoundaryFunction, z) -> complex:
    """zbar du/dzbar via shifted-kernel quadratures:

        zbar du/dzbar = i c ( K_{a-1,b}[f'] - i a z K_{a,b-1}[e^{-it} f] ).

    Conjugate mirror of zdz_decomposition: swapping the exponent pair and
    conjugating turns e^{it} f into e^{-it} f, which the modulation factor
    here reflects.
    """
    p.require_poisson()
    zp = as_point(z)
    n = _extension_grid(f, zp.r)
    fdot = derivative(f)
    fm1 = times_e_minus_it(f)
    t1 = _kernel_quadrature(p.alpha - 1.0, p.beta, fdot, zp, n)
    t2 = _kernel_quadrature(p.alpha, p.beta - 1.0, fm1, zp, n)
    return 1j * c_alpha_beta(p) * (t1 - 1j * p.alpha * zp.z * t2)


# -- circle means ----------------------------------------------------------


def circle_mean(u, n: int, r: float, num_nodes: int | None = None) -> complex:
    """(1/N) sum u(r e^{i theta_j}) e^{-in theta_j} over a uniform grid."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"circle_mean needs 0 <= r < 1, got {r}")
    if num_nodes is None:
        num_nodes = max(1024, 8 * (abs(n) + 1))
        if r > 0.9:
            num_nodes = max(num_nodes, quadrature_count(r))
    thetas = np.arange(num_nodes) * (2.0 * np.pi / num_nodes)
    vals = _values_on_circle(u, r, thetas)
    return complex(np.mean(vals * np.exp(-1j * n * thetas)))


def _values_on_circle(u, r: float, thetas: np.ndarray) -> np.ndarray:
    sweep = getattr(u, "eval_circle", None)
    if sweep is not None:
        return np.asarray(sweep(r, thetas), dtype=complex)
    return np.array([u(r * np.exp(1j * t)) for t in thetas], dtype=complex)


# -- evaluators ------------------------------------------------------------


class SeriesEvaluator:
    """Callable z -> u(z) (or a Wirtinger derivative of u) backed by an
    expansion, with a vectorised circle sweep for integral means.

    mode is one of "u", "dz", "dzbar".
    """

    _POINT = None  # set after class definition

    def __init__(self, e: Expansion, mode: str = "u"):
        if mode not in ("u", "dz", "dzbar"):
            raise DomainError(f"unknown evaluator mode {mode!r}")
        self.expansion = e
        self.mode = mode

    def __call__(self, z) -> complex:
        return self._POINT[self.mode](self.expansion, z)

    def eval_circle(self, r: float, thetas) -> np.ndarray:
        """Values on |z| = r; radial factors are computed once per mode."""
        e = self.expansion
        p = e.params
        thetas = np.asarray(thetas, dtype=np.float64)
        w = r * r
        base = (1.0 - w) ** p.total
        out = np.zeros(thetas.shape, dtype=complex)
        for k, c in e.items_sorted():
            if self.mode == "u":
                if k >= 0:
                    out += c * _hyp_pos(p, k, w) * r**k * np.exp(1j * k * thetas)
                else:
                    m = -k
                    out += c * _hyp_neg(p, m, w) * r**m * np.exp(-1j * m * thetas)
            elif self.mode == "dz":
                if k >= 0:
                    amp = (
                        c
                        * (-p.alpha)
                        * (k - p.beta)
                        / (k + 1.0)
                        * base
                        * _hyp_pos_d(p, k, w)
                        * r ** (k + 1)
                    )
                    if k >= 1:
                        amp += k * c * _hyp_pos(p, k, w) * r ** (k - 1)
                    out += amp * np.exp(1j * (k - 1) * thetas)
                else:
                    m = -k
                    amp = (
                        c
                        * (-p.beta)
                        * (m - p.alpha)
                        / (m + 1.0)
                        * base
                        * _hyp_neg_d(p, m, w)
                        * r ** (m + 1)
                    )
                    out += amp * np.exp(-1j * (m + 1) * thetas)
            else:  # dzbar
                if k >= 0:
                    amp = (
                        c
                        * (-p.alpha)
                        * (k - p.beta)
                        / (k + 1.0)
                        * base
                        * _hyp_pos_d(p, k, w)
                        * r ** (k + 1)
                    )
                    out += amp * np.exp(1j * (k + 1) * thetas)
                else:
                    m = -k
                    amp = (
                        c
                        * (-p.beta)
                        * (m - p.alpha)
                        / (m + 1.0)
                        * base
                        * _hyp_neg_d(p, m, w)
                        * r ** (m + 1)
                    )
                    amp += m * c * _hyp_neg(p, m, w) * r ** (m - 1)
                    out += amp * np.exp(-1j * (m - 1) * thetas)
        return out


SeriesEvaluator._POINT = {"u": eval_series, "dz": dz_series, "dzbar": dzbar_series}


class QuadratureEvaluator:
    """Callable z -> poisson_extend(p, f, z); the quadrature route."""

    def __init__(self, p: Params, f: BoundaryFunction):
        p.require_poisson()
        self.params = p
        self.f = f

    def __call__(self, z) -> complex:
        return poisson_extend(self.params, self.f, z)


# -- operator residual -----------------------------------------------------


def operator_residual(p: Params, u, z, h: float = 1e-4) -> complex:
    """Five-point finite-difference evaluation of the weighted operator

        (1-|z|^2) [ (1-|z|^2) d2u/dz dzbar + a z du/dz + b zbar du/dzbar
                    - a b u ]

    which annihilates every extension.  Raises StepTooLarge when the
    stencil would leave the disc.
    """
    zp = as_point(z)
    z = zp.z
    if abs(z) + 2.0 * h >= 1.0:
        raise StepTooLarge(f"stencil of step {h} at |z|={abs(z)} leaves the disc")
    u0 = u(z)
    up = u(z + h)
    um = u(z - h)
    uip = u(z + 1j * h)
    uim = u(z - 1j * h)
    ux = (up - um) / (2.0 * h)
    uy = (uip - uim) / (2.0 * h)
    dz = 0.5 * (ux - 1j * uy)
    dzb = 0.5 * (ux + 1j * uy)
    lap = (up + um + uip + uim - 4.0 * u0) / (h * h)
    w = (z * z.conjugate()).real
    return (1.0 - w) * (
        (1.0 - w) * 0.25 * lap
        + p.alpha * z * dz
        + p.beta * z.conjugate() * dzb
        - p.alpha * p.beta * u0
    )


# -- graded decomposition for integer first exponent -----------------------


@dataclass(frozen=True)
class PolyharmonicDecomposition:
    """u = sum_j ( H_j(z) + conj-analytic G_j ) |z|^(2j), j = 0..order-1,
    plus H_order |z|^(2 order), for integer alpha = order - 1... precisely:
    parts has length alpha+1 and conj_parts length alpha; the top grade is
    purely analytic."""

    params: Params
    parts: tuple  # tuple of dicts n -> coeff of z^n, length alpha+1
    conj_parts: tuple  # tuple of dicts n -> coeff of zbar^n, length alpha

    def evaluate(self, z) -> complex:
        z = as_point(z).z
        w = (z * z.conjugate()).real
        total = 0j
        for j, part in enumerate(self.parts):
            total += sum(c * z**n for n, c in sorted(part.items())) * w**j
        for j, part in enumerate(self.conj_parts):
            total += (
                sum(c * z.conjugate() ** n for n, c in sorted(part.items())) * w**j
            )
        return total

    def as_evaluator(self):
        return self.evaluate


def polyharmonic_decompose(e: Expansion) -> PolyharmonicDecomposition:
    """Grade the series by powers of |z|^2 when alpha is a positive integer.

    Requires every negative index beyond -alpha to carry a coefficient
    below COEFF_ZERO_TOL; the radial factors are then polynomials in
    |z|^2 of degree at most alpha and the series regroups into
    sum_j K_j(z) |z|^(2j) with analytic top grade.
    """
    p = e.params
    a = p.alpha
    if not (a > 0 and float(a).is_integer()):
        raise PreconditionFailed(f"alpha={a} is not a positive integer")
    order = int(a)
    for k, c in e.items_sorted():
        if k < -order and abs(c) > COEFF_ZERO_TOL:
            raise PreconditionFailed(
                f"coefficient at index {k} is {abs(c):.3e}, expected 0 for "
                f"integer alpha={order}"
            )
    parts = [dict() for _ in range(order + 1)]
    conj_parts = [dict() for _ in range(order)]
    for k, c in e.items_sorted():
        if k >= 0:
            # R_k(w) = sum_j ((-a)_j (k-b)_j / ((k+1)_j j!)) w^j, j <= order
            for j in range(order + 1):
                coef = (
                    pochhammer(-a, j)
                    * pochhammer(k - p.beta, j)
                    / (pochhammer(k + 1.0, j) * math.factorial(j))
                )
                if coef != 0.0:
                    parts[j][k] = parts[j].get(k, 0j) + c * coef
        else:
            m = -k
            if m > order:
                continue  # magnitude below COEFF_ZERO_TOL, checked above
            # S_m(w) terminates at degree order - m via the (m-a)_j factor
            for j in range(order - m + 1):
                coef = (
                    pochhammer(-p.beta, j)
                    * pochhammer(m - a, j)
                    / (pochhammer(m + 1.0, j) * math.factorial(j))
                )
                if coef != 0.0:
                    conj_parts[j][m] = conj_parts[j].get(m, 0j) + c * coef
    return PolyharmonicDecomposition(
        p,
        tuple({n: v for n, v in part.items() if v != 0} for part in parts),
        tuple({n: v for n, v in part.items() if v != 0} for part in conj_parts),
    )


def riesz_projected_derivative(f: BoundaryFunction, order: int = 1) -> TrigPolynomial:
    """Non-negative modes of the order-th angular derivative: the Taylor
    data (in)^order fhat(n), n >= 0, of the analytic side."""
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    if f.exact is not None:
        src = f.exact.coeffs
    else:
        src = fourier_coefficients(f, f.n // 2 - 1).coeffs
    return TrigPolynomial(
        {n: (1j * n) ** order * v for n, v in src.items() if n >= 0}
    )


# -- interchange -----------------------------------------------------------


def expansion_to_json_dict(e: Expansion) -> dict:
    return {
        "alpha": e.params.alpha,
        "beta": e.params.beta,
        "coeffs": {str(k): [v.real, v.imag] for k, v in e.items_sorted()},
    }


def expansion_from_json_dict(obj: dict) -> Expansion:
    p = Params(float(obj["alpha"]), float(obj["beta"]))
    coeffs = {int(k): complex(v[0], v[1]) for k, v in obj["coeffs"].items()}
    return Expansion(p, coeffs)


def write_point_dump(path, rows):
    """CSV dump of (r, theta, u, du/dz, du/dzbar) evaluation rows."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "r",
                "theta",
                "re_u",
                "im_u",
                "re_dz",
                "im_dz",
                "re_dzbar",
                "im_dzbar",
                "route_disagreement",
            ]
        )
        for row in rows:
            writer.writerow([format(float(v), ".17g") for v in row])


def expansion_to_json(e: Expansion, path):
    with open(path, "w") as fh:
        json.dump(expansion_to_json_dict(e), fh, sort_keys=True, indent=2)
        fh.write("\n")


def expansion_from_json(path) -> Expansion:
    with open(path) as fh:
        return expansion_from_json_dict(json.load(fh))
