"""Hardy-space diagnostics for extensions and their derivatives.

Covers the circle integral means M_p(r, u), least-squares growth
exponents against (1-r^2), the quasi-regularity constant, numerical
verification of the derivative norm bounds, the closed-form blow-up
witnesses, and the membership decision table keyed on the sign of
alpha + beta and the integer structure of the pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .boundary import BoundaryFunction, derivative, fourier_coefficients, lp_norm
from .errors import DegenerateFit, DomainError
from .extension import (
    Expansion,
    SeriesEvaluator,
    _values_on_circle,
    coeffs_from_boundary,
)
from .kernels import Params, c_alpha_beta, c_lambda, i_lambda, quadrature_count
from .special import hyp2f1_raw, pochhammer

DEFAULT_FIT_RADII = (0.95, 0.97, 0.99, 0.995, 0.999)
# Witness fits use radii much closer to the boundary: the means carry a
# slowly varying hypergeometric factor whose drift tilts the fitted slope
# at moderate radii, and the witness means are closed forms, so pushing
# r -> 1 costs nothing.
WITNESS_FIT_RADII = (0.9995, 0.9998, 0.9999, 0.99995, 0.99999)

MEAN_FLOOR = 1e-14  # below this the fit is declared degenerate


def hardy_mean(u, p: float, r: float, num_nodes: int = 1024) -> float:
    """Integral mean M_p(r, u) = ((1/N) sum |u(r e^{i t_j})|^p)^(1/p);
    p = inf takes the grid maximum."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"hardy_mean needs 0 <= r < 1, got {r}")
    if not math.isinf(p) and p < 1.0:
        raise DomainError(f"hardy_mean needs p >= 1, got {p}")
    thetas = np.arange(num_nodes) * (2.0 * np.pi / num_nodes)
    a = np.abs(_values_on_circle(u, r, thetas))
    if math.isinf(p):
        return float(a.max())
    return float(np.mean(a**p) ** (1.0 / p))


def _nodes_for(r: float) -> int:
    # Capped: mean sampling rides on eval_circle, whose accuracy does not
    # degrade as r -> 1, unlike the raw kernel quadrature.
    return min(max(1024, quadrature_count(r)), 65536) if r > 0.9 else 1024


@dataclass(frozen=True)
class HardyProfile:
    """Means of one target over a radii ladder, with an optional fit of
    log M_p against log(1-r^2) (present once >= 4 radii exceed 0.9)."""

    p: float
    radii: tuple
    means: tuple
    fitted_exponent: float | None
    fit_residual: float | None

    @classmethod
    def build(cls, u, p: float, radii) -> "HardyProfile":
        radii = tuple(float(r) for r in radii)
        means = tuple(hardy_mean(u, p, r, _nodes_for(r)) for r in radii)
        gamma = residual = None
        if sum(1 for r in radii if r > 0.9) >= 4:
            fit_pts = [(r, m) for r, m in zip(radii, means) if r > 0.9]
            try:
                gamma, residual = _fit_exponent(fit_pts)
            except DegenerateFit:
                # A target that vanishes identically has a profile but no
                # meaningful growth rate.
                gamma = residual = None
        return cls(p, radii, means, gamma, residual)


def _fit_exponent(points) -> tuple[float, float]:
    if all(m < MEAN_FLOOR for _, m in points):
        raise DegenerateFit("all means are numerically zero")
    x = np.log([1.0 - r * r for r, _ in points])
    y = np.log([max(m, 1e-300) for _, m in points])
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return float(slope), resid


def growth_exponent(u, p: float, radii, num_nodes: int | None = None):
    """Least-squares slope of log M_p(r, u) against log(1-r^2).

    Needs at least 4 radii, all above 0.9.  Returns (exponent, rms
    residual); raises DegenerateFit when the means vanish identically.
    """
    radii = [float(r) for r in radii]
    if len(radii) < 4 or any(r <= 0.9 for r in radii):
        raise DomainError("growth fits need >= 4 radii, all above 0.9")
    pts = [
        (r, hardy_mean(u, p, r, num_nodes if num_nodes else _nodes_for(r)))
        for r in radii
    ]
    return _fit_exponent(pts)


def quasiregularity_constant(u_dz, u_dzbar, grid) -> float:
    """max over the grid of (|du/dz| + |du/dzbar|) / (|du/dz| - |du/dzbar|),
    +inf as soon as one denominator is <= 0."""
    worst = 1.0
    for z in grid:
        a = abs(u_dz(z))
        b = abs(u_dzbar(z))
        denom = a - b
        if denom <= 0.0:
            return math.inf
        worst = max(worst, (a + b) / denom)
    return worst


# -- membership decision table ---------------------------------------------


class Classification(Enum):
    HARDY_MEMBER = "hardy_member"
    AREA_LEBESGUE_ONLY = "area_lebesgue_only"
    RIGIDITY_ZERO = "rigidity_zero"
    RIGIDITY_POLYHARMONIC = "rigidity_polyharmonic"
    INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class Verdict:
    """Outcome of the membership question for derivatives of extensions.

    lp_area_cutoff (present when alpha+beta < 0) is the exponent below
    which the derivatives still lie in area-L^p of the disc; conditional
    marks the endpoint cases of the classical pair, where membership is a
    data-dependent statement about the conjugate function.
    """

    classification: Classification
    p_range: tuple | None = None
    polyharmonic_order: int | None = None
    lp_area_cutoff: float | None = None
    conditional: str | None = None
    provenance: str = ""


def membership_verdict(p: Params, lp: float, f: BoundaryFunction | None = None) -> Verdict:
    """Decision table keyed on s = alpha + beta and integer structure.

    Rules, in order of precedence:
      s > 0 (not the classical pair)  -> HARDY_MEMBER for all p in [1, inf]
      alpha = beta = 0                -> HARDY_MEMBER for p in (1, inf);
                                         endpoints conditional on the data
      s = 0, pair nonzero             -> RIGIDITY_ZERO
      -1 < s < 0, both non-integer    -> RIGIDITY_ZERO
      -1 < s < 0, alpha in {1,2,...}  -> RIGIDITY_POLYHARMONIC(alpha+1)
      -1 < s < 0, beta in {1,2,...}   -> RIGIDITY_POLYHARMONIC(beta+1),
                                         by conjugation symmetry
      -1 < s < 0 otherwise            -> AREA_LEBESGUE_ONLY with cutoff
                                         -1/s (one exponent equals 0)
      s <= -1                         -> INADMISSIBLE

    The rigidity classifications hold for every p >= 1, so they are not
    displaced by the area statement at small p; the area cutoff is still
    reported alongside whenever s < 0.
    """
    if not math.isinf(lp) and lp < 1.0:
        raise DomainError(f"membership needs p >= 1, got {lp}")
    s = p.total
    if s <= -1.0:
        return Verdict(Classification.INADMISSIBLE, provenance="parameter-domain")
    a_int = p.alpha.is_integer()
    b_int = p.beta.is_integer()
    cutoff = -1.0 / s if s < 0.0 else None
    if s > 0.0:
        return Verdict(
            Classification.HARDY_MEMBER,
            p_range=(1.0, math.inf),
            provenance="positive-sum-membership",
        )
    if p.alpha == 0.0 and p.beta == 0.0:
        # Endpoints of the classical pair hinge on the conjugate function:
        # membership holds iff H(f') stays in L^p, a data-dependent fact.
        cond = None
        if lp in (1.0, math.inf):
            cond = "conjugate-derivative-integrable"
            if f is not None:
                from .boundary import hilbert_transform

                norm = lp_norm(hilbert_transform(derivative(f)), lp)
                cond = f"conjugate-derivative-norm={norm:.17g}"
        return Verdict(
            Classification.HARDY_MEMBER,
            p_range=(1.0, math.inf),
            conditional=cond,
            provenance="classical-riesz-projection",
        )
    if s == 0.0:
        return Verdict(
            Classification.RIGIDITY_ZERO,
            lp_area_cutoff=cutoff,
            provenance="zero-sum-rigidity",
        )
    if not a_int and not b_int:
        return Verdict(
            Classification.RIGIDITY_ZERO,
            lp_area_cutoff=cutoff,
            provenance="nonintegral-rigidity",
        )
    if a_int and p.alpha >= 1.0:
        return Verdict(
            Classification.RIGIDITY_POLYHARMONIC,
            polyharmonic_order=int(p.alpha) + 1,
            lp_area_cutoff=cutoff,
            provenance="integer-order-polyharmonic",
        )
    if b_int and p.beta >= 1.0:
        return Verdict(
            Classification.RIGIDITY_POLYHARMONIC,
            polyharmonic_order=int(p.beta) + 1,
            lp_area_cutoff=cutoff,
            provenance="integer-order-polyharmonic-conjugate",
        )
    return Verdict(
        Classification.AREA_LEBESGUE_ONLY,
        lp_area_cutoff=cutoff,
        provenance="negative-sum-area-membership",
    )


# -- blow-up witnesses -----------------------------------------------------


class WitnessEvaluator:
    """Conjugate (or direct) Wirtinger derivative of one circular-mode
    extension, in closed form.  Its modulus is radial with profile
    ~ (1-|z|^2)^(alpha+beta), which diverges when alpha + beta < 0."""

    def __init__(self, p: Params, k: int, side: str):
        if side not in ("dzbar", "dz"):
            raise DomainError(f"unknown witness side {side!r}")
        self.params = p
        self.k = k
        self.side = side
        if side == "dzbar":
            self.amp = (
                -c_alpha_beta(p)
                * (k - p.beta)
                * pochhammer(p.alpha, k + 1)
                / math.factorial(k + 1)
            )
            self._hyp = (k + p.alpha + 1.0, p.beta + 1.0, k + 2.0)
        else:
            self.amp = (
                -c_alpha_beta(p)
                * (k - p.alpha)
                * pochhammer(p.beta, k + 1)
                / math.factorial(k + 1)
            )
            self._hyp = (k + p.beta + 1.0, p.alpha + 1.0, k + 2.0)

    def _radial(self, w: float) -> float:
        a, b, c = self._hyp
        return (1.0 - w) ** self.params.total * hyp2f1_raw(a, b, c, w)

    def __call__(self, z) -> complex:
        z = complex(z.z if hasattr(z, "z") else z)
        w = (z * z.conjugate()).real
        power = z if self.side == "dzbar" else z.conjugate()
        return self.amp * self._radial(w) * power ** (self.k + 1)

    def eval_circle(self, r: float, thetas) -> np.ndarray:
        thetas = np.asarray(thetas, dtype=np.float64)
        mag = self.amp * self._radial(r * r) * r ** (self.k + 1)
        sign = 1.0 if self.side == "dzbar" else -1.0
        return mag * np.exp(sign * 1j * (self.k + 1) * thetas)

    def radial_magnitude(self, r: float) -> float:
        return abs(self.amp) * abs(self._radial(r * r)) * r ** (self.k + 1)


def rigidity_witness(p: Params) -> WitnessEvaluator:
    """Witness with nonvanishing boundary limit for -1 < alpha+beta < 0.

    Mode selection: integer beta >= 0 forces k = beta + 1 on the
    conjugate-derivative side; integer alpha >= 0 mirrors that on the
    direct side; otherwise k = 0 works.
    """
    if not -1.0 < p.total < 0.0:
        raise DomainError(
            f"witnesses exist for -1 < alpha+beta < 0, got {p.total}"
        )
    if p.beta.is_integer() and p.beta >= 0.0:
        return WitnessEvaluator(p, int(p.beta) + 1, "dzbar")
    if p.alpha.is_integer() and p.alpha >= 0.0:
        return WitnessEvaluator(p, int(p.alpha) + 1, "dz")
    return WitnessEvaluator(p, 0, "dzbar")


# -- norm-bound verification -----------------------------------------------


def _dtheta_expansion(p: Params, f: BoundaryFunction) -> Expansion:
    fdot = derivative(f)
    kmax = fdot.exact.max_freq if fdot.exact is not None else f.n // 2 - 1
    return coeffs_from_boundary(p, fourier_coefficients(fdot, max(kmax, 1)))


def _expansion_of(p: Params, f: BoundaryFunction) -> Expansion:
    kmax = f.exact.max_freq if f.exact is not None else f.n // 2 - 1
    return coeffs_from_boundary(p, fourier_coefficients(f, max(kmax, 1)))


def verify_dtheta_bound(p: Params, f: BoundaryFunction, lp: float, radii) -> dict:
    """Check M_p(r, du/dtheta) <= |c| c_(alpha+beta+1) ||f'||_p per radius.

    The angular derivative is evaluated through its own series expansion
    (it is the extension of f'), which stays accurate arbitrarily close
    to the boundary.
    """
    p.require_poisson()
    ev = SeriesEvaluator(_dtheta_expansion(p, f), mode="u")
    rhs = abs(c_alpha_beta(p)) * c_lambda(p.total + 1.0) * lp_norm(derivative(f), lp)
    radii = [float(r) for r in radii]
    lhs = [hardy_mean(ev, lp, r, _nodes_for(r)) for r in radii]
    slack = [rhs - v for v in lhs]
    return {
        "case": "angular-derivative-bound",
        "params": [p.alpha, p.beta],
        "p": lp,
        "radii": radii,
        "lhs": lhs,
        "rhs": [rhs] * len(radii),
        "slack": slack,
        "pass": all(s >= -1e-6 for s in slack),
    }


def verify_dz_bounds(p: Params, f: BoundaryFunction, lp: float, radii) -> dict:
    """Check the per-radius bounds

        M_p(r, z du/dz)       <= |c| I_(a+b)(r) (||f'||_p + |b| ||f||_p)
        M_p(r, zbar du/dzbar) <= |c| I_(a+b)(r) (||f'||_p + |a| ||f||_p)

    and, when alpha + beta > 0, the uniform versions with the sharp
    constant c_(a+b) in place of I_(a+b)(r)."""
    p.require_poisson()
    e = _expansion_of(p, f)
    dz_ev = SeriesEvaluator(e, mode="dz")
    dzbar_ev = SeriesEvaluator(e, mode="dzbar")
    norm_f = lp_norm(f, lp)
    norm_fdot = lp_norm(derivative(f), lp)
    c = abs(c_alpha_beta(p))
    radii = [float(r) for r in radii]
    lhs_dz, lhs_dzbar, rhs_dz, rhs_dzbar = [], [], [], []
    for r in radii:
        n = _nodes_for(r)
        thetas = np.arange(n) * (2.0 * np.pi / n)
        zs = r * np.exp(1j * thetas)
        vdz = np.abs(zs * dz_ev.eval_circle(r, thetas))
        vdzbar = np.abs(np.conj(zs) * dzbar_ev.eval_circle(r, thetas))
        if math.isinf(lp):
            m1, m2 = float(vdz.max()), float(vdzbar.max())
        else:
            m1 = float(np.mean(vdz**lp) ** (1.0 / lp))
            m2 = float(np.mean(vdzbar**lp) ** (1.0 / lp))
        weight = i_lambda(p.total, r)
        lhs_dz.append(m1)
        lhs_dzbar.append(m2)
        rhs_dz.append(c * weight * (norm_fdot + abs(p.beta) * norm_f))
        rhs_dzbar.append(c * weight * (norm_fdot + abs(p.alpha) * norm_f))
    # Schema arrays carry the binding side at each radius; the per-side
    # detail stays available under the *_dz / *_dzbar keys.
    lhs, rhs, slack = [], [], []
    for m1, m2, b1, b2 in zip(lhs_dz, lhs_dzbar, rhs_dz, rhs_dzbar):
        if b1 - m1 <= b2 - m2:
            lhs.append(m1)
            rhs.append(b1)
        else:
            lhs.append(m2)
            rhs.append(b2)
        slack.append(rhs[-1] - lhs[-1])
    ok = all(s >= -1e-6 for s in slack)
    report = {
        "case": "derivative-hardy-bound",
        "params": [p.alpha, p.beta],
        "p": lp,
        "radii": radii,
        "lhs": lhs,
        "rhs": rhs,
        "slack": slack,
        "lhs_dz": lhs_dz,
        "lhs_dzbar": lhs_dzbar,
        "rhs_dz": rhs_dz,
        "rhs_dzbar": rhs_dzbar,
    }
    if p.total > 0.0:
        cap = c_lambda(p.total)
        uni_dz = c * cap * (norm_fdot + abs(p.beta) * norm_f)
        uni_dzbar = c * cap * (norm_fdot + abs(p.alpha) * norm_f)
        report.update(uniform_rhs_dz=uni_dz, uniform_rhs_dzbar=uni_dzbar)
        ok = (
            ok
            and max(lhs_dz) <= uni_dz + 1e-6
            and max(lhs_dzbar) <= uni_dzbar + 1e-6
        )
    report["pass"] = ok
    return report
