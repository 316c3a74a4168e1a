"""Weighted Poisson kernels on the unit disc.

The kernel for an exponent pair (alpha, beta) is

    K(z) = (1-|z|^2)^(alpha+beta+1) / ((1-z)^(alpha+1) (1-zbar)^(beta+1)),

normalised by c = Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+1).
This module provides the kernel, its closed-form Wirtinger derivatives,
the radial integral means I_lambda with their sharp constants, and the
circular-mode extensions M_k together with the conjugate derivative that
drives the blow-up witnesses.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _backend
from .errors import DomainError
from .special import SNAP_TOL, gamma, hyp2f1_raw, pochhammer


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) < SNAP_TOL else float(x)


@dataclass(frozen=True)
class Params:
    """Exponent pair of the weighted operator.

    Neither entry may be a negative integer (the normalising constant and
    the series coefficients degenerate there).  Values within 1e-12 of an
    integer are snapped, so integer-order structure is detected reliably.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _snap(self.alpha))
        object.__setattr__(self, "beta", _snap(self.beta))
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if v < 0.0 and v.is_integer():
                raise DomainError(f"{name}={v} is a negative integer")

    @property
    def total(self) -> float:
        return self.alpha + self.beta

    def swapped(self) -> "Params":
        return Params(self.beta, self.alpha)

    def require_poisson(self):
        """Poisson-integral operations need alpha + beta > -1."""
        if self.total <= -1.0:
            raise DomainError(
                f"alpha+beta={self.total} <= -1: the kernel is not integrable"
            )


@dataclass(frozen=True)
class DiskPoint:
    """A point strictly inside the unit disc."""

    z: complex

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        if abs(z) >= 1.0:
            raise DomainError(f"|z|={abs(z)} is not inside the unit disc")

    @property
    def r(self) -> float:
        return abs(self.z)

    @property
    def theta(self) -> float:
        return cmath.phase(self.z)


def as_point(z) -> DiskPoint:
    """Coerce a complex number to a validated DiskPoint."""
    return z if isinstance(z, DiskPoint) else DiskPoint(complex(z))


def c_alpha_beta(p: Params) -> float:
    """Normalising constant Gamma(a+1) Gamma(b+1) / Gamma(a+b+1)."""
    return gamma(p.alpha + 1.0) * gamma(p.beta + 1.0) / gamma(p.total + 1.0)


def c_lambda(lam: float) -> float:
    """Sharp constant Gamma(lam) / Gamma(lam/2 + 1/2)^2 for lam > 0."""
    if lam <= 0.0:
        raise DomainError(f"c_lambda needs lam > 0, got {lam}")
    g = gamma(lam / 2.0 + 0.5)
    return gamma(lam) / (g * g)


def kernel_K(p: Params, z) -> complex:
    """Unnormalised weighted kernel at a disc point."""
    z = as_point(z).z
    zb = z.conjugate()
    w = (z * zb).real
    return (
        (1.0 - w) ** (p.total + 1.0)
        * (1.0 - z) ** (-(p.alpha + 1.0))
        * (1.0 - zb) ** (-(p.beta + 1.0))
    )


def poisson_kernel(p: Params, z) -> complex:
    """Normalised kernel c * K(z)."""
    return c_alpha_beta(p) * kernel_K(p, z)


def kernel_dz(p: Params, z) -> complex:
    """Closed-form d/dz of kernel_K."""
    z = as_point(z).z
    zb = z.conjugate()
    base = (1.0 - (z * zb).real) ** p.total
    t1 = (
        (p.alpha + 1.0)
        * base
        * (1.0 - z) ** (-(p.alpha + 2.0))
        * (1.0 - zb) ** (-p.beta)
    )
    t2 = (
        p.beta
        * zb
        * base
        * (1.0 - z) ** (-(p.alpha + 1.0))
        * (1.0 - zb) ** (-(p.beta + 1.0))
    )
    return t1 - t2


def kernel_dzbar(p: Params, z) -> complex:
    """Closed-form d/dzbar of kernel_K (mirror of kernel_dz)."""
    z = as_point(z).z
    zb = z.conjugate()
    base = (1.0 - (z * zb).real) ** p.total
    t1 = (
        (p.beta + 1.0)
        * base
        * (1.0 - z) ** (-p.alpha)
        * (1.0 - zb) ** (-(p.beta + 2.0))
    )
    t2 = (
        p.alpha
        * z
        * base
        * (1.0 - z) ** (-(p.alpha + 1.0))
        * (1.0 - zb) ** (-(p.beta + 1.0))
    )
    return t1 - t2


def quadrature_count(r: float) -> int:
    """Node count scaled to the kernel peak width ~ (1-r)."""
    return max(1024, math.ceil(64.0 / (1.0 - r)))


def i_lambda(lam: float, r: float) -> float:
    """Integral mean (1/2pi) int (1-r^2)^lam / |1 - r e^{-it}|^(lam+1) dt.

    Bounded by c_lambda for lam > 0 and by c_{-lam} (1-r^2)^lam for
    -1 < lam < 0; both bounds are approached as r -> 1.
    """
    if lam <= -1.0:
        raise DomainError(f"i_lambda needs lam > -1, got {lam}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"i_lambda needs 0 <= r < 1, got {r}")
    return _backend.i_lambda_quad(lam, r, quadrature_count(r))


def m_radial(p: Params, r: float) -> float:
    """Kernel mass on the circle |z| = r: c * F(-alpha, -beta; 1; r^2).

    Identically 1 when alpha or beta is 0, and tends to 1 as r -> 1
    whenever alpha + beta > -1.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"m_radial needs 0 <= r < 1, got {r}")
    return c_alpha_beta(p) * hyp2f1_raw(-p.alpha, -p.beta, 1.0, r * r)


def m_k(p: Params, k: int, z) -> complex:
    """Extension of the circular mode e^{ik theta}, k >= 0.

    Closed form c * ((alpha+1)_k / k!) F(-alpha, k-beta; k+1; |z|^2) z^k;
    k = 0 reduces to m_radial.
    """
    if k < 0:
        raise DomainError(f"m_k needs k >= 0, got {k}")
    z = as_point(z).z
    w = (z * z.conjugate()).real
    amp = c_alpha_beta(p) * pochhammer(p.alpha + 1.0, k) / math.factorial(k)
    return amp * hyp2f1_raw(-p.alpha, k - p.beta, k + 1.0, w) * z**k


def m_k_dzbar(p: Params, k: int, z) -> complex:
    """Closed-form d/dzbar of m_k.

    The modulus scales like (1-|z|^2)^(alpha+beta); for alpha+beta < 0
    this is the blow-up profile the rigidity witnesses exhibit.
    """
    if k < 0:
        raise DomainError(f"m_k_dzbar needs k >= 0, got {k}")
    z = as_point(z).z
    w = (z * z.conjugate()).real
    amp = (
        -c_alpha_beta(p)
        * (k - p.beta)
        * pochhammer(p.alpha, k + 1)
        / math.factorial(k + 1)
    )
    radial = (1.0 - w) ** p.total * hyp2f1_raw(
        k + p.alpha + 1.0, p.beta + 1.0, k + 2.0, w
    )
    return amp * radial * z ** (k + 1)


def t_alpha_params(alpha: float) -> Params:
    """Exponent pair (alpha/2, alpha/2) of the radially weighted operator
    (1-|z|^2)^(-alpha-2) scaling of the weighted Laplacian, alpha > -1."""
    if alpha <= -1.0:
        raise DomainError(f"weight exponent must exceed -1, got {alpha}")
    return Params(alpha / 2.0, alpha / 2.0)
