"""Boundary data on the unit circle.

A BoundaryFunction is a vector of N uniform samples (N a power of two),
optionally backed by an exact trigonometric polynomial.  All calculus on
sample-only data is spectral (FFT multipliers); when the exact form is
present it is propagated so derivatives and coefficient reads stay exact.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

DEFAULT_SAMPLES = 2048
_SAMPLE_MATCH_TOL = 1e-13


@dataclass(frozen=True)
class TrigPolynomial:
    """Finite Fourier sum theta -> sum_k coeffs[k] e^{ik theta}.

    Zero coefficients are dropped from the map.
    """

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {
            int(k): complex(v) for k, v in self.coeffs.items() if complex(v) != 0
        }
        object.__setattr__(self, "coeffs", clean)

    def items_sorted(self):
        return sorted(self.coeffs.items())

    @property
    def max_freq(self) -> int:
        return max((abs(k) for k in self.coeffs), default=0)

    def evaluate(self, theta):
        theta = np.asarray(theta, dtype=np.float64)
        out = np.zeros(theta.shape, dtype=complex)
        for k, v in self.items_sorted():
            out += v * np.exp(1j * k * theta)
        return out

    def derivative(self) -> "TrigPolynomial":
        return TrigPolynomial({k: 1j * k * v for k, v in self.coeffs.items()})

    def shifted(self, n: int = 1) -> "TrigPolynomial":
        """Coefficients of e^{in theta} times this polynomial."""
        return TrigPolynomial({k + n: v for k, v in self.coeffs.items()})


class BoundaryFunction:
    """Uniform circle samples plus an optional exact representation."""

    def __init__(self, samples, exact: TrigPolynomial | None = None):
        samples = np.asarray(samples, dtype=complex).copy()
        n = samples.shape[0]
        if samples.ndim != 1 or n < 4 or n & (n - 1):
            raise DomainError(
                f"sample count must be a power of two >= 4, got shape {samples.shape}"
            )
        if exact is not None:
            if n <= 2 * exact.max_freq:
                raise DomainError(
                    f"{n} samples cannot resolve frequency {exact.max_freq}"
                )
            err = np.max(np.abs(samples - exact.evaluate(_grid(n))))
            if err > _SAMPLE_MATCH_TOL:
                raise DomainError(
                    f"samples disagree with the exact representation by {err:.3e}"
                )
        samples.flags.writeable = False
        self.samples = samples
        self.exact = exact

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    def grid(self) -> np.ndarray:
        return _grid(self.n)

    @classmethod
    def from_trig(cls, tp: TrigPolynomial, n: int = DEFAULT_SAMPLES) -> "BoundaryFunction":
        return cls(tp.evaluate(_grid(n)), exact=tp)

    @classmethod
    def from_callable(cls, fn, n: int = DEFAULT_SAMPLES) -> "BoundaryFunction":
        theta = _grid(n)
        return cls(np.array([fn(t) for t in theta], dtype=complex))

    def values_on_grid(self, m: int) -> np.ndarray:
        """Values on the m-point uniform grid, m a power of two >= n.

        Exact-backed data is evaluated directly; sample-only data is
        upsampled by spectral zero padding (exact below Nyquist).
        """
        if self.exact is not None:
            return self.exact.evaluate(_grid(m)) if m != self.n else self.samples
        if m == self.n:
            return self.samples
        if m < self.n or m & (m - 1):
            raise DomainError(f"cannot resample {self.n} samples onto {m} nodes")
        spec = np.fft.fft(self.samples)
        h = self.n // 2
        pad = np.zeros(m, dtype=complex)
        pad[:h] = spec[:h]
        pad[m - h + 1 :] = spec[h + 1 :]
        pad[h] = 0.5 * spec[h]
        pad[m - h] = 0.5 * spec[h]
        return np.fft.ifft(pad) * (m / self.n)


def _grid(n: int) -> np.ndarray:
    return np.arange(n) * (2.0 * np.pi / n)


def fourier_coefficients(f: BoundaryFunction, kmax: int) -> TrigPolynomial:
    """DFT coefficients fhat(k) = (1/N) sum f(theta_j) e^{-ik theta_j}
    for |k| <= kmax (kmax at most N/2 - 1); exact below Nyquist."""
    if kmax < 0 or kmax > f.n // 2 - 1:
        raise DomainError(f"kmax={kmax} outside [0, {f.n // 2 - 1}]")
    if f.exact is not None:
        return TrigPolynomial(
            {k: v for k, v in f.exact.coeffs.items() if abs(k) <= kmax}
        )
    spec = np.fft.fft(f.samples) / f.n
    coeffs = {}
    for k in range(-kmax, kmax + 1):
        v = complex(spec[k % f.n])
        if v != 0:
            coeffs[k] = v
    return TrigPolynomial(coeffs)


def derivative(f: BoundaryFunction) -> BoundaryFunction:
    """d/dtheta, spectrally (multiplier ik, Nyquist mode zeroed)."""
    if f.exact is not None:
        d = f.exact.derivative()
        return BoundaryFunction(d.evaluate(f.grid()), exact=d)
    spec = np.fft.fft(f.samples)
    k = np.fft.fftfreq(f.n, d=1.0 / f.n)
    k[f.n // 2] = 0.0
    return BoundaryFunction(np.fft.ifft(1j * k * spec))


def times_eit(f: BoundaryFunction) -> BoundaryFunction:
    """Pointwise product with e^{i theta} (index shift in frequency)."""
    rotated = f.samples * np.exp(1j * f.grid())
    exact = f.exact.shifted(1) if f.exact is not None else None
    return BoundaryFunction(rotated, exact=exact)


def times_e_minus_it(f: BoundaryFunction) -> BoundaryFunction:
    """Pointwise product with e^{-i theta}."""
    rotated = f.samples * np.exp(-1j * f.grid())
    exact = f.exact.shifted(-1) if f.exact is not None else None
    return BoundaryFunction(rotated, exact=exact)


def lp_norm(f: BoundaryFunction, p: float) -> float:
    """Grid L^p norm, mean-normalised; p = inf gives the max."""
    a = np.abs(f.samples)
    if math.isinf(p):
        return float(a.max())
    if p < 1.0:
        raise DomainError(f"lp_norm needs p >= 1, got {p}")
    return float(np.mean(a**p) ** (1.0 / p))


def hilbert_transform(f: BoundaryFunction) -> BoundaryFunction:
    """Conjugate function: Fourier multiplier -i sign(k), zero at k = 0.

    The Nyquist bin of sample-only data is zeroed (it has no signed
    frequency); exact-backed data never reaches it.
    """
    if f.exact is not None:
        mapped = TrigPolynomial(
            {
                k: (-1j if k > 0 else 1j) * v
                for k, v in f.exact.coeffs.items()
                if k != 0
            }
        )
        return BoundaryFunction(mapped.evaluate(f.grid()), exact=mapped)
    spec = np.fft.fft(f.samples)
    h = f.n // 2
    mult = np.empty(f.n, dtype=complex)
    mult[0] = 0.0
    mult[1:h] = -1j
    mult[h] = 0.0
    mult[h + 1 :] = 1j
    return BoundaryFunction(np.fft.ifft(mult * spec))


def riesz_project(f: BoundaryFunction, kmax: int | None = None) -> TrigPolynomial:
    """Analytic projection: keep the coefficients with k >= 0."""
    if f.exact is not None:
        return TrigPolynomial({k: v for k, v in f.exact.coeffs.items() if k >= 0})
    if kmax is None:
        kmax = f.n // 2 - 1
    tp = fourier_coefficients(f, kmax)
    return TrigPolynomial({k: v for k, v in tp.coeffs.items() if k >= 0})


# -- interchange -----------------------------------------------------------


def trig_to_json_dict(tp: TrigPolynomial) -> dict:
    return {str(k): [v.real, v.imag] for k, v in tp.items_sorted()}


def trig_from_json_dict(obj: dict) -> TrigPolynomial:
    return TrigPolynomial({int(k): complex(v[0], v[1]) for k, v in obj.items()})


def boundary_to_csv(f: BoundaryFunction, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "re_f", "im_f"])
        for t, v in zip(f.grid(), f.samples):
            writer.writerow([_fmt(t), _fmt(v.real), _fmt(v.imag)])


def boundary_from_csv(path) -> BoundaryFunction:
    """Read (theta, re, [im]) rows; theta must be the uniform grid."""
    rows = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or not _is_number(row[0]):
                continue  # header or blank
            if len(row) < 2:
                raise DomainError(f"need at least 2 columns, got {row}")
            theta = float(row[0])
            re = float(row[1])
            im = float(row[2]) if len(row) > 2 else 0.0
            rows.append((theta, complex(re, im)))
    if not rows:
        raise DomainError(f"no sample rows found in {path}")
    n = len(rows)
    thetas = np.array([r[0] for r in rows])
    if n & (n - 1) or n < 4:
        raise DomainError(f"sample count {n} is not a power of two >= 4")
    if np.max(np.abs(thetas - _grid(n))) > 1e-9:
        raise DomainError("theta column is not the uniform grid 2*pi*j/N")
    return BoundaryFunction(np.array([r[1] for r in rows]))


def load_boundary(path, n: int = DEFAULT_SAMPLES) -> BoundaryFunction:
    """Dispatch on suffix: .json holds a coefficient map, .csv holds samples."""
    p = str(path)
    if p.endswith(".json"):
        with open(p) as fh:
            return BoundaryFunction.from_trig(trig_from_json_dict(json.load(fh)), n=n)
    return boundary_from_csv(p)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _is_number(s: str) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False
