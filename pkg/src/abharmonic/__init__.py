"""Weighted harmonic function theory on the unit disc.

Evaluates the two-parameter family of weighted Poisson kernels, solves
the associated Dirichlet problem by kernel quadrature and by
hypergeometric series, differentiates the extensions in closed form,
and classifies when those derivatives belong to Hardy-type spaces.
"""
from ._backend import BACKEND
from .boundary import (
    BoundaryFunction,
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
from .errors import (
    AbharmonicError,
    DegenerateCoefficient,
    DegenerateFit,
    DomainError,
    NoConvergence,
    PoleError,
    PreconditionFailed,
    StepTooLarge,
)
from .extension import (
    Expansion,
    PolyharmonicDecomposition,
    QuadratureEvaluator,
    SeriesEvaluator,
    circle_mean,
    coeffs_from_boundary,
    dtheta,
    dz_series,
    dzbar_series,
    eval_series,
    expansion_from_json,
    expansion_to_json,
    operator_residual,
    poisson_extend,
    polyharmonic_decompose,
    riesz_projected_derivative,
    zbar_dzbar_decomposition,
    zdz_decomposition,
)
from .hardy import (
    DEFAULT_FIT_RADII,
    WITNESS_FIT_RADII,
    Classification,
    HardyProfile,
    Verdict,
    WitnessEvaluator,
    growth_exponent,
    hardy_mean,
    membership_verdict,
    quasiregularity_constant,
    rigidity_witness,
    verify_dtheta_bound,
    verify_dz_bounds,
)
from .kernels import (
    DiskPoint,
    Params,
    as_point,
    c_alpha_beta,
    c_lambda,
    i_lambda,
    kernel_K,
    kernel_dz,
    kernel_dzbar,
    m_k,
    m_k_dzbar,
    m_radial,
    poisson_kernel,
    quadrature_count,
    t_alpha_params,
)
from .special import (
    HypParams,
    euler_transform,
    gamma,
    gauss_log_coefficient,
    hyp2f1,
    hyp2f1_at_one,
    hyp2f1_derivative,
    pochhammer,
    snap_nonpositive_int,
)
from .verify import CHECK_NAMES, default_corpus, run_all

__version__ = "0.1.0"

__all__ = [
    "AbharmonicError",
    "BACKEND",
    "BoundaryFunction",
    "CHECK_NAMES",
    "Classification",
    "DEFAULT_FIT_RADII",
    "DegenerateCoefficient",
    "DegenerateFit",
    "DiskPoint",
    "DomainError",
    "Expansion",
    "HardyProfile",
    "HypParams",
    "NoConvergence",
    "Params",
    "PoleError",
    "PolyharmonicDecomposition",
    "PreconditionFailed",
    "QuadratureEvaluator",
    "SeriesEvaluator",
    "StepTooLarge",
    "TrigPolynomial",
    "Verdict",
    "WITNESS_FIT_RADII",
    "WitnessEvaluator",
    "as_point",
    "boundary_from_csv",
    "boundary_to_csv",
    "c_alpha_beta",
    "c_lambda",
    "circle_mean",
    "coeffs_from_boundary",
    "default_corpus",
    "derivative",
    "dtheta",
    "dz_series",
    "dzbar_series",
    "euler_transform",
    "eval_series",
    "expansion_from_json",
    "expansion_to_json",
    "fourier_coefficients",
    "gamma",
    "gauss_log_coefficient",
    "growth_exponent",
    "hardy_mean",
    "hilbert_transform",
    "hyp2f1",
    "hyp2f1_at_one",
    "hyp2f1_derivative",
    "i_lambda",
    "kernel_K",
    "kernel_dz",
    "kernel_dzbar",
    "load_boundary",
    "lp_norm",
    "m_k",
    "m_k_dzbar",
    "m_radial",
    "membership_verdict",
    "operator_residual",
    "pochhammer",
    "poisson_extend",
    "poisson_kernel",
    "polyharmonic_decompose",
    "quadrature_count",
    "quasiregularity_constant",
    "riesz_project",
    "riesz_projected_derivative",
    "rigidity_witness",
    "run_all",
    "snap_nonpositive_int",
    "t_alpha_params",
    "times_e_minus_it",
    "times_eit",
    "trig_from_json_dict",
    "trig_to_json_dict",
    "verify_dtheta_bound",
    "verify_dz_bounds",
    "zbar_dzbar_decomposition",
    "zdz_decomposition",
]
