"""Numerical verification suite for the library's analytic claims.

Each check returns {"name", "passed", "details"}; run_all executes every
check against a seeded corpus so the outcome is reproducible.  The same
reports back both the command line front end and the acceptance tests.

Randomized corpora are conditioned: parameter draws stay clear of the
negative-integer poles and of the admissibility edge alpha+beta = -1,
and hypergeometric triples avoid zeros of F (a relative comparison
against a value near zero measures conditioning, not correctness).
"""
from __future__ import annotations

import math

import numpy as np

from .boundary import (
    BoundaryFunction,
    TrigPolynomial,
    derivative,
    fourier_coefficients,
    lp_norm,
)
from .errors import DomainError
from .extension import (
    SeriesEvaluator,
    QuadratureEvaluator,
    coeffs_from_boundary,
    dtheta,
    dz_series,
    dzbar_series,
    eval_series,
    operator_residual,
    polyharmonic_decompose,
    poisson_extend,
    zbar_dzbar_decomposition,
    zdz_decomposition,
)
from .hardy import (
    WITNESS_FIT_RADII,
    Classification,
    growth_exponent,
    membership_verdict,
    quasiregularity_constant,
    rigidity_witness,
    verify_dtheta_bound,
    verify_dz_bounds,
)
from .kernels import (
    Params,
    c_alpha_beta,
    c_lambda,
    i_lambda,
    kernel_K,
    m_k,
    m_radial,
    t_alpha_params,
)
from .special import (
    HypParams,
    euler_transform,
    gauss_log_coefficient,
    hyp2f1,
    hyp2f1_at_one,
    hyp2f1_derivative,
)

EULER_REL_TOL = 1e-10
DERIVATIVE_FD_TOL = 1e-6
GAUSS_LIMIT_REL_TOL = 1e-3
GAUSS_LOG_REL_TOL = 0.05
UNIT_MASS_TOL = 1e-8
LEMMA_SLACK_TOL = 1e-6
RADIAL_LIMIT_TOL = 5e-3
EXTEND_MATCH_TOL = 1e-8
TWO_ROUTE_TOL = 1e-7
WIRTINGER_FD_TOL = 1e-5
DECOMPOSITION_TOL = 1e-6
DTHETA_IDENTITY_TOL = 1e-6
BOUND_SLACK_TOL = 1e-6
ATTAINMENT_TOL = 1e-9
EXPONENT_TOL = 0.05
DIVERGENCE_FACTOR = 2.0
RECONSTRUCTION_TOL = 1e-10
OPERATOR_RESIDUAL_TOL = 1e-3

# Interior sample points keep a margin from both the boundary and the
# kernel singularity at z = 1, where high derivatives amplify the finite
# difference error of the operator residual.
_RADII_25 = (0.15, 0.25, 0.35, 0.45, 0.55)
_PHASES_25 = (0.7, 1.9, 3.1, 4.3, 5.5)


def _points_25():
    return [r * complex(math.cos(t), math.sin(t)) for r in _RADII_25 for t in _PHASES_25]


def _near_negative_integer(x: float, margin: float = 0.05) -> bool:
    n = round(x)
    return n < 0 and abs(x - n) < margin


def _draw_pair(rng) -> Params:
    while True:
        a = float(rng.uniform(-1.6, 2.5))
        b = float(rng.uniform(-1.6, 2.5))
        if _near_negative_integer(a) or _near_negative_integer(b):
            continue
        if a + b <= -0.9:
            continue
        return Params(a, b)


def _draw_trig(rng, degree: int) -> TrigPolynomial:
    coeffs = {}
    for k in range(-degree, degree + 1):
        re, im = rng.normal(size=2)
        coeffs[k] = complex(re, im) / (1.0 + abs(k)) ** 2
    return TrigPolynomial(coeffs)


def default_corpus(seed: int, count: int = 10, degree: int = 5):
    """Reproducible list of (Params, BoundaryFunction) sweep cases."""
    rng = np.random.default_rng((seed, 99))
    return [
        (_draw_pair(rng), BoundaryFunction.from_trig(_draw_trig(rng, degree)))
        for _ in range(count)
    ]


def _expansion(p: Params, f: BoundaryFunction, kmax: int):
    return coeffs_from_boundary(p, fourier_coefficients(f, kmax))


# -- 1 ---------------------------------------------------------------------


def _draw_triple(rng):
    xs = np.linspace(0.05, 0.85, 9)
    while True:
        a = float(rng.uniform(-3.5, 3.5))
        b = float(rng.uniform(-3.5, 3.5))
        c = float(rng.uniform(1.0, 5.0))
        p = HypParams(a, b, c)
        vals = [hyp2f1(p, float(x)) for x in xs]
        if min(abs(v) for v in vals) < 1e-2:
            continue
        return p, xs


def check_hypergeometric_identities(seed: int) -> dict:
    """Euler transform and the closed-form derivative rule on random triples."""
    rng = np.random.default_rng((seed, 1))
    worst_euler = worst_fd = 0.0
    h = 1e-6
    for _ in range(20):
        p, xs = _draw_triple(rng)
        for x in xs:
            x = float(x)
            lhs = hyp2f1(p, x)
            rhs = euler_transform(p, x)
            worst_euler = max(worst_euler, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
            fd = (hyp2f1(p, x + h) - hyp2f1(p, x - h)) / (2.0 * h)
            an = hyp2f1_derivative(p, x)
            worst_fd = max(worst_fd, abs(fd - an) / max(1.0, abs(an)))
    passed = worst_euler <= EULER_REL_TOL and worst_fd <= DERIVATIVE_FD_TOL
    return {
        "name": "hypergeometric-identities",
        "passed": passed,
        "details": (
            f"euler rel {worst_euler:.2e} (tol {EULER_REL_TOL}); "
            f"derivative vs FD {worst_fd:.2e} (tol {DERIVATIVE_FD_TOL})"
        ),
    }


# -- 2 ---------------------------------------------------------------------


def check_gauss_limit(seed: int) -> dict:
    """Series at x = 1 - 1e-6 against the Gamma formula, and the log
    asymptote slope when c = a + b."""
    rng = np.random.default_rng((seed, 2))
    x = 1.0 - 1e-6
    worst = 0.0
    drawn = 0
    while drawn < 10:
        a = float(rng.uniform(-2.0, 2.0))
        b = float(rng.uniform(-2.0, 2.0))
        s = float(rng.uniform(1.1, 2.8))
        c = a + b + s
        if c < 0.3:
            continue
        p = HypParams(a, b, c)
        gauss = hyp2f1_at_one(p)
        if abs(gauss) < 1e-2:
            continue
        drawn += 1
        worst = max(worst, abs(hyp2f1(p, x) - gauss) / abs(gauss))
    worst_log = 0.0
    for a, b in ((1.0, 1.0), (0.5, 0.5)):
        p = HypParams(a, b, a + b)
        # Slope against log(1-x); differencing two radii cancels the
        # additive constant that rides along with the log divergence.
        f1, f0 = hyp2f1(p, 0.999), hyp2f1(p, 0.99)
        slope = (f1 - f0) / (math.log(1e-3) - math.log(1e-2))
        target = gauss_log_coefficient(a, b)
        worst_log = max(worst_log, abs(slope - target) / abs(target))
    passed = worst <= GAUSS_LIMIT_REL_TOL and worst_log <= GAUSS_LOG_REL_TOL
    return {
        "name": "gauss-limit",
        "passed": passed,
        "details": (
            f"limit rel {worst:.2e} (tol {GAUSS_LIMIT_REL_TOL}); "
            f"log-slope rel {worst_log:.2e} (tol {GAUSS_LOG_REL_TOL})"
        ),
    }


# -- 3 ---------------------------------------------------------------------


def check_kernel_normalization(seed: int) -> dict:
    """Unit mass of the λ=1 radial integral, the two-sided radial
    integral bounds, and the constant-data reduction to m_radial."""
    worst_mass = max(abs(i_lambda(1.0, r) - 1.0) for r in (0.0, 0.5, 0.9, 0.99))
    worst_slack = math.inf
    for lam in (0.5, 1.0, 2.0, 3.7):
        for r in (0.0, 0.3, 0.9, 0.999):
            worst_slack = min(worst_slack, c_lambda(lam) - i_lambda(lam, r))
    for lam in (-0.3, -0.7):
        for r in (0.0, 0.3, 0.9, 0.999):
            bound = c_lambda(-lam) * (1.0 - r * r) ** lam
            worst_slack = min(worst_slack, bound - i_lambda(lam, r))
    one = BoundaryFunction.from_trig(TrigPolynomial({0: 1.0 + 0.0j}))
    pairs = (Params(1.0, 1.0), Params(0.5, 0.5), Params(-0.25, -0.25))
    worst_extend = 0.0
    worst_limit = 0.0
    for p in pairs:
        for z in (0.3 + 0.0j, 0.45 + 0.45j, -0.2 + 0.6j, 0.85 + 0.0j):
            err = abs(poisson_extend(p, one, z) - m_radial(p, abs(z)))
            worst_extend = max(worst_extend, err)
        worst_limit = max(worst_limit, abs(m_radial(p, 0.9999) - 1.0))
    passed = (
        worst_mass <= UNIT_MASS_TOL
        and worst_slack >= -LEMMA_SLACK_TOL
        and worst_extend <= EXTEND_MATCH_TOL
        and worst_limit <= RADIAL_LIMIT_TOL
    )
    return {
        "name": "kernel-normalization",
        "passed": passed,
        "details": (
            f"unit mass {worst_mass:.2e}; bound slack {worst_slack:.2e}; "
            f"constant data {worst_extend:.2e}; radial limit {worst_limit:.2e}"
        ),
    }


# -- 4 ---------------------------------------------------------------------


def check_two_route_extension(seed: int) -> dict:
    """Kernel quadrature against the series expansion at random points."""
    rng = np.random.default_rng((seed, 4))
    worst = 0.0
    for _ in range(20):
        p = _draw_pair(rng)
        tp = _draw_trig(rng, 8)
        f = BoundaryFunction.from_trig(tp)
        e = _expansion(p, f, 8)
        r = float(rng.uniform(0.0, 0.9))
        th = float(rng.uniform(0.0, 2.0 * math.pi))
        z = r * complex(math.cos(th), math.sin(th))
        worst = max(worst, abs(poisson_extend(p, f, z) - eval_series(e, z)))
    return {
        "name": "two-route-extension",
        "passed": worst <= TWO_ROUTE_TOL,
        "details": f"max |quadrature - series| {worst:.2e} (tol {TWO_ROUTE_TOL})",
    }


# -- 5 ---------------------------------------------------------------------


def check_derivative_triangle(seed: int) -> dict:
    """Series derivatives against Wirtinger finite differences, the
    kernel-route decompositions, and the angular derivative identity."""
    corpus = default_corpus(seed)
    pts = _points_25()
    h = 1e-5
    worst_fd = worst_dec = worst_th = 0.0
    for p, f in corpus:
        e = _expansion(p, f, 5)
        for z in pts:
            dz = dz_series(e, z)
            dzb = dzbar_series(e, z)
            ux = (eval_series(e, z + h) - eval_series(e, z - h)) / (2.0 * h)
            uy = (eval_series(e, z + 1j * h) - eval_series(e, z - 1j * h)) / (2.0 * h)
            worst_fd = max(
                worst_fd,
                abs(dz - (ux - 1j * uy) / 2.0),
                abs(dzb - (ux + 1j * uy) / 2.0),
            )
            worst_dec = max(
                worst_dec,
                abs(z * dz - zdz_decomposition(p, f, z)),
                abs(z.conjugate() * dzb - zbar_dzbar_decomposition(p, f, z)),
            )
            worst_th = max(
                worst_th,
                abs(dtheta(p, f, z) - 1j * (z * dz - z.conjugate() * dzb)),
            )
    passed = (
        worst_fd <= WIRTINGER_FD_TOL
        and worst_dec <= DECOMPOSITION_TOL
        and worst_th <= DTHETA_IDENTITY_TOL
    )
    return {
        "name": "derivative-triangle",
        "passed": passed,
        "details": (
            f"FD {worst_fd:.2e} (tol {WIRTINGER_FD_TOL}); "
            f"decomposition {worst_dec:.2e}; dtheta identity {worst_th:.2e} "
            f"(tol {DECOMPOSITION_TOL})"
        ),
    }


# -- 6 ---------------------------------------------------------------------


def check_angular_derivative_bound(seed: int) -> dict:
    """Uniform angular-derivative norm bound, plus its attainment by the
    rotation-data case where the extension is the identity."""
    corpus = default_corpus(seed)
    lps = (1.0, 2.0, math.inf)
    worst_slack = math.inf
    ok = True
    for i, (p, f) in enumerate(corpus):
        rep = verify_dtheta_bound(p, f, lps[i % 3], (0.5, 0.9, 0.99))
        worst_slack = min(worst_slack, min(rep["slack"]))
        ok = ok and rep["pass"]
    p = Params(1.0, 1.0)
    f = BoundaryFunction.from_trig(TrigPolynomial({1: 1.0 + 0.0j}))
    rep = verify_dtheta_bound(p, f, math.inf, (0.5, 0.9, 1.0 - 1e-10))
    lhs_sup, rhs = max(rep["lhs"]), rep["rhs"][0]
    attained = abs(lhs_sup - 1.0) <= ATTAINMENT_TOL and abs(rhs - 1.0) <= ATTAINMENT_TOL
    return {
        "name": "angular-derivative-bound",
        "passed": ok and attained,
        "details": (
            f"min slack {worst_slack:.2e} (tol -{BOUND_SLACK_TOL}); "
            f"attainment lhs {lhs_sup:.12f} rhs {rhs:.12f}"
        ),
    }


# -- 7 ---------------------------------------------------------------------


def check_derivative_hardy_bound(seed: int) -> dict:
    """Per-radius and uniform derivative mean bounds on fixed cases."""
    tp = TrigPolynomial({1: 1.0 + 0.0j, -2: 0.5 + 0.0j, 0: 0.25 + 0.0j})
    f = BoundaryFunction.from_trig(tp)
    radii = (0.5, 0.9, 0.99, 0.999)
    ok = True
    worst_slack = math.inf
    for pair in ((1.0, 1.0), (0.5, 0.5), (2.0, -0.5)):
        p = Params(*pair)
        for lp in (1.0, 2.0, math.inf):
            rep = verify_dz_bounds(p, f, lp, radii)
            worst_slack = min(worst_slack, min(rep["slack"]))
            ok = ok and rep["pass"]
    one = BoundaryFunction.from_trig(TrigPolynomial({0: 1.0 + 0.0j}))
    rep = verify_dz_bounds(Params(-0.25, -0.25), one, 2.0, radii)
    worst_slack = min(worst_slack, min(rep["slack"]))
    ok = ok and rep["pass"]
    return {
        "name": "derivative-hardy-bound",
        "passed": ok,
        "details": f"min slack {worst_slack:.2e} (tol -{BOUND_SLACK_TOL})",
    }


# -- 8 ---------------------------------------------------------------------


def check_blowup_witness(seed: int) -> dict:
    """Witness derivatives blow up at the rate alpha+beta, with the
    divergence visible directly in the radial magnitude."""
    ok = True
    rows = []
    for pair in ((-0.25, -0.25), (-0.3, -0.4), (1.0, -1.5)):
        p = Params(*pair)
        w = rigidity_witness(p)
        gamma, _ = growth_exponent(w, 1.0, WITNESS_FIT_RADII)
        ratio = w.radial_magnitude(0.999) / w.radial_magnitude(0.9)
        ok = ok and abs(gamma - p.total) <= EXPONENT_TOL and ratio >= DIVERGENCE_FACTOR
        rows.append(f"({p.alpha},{p.beta}): gamma {gamma:.3f} ratio {ratio:.1f}")
    return {
        "name": "blowup-witness",
        "passed": ok,
        "details": "; ".join(rows),
    }


# -- 9 ---------------------------------------------------------------------

_MEMBERSHIP_MATRIX = (
    ((1.0, 1.0), 2.0, Classification.HARDY_MEMBER, None, None),
    ((0.5, 0.5), math.inf, Classification.HARDY_MEMBER, None, None),
    ((2.0, -0.5), 1.0, Classification.HARDY_MEMBER, None, None),
    ((-0.25, -0.25), 1.0, Classification.RIGIDITY_ZERO, None, 2.0),
    ((-0.3, -0.4), 3.0, Classification.RIGIDITY_ZERO, None, 1.0 / 0.7),
    ((1.0, -1.5), 1.0, Classification.RIGIDITY_POLYHARMONIC, 2, 2.0),
    ((2.0, -2.5), 4.0, Classification.RIGIDITY_POLYHARMONIC, 3, 2.0),
    ((-1.5, 1.0), 2.0, Classification.RIGIDITY_POLYHARMONIC, 2, 2.0),
    ((0.0, -0.5), 1.5, Classification.AREA_LEBESGUE_ONLY, None, 2.0),
    ((0.5, -0.5), 2.0, Classification.RIGIDITY_ZERO, None, None),
    ((0.0, 0.0), 2.0, Classification.HARDY_MEMBER, None, None),
    ((-0.5, -0.6), 2.0, Classification.INADMISSIBLE, None, None),
)


def check_membership_table(seed: int) -> dict:
    """Decision table on a 12-case matrix, re-run to confirm determinism."""
    mismatches = []
    for pair, lp, want_cls, want_order, want_cutoff in _MEMBERSHIP_MATRIX:
        p = Params(*pair)
        v = membership_verdict(p, lp)
        again = membership_verdict(p, lp)
        good = (
            v == again
            and v.classification is want_cls
            and v.polyharmonic_order == want_order
        )
        if want_cutoff is not None:
            good = good and v.lp_area_cutoff is not None
            good = good and abs(v.lp_area_cutoff - want_cutoff) < 1e-12
        if not good:
            mismatches.append(f"({pair[0]},{pair[1]}) -> {v.classification.value}")
    return {
        "name": "membership-table",
        "passed": not mismatches,
        "details": (
            f"{len(_MEMBERSHIP_MATRIX) - len(mismatches)}/"
            f"{len(_MEMBERSHIP_MATRIX)} classifications match"
            + ("; mismatches: " + ", ".join(mismatches) if mismatches else "")
        ),
    }


# -- 10 --------------------------------------------------------------------


def check_polyharmonic_decomposition(seed: int) -> dict:
    """Integer-alpha expansions split into alpha+1 polynomial-weighted
    analytic grades that reproduce the extension."""
    p = Params(1.0, -1.5)
    tp = TrigPolynomial(
        {1: 1.0 + 0.0j, 0: 0.2 + 0.0j, -1: 0.4 + 0.0j, 2: 0.3 + 0.0j}
    )
    f = BoundaryFunction.from_trig(tp)
    e = _expansion(p, f, 4)
    d = polyharmonic_decompose(e)
    shape_ok = len(d.parts) == 2 and len(d.conj_parts) == 1
    pts = [0.5 * complex(math.cos(t), math.sin(t)) * s for t in (0.3, 1.7, 3.4, 5.1) for s in (0.4, 1.0, 1.2)]
    recon = max(abs(d.evaluate(z) - eval_series(e, z)) for z in pts)
    ev = d.as_evaluator()
    resid = max(abs(operator_residual(p, ev, z)) for z in pts)
    passed = shape_ok and recon <= RECONSTRUCTION_TOL and resid <= OPERATOR_RESIDUAL_TOL
    return {
        "name": "polyharmonic-decomposition",
        "passed": passed,
        "details": (
            f"parts {len(d.parts)}+{len(d.conj_parts)} conj; reconstruction "
            f"{recon:.2e} (tol {RECONSTRUCTION_TOL}); residual {resid:.2e}"
        ),
    }


# -- 11 --------------------------------------------------------------------


def check_operator_annihilation(seed: int) -> dict:
    """Finite-difference operator residual vanishes on every constructed
    solution: kernels, radial modes, series and quadrature extensions."""
    pts = _points_25()
    corpus = default_corpus(seed)
    targets = []
    for pair in ((1.0, 1.0), (2.0, -0.5), (-0.25, -0.25)):
        p = Params(*pair)
        targets.append((p, lambda z, p=p: kernel_K(p, z), f"kernel {pair}"))
    for pair, k in (((1.0, 1.0), 1), ((-0.3, -0.4), 2)):
        p = Params(*pair)
        targets.append((p, lambda z, p=p, k=k: m_k(p, k, z), f"mode {pair} k={k}"))
    for p, f in corpus[:2]:
        e = _expansion(p, f, 5)
        targets.append((p, SeriesEvaluator(e, mode="u"), "series extension"))
    p, f = corpus[2]
    targets.append((p, QuadratureEvaluator(p, f), "quadrature extension"))
    worst = 0.0
    worst_label = ""
    for p, u, label in targets:
        resid = max(abs(operator_residual(p, u, z)) for z in pts)
        if resid > worst:
            worst, worst_label = resid, label
    return {
        "name": "operator-annihilation",
        "passed": worst <= OPERATOR_RESIDUAL_TOL,
        "details": (
            f"max residual {worst:.2e} (tol {OPERATOR_RESIDUAL_TOL}) at {worst_label}"
        ),
    }


# -- 12 --------------------------------------------------------------------


def check_quasiregular_bound(seed: int) -> dict:
    """For an analytic extension the dilatation constant is 1 and the
    derivative means obey the quasi-regular chain bound."""
    p = Params(0.0, 1.0)
    tp = TrigPolynomial({1: 1.0 + 0.0j, 2: 0.3 + 0.0j})
    f = BoundaryFunction.from_trig(tp)
    e = _expansion(p, f, 2)
    dz_ev = SeriesEvaluator(e, mode="dz")
    dzbar_ev = SeriesEvaluator(e, mode="dzbar")
    grid = [
        r * complex(math.cos(t), math.sin(t))
        for r in (0.2, 0.5, 0.8)
        for t in (0.5, 1.6, 2.7, 3.8, 4.9, 6.0)
    ]
    khat = quasiregularity_constant(dz_ev, dzbar_ev, grid)
    norm_cap = abs(c_alpha_beta(p)) * c_lambda(p.total + 1.0)
    ok = math.isfinite(khat) and khat <= 1.0 + 1e-9
    worst_gap = math.inf
    for lp in (1.0, 2.0, math.inf):
        rhs = khat * norm_cap * lp_norm(derivative(f), lp)
        for r in (0.5, 0.9, 0.99):
            n = 4096
            thetas = np.arange(n) * (2.0 * np.pi / n)
            zs = r * np.exp(1j * thetas)
            vals = np.abs(zs * dz_ev.eval_circle(r, thetas))
            lhs = float(vals.max()) if math.isinf(lp) else float(
                np.mean(vals**lp) ** (1.0 / lp)
            )
            worst_gap = min(worst_gap, rhs - lhs)
            ok = ok and lhs <= rhs + BOUND_SLACK_TOL
    return {
        "name": "quasiregular-bound",
        "passed": ok,
        "details": f"K-hat {khat:.6f}; min bound gap {worst_gap:.2e}",
    }


# -- 13 --------------------------------------------------------------------


def check_radial_weight_reduction(seed: int) -> dict:
    """Single-weight operator reduces to the symmetric pair, and its
    membership verdicts follow from the decision table."""
    ok = True
    notes = []
    p1 = t_alpha_params(1.0)
    ok = ok and p1 == Params(0.5, 0.5)
    for lp in (1.0, 2.0, math.inf):
        v = membership_verdict(p1, lp)
        ok = ok and v.classification is Classification.HARDY_MEMBER
    notes.append("alpha=1 -> member")
    p2 = t_alpha_params(-0.5)
    ok = ok and p2 == Params(-0.25, -0.25)
    v = membership_verdict(p2, 1.0)
    ok = ok and v.classification is Classification.RIGIDITY_ZERO
    ok = ok and v.lp_area_cutoff is not None and abs(v.lp_area_cutoff - 2.0) < 1e-12
    w = rigidity_witness(p2)
    gamma, _ = growth_exponent(w, 1.0, WITNESS_FIT_RADII)
    ok = ok and abs(gamma + 0.5) <= EXPONENT_TOL
    notes.append(f"alpha=-0.5 -> rigidity, cutoff 2, witness gamma {gamma:.3f}")
    try:
        t_alpha_params(-1.0)
        ok = False
        notes.append("alpha=-1 accepted")
    except DomainError:
        notes.append("alpha=-1 rejected")
    return {
        "name": "radial-weight-reduction",
        "passed": ok,
        "details": "; ".join(notes),
    }


CHECKS = (
    check_hypergeometric_identities,
    check_gauss_limit,
    check_kernel_normalization,
    check_two_route_extension,
    check_derivative_triangle,
    check_angular_derivative_bound,
    check_derivative_hardy_bound,
    check_blowup_witness,
    check_membership_table,
    check_polyharmonic_decomposition,
    check_operator_annihilation,
    check_quasiregular_bound,
    check_radial_weight_reduction,
)

CHECK_NAMES = (
    "hypergeometric-identities",
    "gauss-limit",
    "kernel-normalization",
    "two-route-extension",
    "derivative-triangle",
    "angular-derivative-bound",
    "derivative-hardy-bound",
    "blowup-witness",
    "membership-table",
    "polyharmonic-decomposition",
    "operator-annihilation",
    "quasiregular-bound",
    "radial-weight-reduction",
)


def run_all(seed: int = 0):
    """Run every check; returns the list of report dicts in fixed order."""
    return [check(seed) for check in CHECKS]
