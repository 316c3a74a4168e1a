"""Command line front end.

Subcommands share one flat flag set (--cmd selects the action):

  hypergeom   tabulate F(a,b;c;x), its derivative, and the x -> 1 limit
              on a grid; (a, b, c) come from --alpha, --beta, --p and the
              grid from --radii
  extend      read boundary data and emit the extension and both
              Wirtinger derivatives on an (r, theta) grid via the series
              route, with the quadrature-route disagreement per point
  hardy-scan  integral-mean profiles and growth-exponent fits for the
              extension and its three derivatives
  verify      run the verification suite (or a targeted report for one
              parameter pair) and report PASS/FAIL per check

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Identical configurations (including --seed) produce byte-identical
output files: floats are emitted with 17 significant digits and no
timestamps or environment data are included.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .boundary import (
    BoundaryFunction,
    TrigPolynomial,
    derivative,
    fourier_coefficients,
    load_boundary,
)
from .errors import AbharmonicError, DomainError
from .extension import (
    SeriesEvaluator,
    coeffs_from_boundary,
    poisson_extend,
)
from .hardy import (
    DEFAULT_FIT_RADII,
    WITNESS_FIT_RADII,
    Classification,
    HardyProfile,
    growth_exponent,
    membership_verdict,
    rigidity_witness,
    verify_dtheta_bound,
    verify_dz_bounds,
)
from .kernels import Params
from .special import HypParams, hyp2f1, hyp2f1_at_one, hyp2f1_derivative
from .verify import CHECK_NAMES, run_all

_COMMANDS = ("hypergeom", "extend", "hardy-scan", "verify")


@dataclass(frozen=True)
class RunConfig:
    command: str
    alpha: float | None
    beta: float | None
    p: float
    n_samples: int
    radii: tuple
    input_path: str | None
    output_path: str | None
    format: str
    seed: int


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_radii(text: str) -> tuple:
    if text is None:
        return ()
    parts = [s for s in text.split(",") if s.strip()]
    return tuple(float(s) for s in parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abharmonic",
        description="Weighted harmonic extensions on the unit disc: "
        "kernels, hypergeometric series, derivative bounds, and "
        "Hardy-space verdicts.",
        epilog="verify covers these checks: " + ", ".join(CHECK_NAMES),
    )
    parser.add_argument("--cmd", required=True, choices=_COMMANDS, help="action to run")
    parser.add_argument("--alpha", type=float, default=None, help="first weight exponent (hypergeom: numerator a)")
    parser.add_argument("--beta", type=float, default=None, help="second weight exponent (hypergeom: numerator b)")
    parser.add_argument("--p", type=float, default=2.0, help="mean exponent in [1, inf]; 'inf' accepted (hypergeom: denominator c)")
    parser.add_argument("--n", type=int, default=2048, dest="n_samples", help="boundary sample count (power of two)")
    parser.add_argument("--radii", type=str, default=None, help="comma-separated radius grid (hypergeom: argument grid)")
    parser.add_argument("--in", type=str, default=None, dest="input_path", help="boundary data file (.csv or .json)")
    parser.add_argument("--out", type=str, default=None, dest="output_path", help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.cmd,
        alpha=args.alpha,
        beta=args.beta,
        p=args.p,
        n_samples=args.n_samples,
        radii=_parse_radii(args.radii),
        input_path=args.input_path,
        output_path=args.output_path,
        format=args.format,
        seed=args.seed,
    )


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _rows_to_json(header, rows) -> str:
    payload = [dict(zip(header, row)) for row in rows]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write_table(cfg: RunConfig, header, rows) -> None:
    if cfg.format == "json":
        _emit(cfg, _rows_to_json(header, rows))
    else:
        _emit(cfg, _rows_to_csv(header, rows))


def _load_input(cfg: RunConfig) -> BoundaryFunction:
    if cfg.input_path is None:
        raise DomainError("this command needs boundary data, pass --in FILE")
    return load_boundary(cfg.input_path, cfg.n_samples)


def _require_pair(cfg: RunConfig) -> Params:
    if cfg.alpha is None or cfg.beta is None:
        raise DomainError("this command needs --alpha and --beta")
    return Params(cfg.alpha, cfg.beta)


def _expansion_for(p: Params, f: BoundaryFunction):
    kmax = f.exact.max_freq if f.exact is not None else min(f.n // 2 - 1, 64)
    return coeffs_from_boundary(p, fourier_coefficients(f, max(kmax, 1)))


def cmd_hypergeom(cfg: RunConfig) -> int:
    if cfg.alpha is None or cfg.beta is None:
        raise DomainError("hypergeom needs --alpha and --beta (series numerators)")
    if not cfg.radii:
        raise DomainError("hypergeom needs a non-empty --radii grid of arguments")
    hp = HypParams(cfg.alpha, cfg.beta, cfg.p)
    try:
        limit = hyp2f1_at_one(hp)
    except DomainError:
        limit = math.nan
    rows = []
    for x in cfg.radii:
        rows.append((float(x), hyp2f1(hp, float(x)), hyp2f1_derivative(hp, float(x)), limit))
    _write_table(cfg, ("x", "F", "dF", "limitF"), rows)
    return 0


def cmd_extend(cfg: RunConfig) -> int:
    p = _require_pair(cfg)
    p.require_poisson()
    f = _load_input(cfg)
    e = _expansion_for(p, f)
    u_ev = SeriesEvaluator(e, mode="u")
    dz_ev = SeriesEvaluator(e, mode="dz")
    dzbar_ev = SeriesEvaluator(e, mode="dzbar")
    radii = cfg.radii or (0.3, 0.6, 0.9)
    thetas = [2.0 * math.pi * j / 16 for j in range(16)]
    rows = []
    for r in radii:
        for th in thetas:
            z = r * complex(math.cos(th), math.sin(th))
            u = u_ev(z)
            dv = dz_ev(z)
            dvb = dzbar_ev(z)
            disagreement = abs(u - poisson_extend(p, f, z))
            rows.append(
                (
                    float(r),
                    float(th),
                    u.real,
                    u.imag,
                    dv.real,
                    dv.imag,
                    dvb.real,
                    dvb.imag,
                    disagreement,
                )
            )
    header = (
        "r",
        "theta",
        "re_u",
        "im_u",
        "re_dz",
        "im_dz",
        "re_dzbar",
        "im_dzbar",
        "route_disagreement",
    )
    _write_table(cfg, header, rows)
    return 0


def cmd_hardy_scan(cfg: RunConfig) -> int:
    p = _require_pair(cfg)
    p.require_poisson()
    f = _load_input(cfg)
    e = _expansion_for(p, f)
    e_dot = _expansion_for(p, derivative(f))
    targets = (
        ("u", SeriesEvaluator(e, mode="u")),
        ("dz", SeriesEvaluator(e, mode="dz")),
        ("dzbar", SeriesEvaluator(e, mode="dzbar")),
        ("dtheta", SeriesEvaluator(e_dot, mode="u")),
    )
    radii = cfg.radii or DEFAULT_FIT_RADII
    rows = []
    for name, ev in targets:
        profile = HardyProfile.build(ev, cfg.p, radii)
        gamma = profile.fitted_exponent
        resid = profile.fit_residual
        for r, m in zip(profile.radii, profile.means):
            rows.append(
                (
                    name,
                    cfg.p,
                    float(r),
                    float(m),
                    math.nan if gamma is None else gamma,
                    math.nan if resid is None else resid,
                )
            )
    _write_table(cfg, ("target", "p", "r", "mean", "fitted_exponent", "fit_residual"), rows)
    return 0


def _targeted_verify(cfg: RunConfig, p: Params) -> int:
    lines = []
    all_pass = True
    v = membership_verdict(p, cfg.p)
    lines.append(
        f"PASS membership: ({_fmt(p.alpha)},{_fmt(p.beta)}) -> {v.classification.value}"
        + (f" (order {v.polyharmonic_order})" if v.polyharmonic_order else "")
        + (f" (area cutoff p < {_fmt(v.lp_area_cutoff)})" if v.lp_area_cutoff else "")
    )
    if v.classification is Classification.INADMISSIBLE:
        print("\n".join(lines))
        print("parameter pair outside the admissible domain")
        return 2
    if -1.0 < p.total < 0.0:
        w = rigidity_witness(p)
        gamma, _ = growth_exponent(w, 1.0, WITNESS_FIT_RADII)
        ratio = w.radial_magnitude(0.999) / w.radial_magnitude(0.9)
        ok = abs(gamma - p.total) <= 0.05 and ratio >= 2.0
        all_pass = all_pass and ok
        flag = "DIVERGENT-as-expected" if ok else "NOT-DIVERGENT"
        lines.append(
            f"{'PASS' if ok else 'FAIL'} witness: mode k={w.k} ({w.side}) "
            f"growth exponent {gamma:.4f} ~ {_fmt(p.total)}, "
            f"M_1 ratio {ratio:.2f} -> {flag}"
        )
    if cfg.input_path is not None:
        f = _load_input(cfg)
    else:
        f = BoundaryFunction.from_trig(
            TrigPolynomial({1: 1.0 + 0.0j, -2: 0.5 + 0.0j, 0: 0.25 + 0.0j}),
            n=cfg.n_samples,
        )
    radii = cfg.radii or (0.5, 0.9, 0.99)
    rep = verify_dtheta_bound(p, f, cfg.p, radii)
    all_pass = all_pass and rep["pass"]
    lines.append(
        f"{'PASS' if rep['pass'] else 'FAIL'} angular-derivative-bound: "
        f"min slack {min(rep['slack']):.3e}"
    )
    rep = verify_dz_bounds(p, f, cfg.p, radii)
    all_pass = all_pass and rep["pass"]
    lines.append(
        f"{'PASS' if rep['pass'] else 'FAIL'} derivative-hardy-bound: "
        f"min slack {min(rep['slack']):.3e}"
    )
    print("\n".join(lines))
    return 0 if all_pass else 1


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.alpha is not None or cfg.beta is not None:
        return _targeted_verify(cfg, _require_pair(cfg))
    reports = run_all(cfg.seed)
    for rep in reports:
        print(f"{'PASS' if rep['passed'] else 'FAIL'} {rep['name']}: {rep['details']}")
    if cfg.output_path:
        rows = [(r["name"], str(r["passed"]), r["details"]) for r in reports]
        _write_table(cfg, ("name", "passed", "details"), rows)
    return 0 if all(r["passed"] for r in reports) else 1


_DISPATCH = {
    "hypergeom": cmd_hypergeom,
    "extend": cmd_extend,
    "hardy-scan": cmd_hardy_scan,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    if not math.isinf(cfg.p) and cfg.p < 1.0 and cfg.command != "hypergeom":
        print(f"--p must be >= 1 or inf, got {cfg.p}", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[cfg.command](cfg)
    except AbharmonicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
