"""Command-line interface: point evaluation, sweeps, self-verification, limits.

Output conventions: 12 significant digits, locale-independent, LF line
endings. Sweep rows are emitted in row-major (g0, gamma0, beta) order no
matter how many worker threads computed them, and the whole CSV is
byte-identical across runs and thread counts.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import lattice, limits, modestate, observables, spinchain_oracle
from .model import ModelParams, QuenchSpec
from .quadrature import QuadratureConfig

CSV_HEADER = [
    "g0",
    "gamma0",
    "g_tau",
    "gamma_tau",
    "beta",
    "C",
    "D",
    "S_irr",
    "ratio",
    "W",
    "dF",
    "lowT",
    "error",
]


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _parse_beta(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid beta {text!r}") from None
    if math.isnan(value) or value <= 0.0:
        raise argparse.ArgumentTypeError(f"beta must be positive or 'inf', got {text!r}")
    return value


def _parse_axis(text: str, *, beta: bool = False) -> tuple:
    """Axis spec: 'lo:hi:count[:log]', a comma list, or a single value."""
    parse_one = _parse_beta if beta else float
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise argparse.ArgumentTypeError(f"bad axis spec {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        spacing = parts[3] if len(parts) == 4 else "lin"
        if count < 1:
            raise argparse.ArgumentTypeError("axis count must be >= 1")
        if count == 1:
            return (lo,)
        if spacing == "lin":
            return tuple(np.linspace(lo, hi, count).tolist())
        if spacing == "log":
            if lo <= 0.0 or hi <= 0.0:
                raise argparse.ArgumentTypeError("log spacing needs positive endpoints")
            return tuple(np.geomspace(lo, hi, count).tolist())
        raise argparse.ArgumentTypeError(f"unknown spacing {spacing!r}")
    if "," in text:
        return tuple(parse_one(tok) for tok in text.split(",") if tok.strip())
    return (parse_one(text),)


def _compute_cells(g0, gamma0, g_tau, gamma_tau, beta, cfg: QuadratureConfig) -> list:
    """One output row, already formatted; failures land in the error cell."""
    cells = [_fmt(g0), _fmt(gamma0), _fmt(g_tau), _fmt(gamma_tau), _fmt(beta)]
    try:
        pre = ModelParams(g0, gamma0)
        post = ModelParams(g_tau, gamma_tau)
        if math.isinf(beta):
            zb = limits.zero_t_breakdown(pre, post, cfg)
            cells += [
                _fmt(zb.coherence),
                _fmt(zb.population_over_beta),
                _fmt(zb.lag_over_beta),
                "",
                "",
                "",
                "1",
                "",
            ]
        else:
            bd = observables.breakdown(QuenchSpec(pre, post, beta), cfg)
            cells += [
                _fmt(bd.coherence),
                _fmt(bd.population),
                _fmt(bd.lag),
                _fmt(bd.ratio),
                _fmt(bd.work),
                _fmt(bd.dfree),
                "0",
                "",
            ]
    except Exception as exc:
        cells += [""] * (len(CSV_HEADER) - len(cells) - 1)
        cells.append(f"{type(exc).__name__}: {exc}")
    return cells


def cmd_point(args) -> int:
    cfg = QuadratureConfig(rel_tol=args.rel_tol)
    gamma_tau = args.gamma0 if args.gammatau is None else args.gammatau
    cells = _compute_cells(args.g0, args.gamma0, args.gtau, gamma_tau, args.beta, cfg)
    if cells[-1]:
        print(cells[-1], file=sys.stderr)
        return 1
    for name, cell in zip(CSV_HEADER, cells):
        print(f"{name}={cell}")
    return 0


def cmd_sweep(args) -> int:
    cfg = QuadratureConfig(rel_tol=args.rel_tol)
    g0s = _parse_axis(args.g0)
    gamma0s = _parse_axis(args.gamma0)
    betas = _parse_axis(args.beta, beta=True)
    if args.delta == 0.0:
        print("sweep amplitude --delta must be nonzero", file=sys.stderr)
        return 2

    points = []
    for g0 in g0s:
        for gamma0 in gamma0s:
            for beta in betas:
                if args.kind == "field":
                    points.append((g0, gamma0, g0 + args.delta, gamma0, beta))
                else:
                    points.append((g0, gamma0, g0, gamma0 + args.delta, beta))

    def work(pt):
        return _compute_cells(*pt, cfg)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(work, points))
    else:
        rows = [work(pt) for pt in points]

    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)

    failures = sum(1 for row in rows if row[-1])
    if failures:
        print(f"{failures} of {len(rows)} rows failed", file=sys.stderr)
        return 1
    return 0


def cmd_limits(args) -> int:
    cfg = QuadratureConfig()
    if args.mode == "high-t":
        gamma_tau = args.gamma0 if args.gammatau is None else args.gammatau
        ht = limits.high_t_coefficients(
            ModelParams(args.g0, args.gamma0), ModelParams(args.gtau, gamma_tau), cfg
        )
        record = {"c_coeff": ht.c_coeff, "d_coeff": ht.d_coeff, "lag_coeff": ht.lag_coeff}
    elif args.mode == "infinitesimal":
        ht = limits.infinitesimal_high_t(
            args.g0, args.gamma0, dg=args.dg, dgamma=args.dgamma, config=cfg
        )
        record = {"c_coeff": ht.c_coeff, "d_coeff": ht.d_coeff, "lag_coeff": ht.lag_coeff}
    elif args.mode == "zero-t":
        gamma_tau = args.gamma0 if args.gammatau is None else args.gammatau
        zb = limits.zero_t_breakdown(
            ModelParams(args.g0, args.gamma0), ModelParams(args.gtau, gamma_tau), cfg
        )
        record = {
            "C": zb.coherence,
            "D_over_beta": zb.population_over_beta,
            "S_irr_over_beta": zb.lag_over_beta,
        }
    elif args.mode == "chi":
        record = {"chi": limits.susceptibility(args.g0, args.gamma0, step=args.step)}
    else:
        scan = limits.kink_cusp_scan(
            args.gamma0,
            args.delta,
            args.beta,
            window=args.window,
            resolution=args.resolution,
            curve=args.curve,
        )
        record = {
            "curve": scan.curve,
            "center_value": scan.center_value,
            "s_minus": scan.s_minus,
            "s_plus": scan.s_plus,
            "jump": scan.jump,
            "noise": scan.noise,
            "flagged": int(scan.flagged),
            "peak_value": scan.peak_value,
            "peak_location": scan.peak_location,
            "peak_excess": scan.peak_excess,
        }
    for key, value in record.items():
        print(f"{key}={value if isinstance(value, str) else _fmt(value)}")
    return 0


# ---------------------------------------------------------------------------
# verify: built-in oracle and identity suites


def _random_spec(rng) -> QuenchSpec:
    g0 = float(rng.uniform(0.0, 3.0))
    gamma0 = float(rng.uniform(0.0, 1.0))
    beta = float(10.0 ** rng.uniform(-3.0, 3.0))
    kind = int(rng.integers(0, 3))
    mag = float(10.0 ** rng.uniform(-2.0, -1.0))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    dg = sign * mag if kind in (0, 2) else 0.0
    dgam = 0.0
    if kind in (1, 2):
        dgam = float(np.copysign(10.0 ** rng.uniform(-2.0, -1.0), rng.random() - 0.5))
        if not 0.0 <= gamma0 + dgam <= 1.0:
            dgam = -dgam
    return QuenchSpec(ModelParams(g0, gamma0), ModelParams(g0 + dg, gamma0 + dgam), beta)


def _gap(params: ModelParams) -> float:
    ks = np.linspace(0.0, math.pi, 4001)
    return float(np.min(np.hypot(params.g - np.cos(ks), params.gamma * np.sin(ks))))


def _noncritical_specs(rng, count: int, min_gap: float = 0.2) -> list:
    out = []
    while len(out) < count:
        spec = _random_spec(rng)
        if _gap(spec.pre) > min_gap and _gap(spec.post) > min_gap:
            out.append(spec)
    return out


def _pair_samples(rng, count: int):
    for _ in range(count):
        spec = _random_spec(rng)
        k = float(rng.uniform(1e-3, math.pi - 1e-3))
        yield spec, k


def _check_mode_oracle(rng) -> dict:
    worst = 0.0
    for spec, k in _pair_samples(rng, 150):
        rho = modestate.build_mode_state(spec, k)
        deph = modestate.dephase(rho)
        s_rho = modestate.vn_entropy(rho)
        s_deph = modestate.vn_entropy(deph)
        eps0 = float(np.hypot(spec.pre.g - math.cos(k), spec.pre.gamma * math.sin(k)))
        epsT = float(np.hypot(spec.post.g - math.cos(k), spec.post.gamma * math.sin(k)))
        ld_t = modestate.thermal_pair_log_diag(epsT, spec.beta)
        x = spec.beta * eps0
        s_closed = 2.0 * (x + math.log1p(math.exp(-2.0 * x)) - x * math.tanh(x))
        h_tau = modestate.pair_hamiltonian_diag(spec.post, k)
        h_pre = modestate.pair_hamiltonian_diag(spec.pre, k)
        p_pre = np.exp(modestate.thermal_pair_log_diag(eps0, spec.beta))
        diffs = [
            (s_deph - s_rho) - observables.coherence_integrand(spec, k),
            modestate.relative_entropy(rho, sigma_log_diag=ld_t)
            - observables.lag_integrand(spec, k),
            modestate.relative_entropy(deph, sigma_log_diag=ld_t)
            - observables.population_integrand(spec, k),
            s_rho - s_closed,
            (float(np.diag(rho.matrix) @ h_tau) - float(p_pre @ h_pre))
            - observables.work_integrand(spec, k),
        ]
        worst = max(worst, max(abs(d) for d in diffs))
    return {
        "check": "mode_pair_oracle_abs_diff",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-10,
    }


def _check_identities(rng, which: str) -> dict:
    worst = 0.0
    for _ in range(30):
        spec = _random_spec(rng)
        bd = observables.breakdown(spec)
        if which == "splitting":
            delta = abs(bd.coherence + bd.population - bd.lag)
        else:
            delta = abs(spec.beta * (bd.work - bd.dfree) - bd.lag)
        worst = max(worst, delta / max(abs(bd.lag), 1e-300))
    return {
        "check": f"{which}_identity_rel",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-10,
    }


def _check_high_t(rng) -> dict:
    worst = 0.0
    beta = 1e-3
    for _ in range(10):
        spec = _random_spec(rng)
        spec = QuenchSpec(spec.pre, spec.post, beta)
        bd = observables.breakdown(spec)
        ht = limits.high_t_coefficients(spec.pre, spec.post)
        b2 = beta * beta
        # error measured against the total coefficient: a subdominant C or D
        # carries the same absolute O(beta^2) correction as the lag, so its
        # own magnitude is the wrong yardstick
        scale = ht.lag_coeff + 1e-300
        for got, want in (
            (bd.coherence / b2, ht.c_coeff),
            (bd.population / b2, ht.d_coeff),
            (bd.lag / b2, ht.lag_coeff),
        ):
            worst = max(worst, abs(got - want) / scale)
    return {
        "check": "high_t_coefficients_rel",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-4,
    }


def _check_zero_t(rng) -> dict:
    worst = 0.0
    beta = 500.0
    for spec in _noncritical_specs(rng, 6):
        spec = QuenchSpec(spec.pre, spec.post, beta)
        bd = observables.breakdown(spec)
        zb = limits.zero_t_breakdown(spec.pre, spec.post)
        denom = max(zb.coherence, 1e-300)
        worst = max(worst, abs(bd.coherence - zb.coherence) / denom)
        worst = max(worst, abs(bd.lag / (beta * zb.lag_over_beta) - 1.0))
    return {
        "check": "zero_t_convergence_rel",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-3,
    }


def _check_lattice(rng) -> dict:
    worst = 0.0
    for spec in _noncritical_specs(rng, 6):
        bd = observables.breakdown(spec)
        fin = lattice.breakdown_finite(lattice.LatticeSpec(2**16, spec))
        for name in ("coherence", "population", "lag", "work", "dfree"):
            worst = max(worst, abs(getattr(bd, name) - getattr(fin, name)))
    return {
        "check": "lattice_convergence_abs",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-8,
    }


def _check_dense_trend(rng) -> dict:
    spec = QuenchSpec(ModelParams(0.5, 1.0), ModelParams(0.51, 1.0), 1.0)
    diffs = []
    for n in (4, 6, 8):
        dense = spinchain_oracle.dense_breakdown(n, spec)
        fin = lattice.breakdown_finite(lattice.LatticeSpec(n, spec))
        diffs.append(abs(dense.lag - fin.lag))
    ratios = [diffs[i + 1] / diffs[i] for i in range(len(diffs) - 1)]
    return {
        "check": "dense_vs_lattice_trend_max_ratio",
        "value": max(ratios),
        "expected": 1.0,
        "tolerance": 0.0,
    }


def _check_pinching(rng) -> dict:
    worst = math.inf
    for spec, k in _pair_samples(rng, 100):
        rho = modestate.build_mode_state(spec, k)
        worst = min(worst, modestate.vn_entropy(modestate.dephase(rho)) - modestate.vn_entropy(rho))
    return {
        "check": "dephasing_pinching_min_gain",
        "value": worst,
        "expected": 0.0,
        "tolerance": 1e-12,
    }


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    checks = [
        _check_mode_oracle(rng),
        _check_identities(rng, "splitting"),
        _check_identities(rng, "work"),
        _check_high_t(rng),
        _check_zero_t(rng),
        _check_lattice(rng),
        _check_dense_trend(rng),
        _check_pinching(rng),
    ]
    all_pass = True
    for chk in checks:
        tol = args.tolerance if args.tolerance is not None else chk["tolerance"]
        if chk["check"] == "dense_vs_lattice_trend_max_ratio":
            ok = chk["value"] <= chk["expected"] + tol
        elif chk["check"] == "dephasing_pinching_min_gain":
            ok = chk["value"] >= chk["expected"] - tol
        else:
            ok = abs(chk["value"] - chk["expected"]) <= tol
        all_pass = all_pass and ok
        print(
            json.dumps(
                {
                    "check": chk["check"],
                    "status": "pass" if ok else "fail",
                    "value": chk["value"],
                    "expected": chk["expected"],
                    "tolerance": tol,
                }
            )
        )
    return 0 if all_pass else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xyquench",
        description="Entropy production and its coherence/population split "
        "for sudden quenches of the XY chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one quench")
    point.add_argument("--g0", type=float, required=True)
    point.add_argument("--gamma0", type=float, required=True)
    point.add_argument("--gtau", type=float, required=True)
    point.add_argument("--gammatau", type=float, default=None)
    point.add_argument("--beta", type=_parse_beta, required=True)
    point.add_argument("--rel-tol", type=float, default=1e-10)
    point.set_defaults(func=cmd_point)

    sweep = sub.add_parser("sweep", help="grid sweep to CSV")
    sweep.add_argument("--kind", choices=("field", "anisotropy"), required=True)
    sweep.add_argument("--delta", type=float, required=True, help="signed quench amplitude")
    sweep.add_argument("--g0", required=True, help="axis: lo:hi:count[:log] or comma list")
    sweep.add_argument("--gamma0", required=True, help="axis spec")
    sweep.add_argument("--beta", required=True, help="axis spec; 'inf' allowed in lists")
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--threads", type=int, default=1)
    sweep.add_argument("--rel-tol", type=float, default=1e-10)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="run the built-in oracle/identity suites")
    verify.add_argument("--seed", type=int, default=20240901)
    verify.add_argument(
        "--tolerance", type=float, default=None, help="override every check tolerance"
    )
    verify.set_defaults(func=cmd_verify)

    lim = sub.add_parser("limits", help="analytic limit formulas")
    lsub = lim.add_subparsers(dest="mode", required=True)
    ht = lsub.add_parser("high-t")
    ht.add_argument("--g0", type=float, required=True)
    ht.add_argument("--gamma0", type=float, required=True)
    ht.add_argument("--gtau", type=float, required=True)
    ht.add_argument("--gammatau", type=float, default=None)
    inf_p = lsub.add_parser("infinitesimal")
    inf_p.add_argument("--g0", type=float, required=True)
    inf_p.add_argument("--gamma0", type=float, required=True)
    inf_p.add_argument("--dg", type=float, default=0.0)
    inf_p.add_argument("--dgamma", type=float, default=0.0)
    zt = lsub.add_parser("zero-t")
    zt.add_argument("--g0", type=float, required=True)
    zt.add_argument("--gamma0", type=float, required=True)
    zt.add_argument("--gtau", type=float, required=True)
    zt.add_argument("--gammatau", type=float, default=None)
    chi = lsub.add_parser("chi")
    chi.add_argument("--g0", type=float, required=True)
    chi.add_argument("--gamma0", type=float, required=True)
    chi.add_argument("--step", type=float, default=1e-4)
    scan = lsub.add_parser("scan")
    scan.add_argument("--gamma0", type=float, required=True)
    scan.add_argument("--delta", type=float, required=True)
    scan.add_argument("--beta", type=_parse_beta, required=True)
    scan.add_argument("--window", type=float, default=0.1)
    scan.add_argument("--resolution", type=float, default=0.005)
    scan.add_argument(
        "--curve", choices=("auto", "full", "zero_t", "infinitesimal"), default="auto"
    )
    lim.set_defaults(func=cmd_limits)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
