"""Command-line driver: one subcommand per experiment.

Every run writes one CSV per experiment plus a ``<name>_summary.txt`` of
``key: value`` lines (seed, wall time, headline numbers).  CSV bytes are
identical for identical (flags, seed): floats are printed with 17
significant digits and newline-terminated lines.

``--config FILE`` merges simple ``key=value`` lines (one per line, ``#``
comments allowed); explicit command-line flags win.  Exit codes: 0
success, 1 numeric failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

import numpy as np

from . import acceptance, counting, holography, scrambling
from . import thermofield as tfd
from .gates import (
    bfs_complexity,
    cnot_pair_gateset,
    random_inverse_closed_gateset,
    sphere_growth,
    two_qubit_clifford_gateset,
)
from .geometry import PenaltySchedule, curvature_ensemble

DEFAULT_SEED = 1729  # fixed so default runs reproduce byte-identical CSV
OUTDIR_ENV = "COMPLEXITYLAB_OUTDIR"


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def write_csv(path: str, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_summary(path: str, entries: dict) -> None:
    with open(path, "w", newline="") as fh:
        for key, value in entries.items():
            fh.write(f"{key}: {_fmt(value)}\n")


def _parse_spectrum(text: str) -> np.ndarray:
    if os.path.exists(text):
        with open(text) as fh:
            text = ",".join(line.strip() for line in fh if line.strip())
    try:
        values = [float(tok) for tok in text.replace(";", ",").split(",") if tok.strip()]
    except ValueError as exc:
        raise SystemExit(f"error: --spectrum: cannot parse {text!r}: {exc}")
    if not values:
        raise SystemExit("error: --spectrum: no energy levels given")
    return np.asarray(values)


def _read_target_matrix(path: str, dim: int) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for line in fh:
            if not line.strip():
                continue
            vals = [float(tok) for tok in line.strip().split(",")]
            if len(vals) != 2 * dim:
                raise SystemExit(
                    f"error: --target: expected {2 * dim} values (re,im pairs) per row, got {len(vals)}"
                )
            rows.append([complex(vals[2 * j], vals[2 * j + 1]) for j in range(dim)])
    if len(rows) != dim:
        raise SystemExit(f"error: --target: expected {dim} rows, got {len(rows)}")
    return np.asarray(rows, dtype=complex)


def _black_hole_from(opts) -> holography.BlackHoleSpec:
    if opts.mass is not None:
        return holography.BlackHoleSpec(d=opts.dim, mass=opts.mass, l_ads=opts.lads, G=opts.G)
    return holography.BlackHoleSpec(d=opts.dim, mu=opts.mu, l_ads=opts.lads, G=opts.G)


# --- subcommand handlers ----------------------------------------------------


def cmd_scramble(opts, outdir: str) -> tuple[int, dict]:
    K = opts.qubits
    traj = scrambling.simulate_epidemic(K, opts.max_steps, opts.trials, opts.seed)
    rows = []
    for tau, mean, err in traj.steps():
        rows.append(
            (
                tau,
                mean,
                err,
                K * scrambling.logistic_size(float(tau), K),
                scrambling.precursor_complexity(float(tau), K),
            )
        )
    write_csv(os.path.join(outdir, "scramble.csv"), ["tau", "mc_mean", "mc_stderr", "logistic", "precursor"], rows)
    gap = max(abs(r[1] - r[3]) / K for r in rows)
    return 0, {
        "qubits": K,
        "trials": opts.trials,
        "scrambling_time": scrambling.scrambling_time(K),
        "max_logistic_gap": gap,
        "final_mean": rows[-1][1],
    }


def _build_gateset(opts):
    if opts.gateset == "cnot":
        return cnot_pair_gateset(opts.epsilon)
    if opts.gateset == "clifford2":
        return two_qubit_clifford_gateset(opts.epsilon)
    return random_inverse_closed_gateset(2, opts.pairs, opts.seed, opts.epsilon)


def cmd_bfs(opts, outdir: str) -> tuple[int, dict]:
    gs = _build_gateset(opts)
    ball = sphere_growth(gs, opts.max_depth)
    rows = list(enumerate(ball.counts))
    write_csv(os.path.join(outdir, "bfs.csv"), ["depth", "count"], rows)
    summary = {
        "gateset": opts.gateset,
        "gates": len(gs.gates),
        "reached": ball.size,
        "saturated": ball.saturated,
    }
    if opts.target:
        target = _read_target_matrix(opts.target, gs.dim)
        depth = bfs_complexity(target, gs, opts.max_depth, ball=ball)
        summary["target_depth"] = "not-found" if depth is None else depth
    return 0, summary


def cmd_curvature(opts, outdir: str) -> tuple[int, dict]:
    schedule = PenaltySchedule(k=opts.penalty_k, c=opts.penalty_c)
    result = curvature_ensemble(opts.qubits, schedule, opts.trials, opts.seed)
    write_csv(
        os.path.join(outdir, "curvature.csv"),
        ["K", "mean_R", "stderr", "trace_ratio"],
        [(opts.qubits, result.mean, result.stderr, result.trace_ratio_mean)],
    )
    return 0, {
        "qubits": opts.qubits,
        "penalty_c": opts.penalty_c,
        "trials": opts.trials,
        "mean_R": result.mean,
        "stderr": result.stderr,
        "trace_ratio": result.trace_ratio_mean,
    }


def cmd_counting(opts, outdir: str) -> tuple[int, dict]:
    report = counting.counting_report(opts.qubits, opts.epsilon)
    header = ["K", "epsilon", "log_vol_su", "log_ball", "log_num_unitaries", "log_branching", "c_max", "log_log_recurrence"]
    row = (
        report.K,
        report.epsilon,
        report.log_vol_su,
        report.log_ball,
        report.log_num_unitaries,
        report.log_branching,
        report.c_max,
        report.log_log_recurrence,
    )
    write_csv(os.path.join(outdir, "counting.csv"), header, [row])
    return 0, {"qubits": report.K, "epsilon": report.epsilon, "c_max": report.c_max}


def cmd_tfd(opts, outdir: str) -> tuple[int, dict]:
    spectrum = _parse_spectrum(opts.spectrum)
    state = tfd.tfd(spectrum, opts.beta if not math.isinf(opts.beta) else math.inf)
    psi = tfd.evolve_tfd(state, opts.tl, opts.tr, opts.sign)
    fidelity = abs(tfd.overlap(psi, state.vector()))
    rho_l = tfd.partial_trace(psi, side="left", dims=state.dims)
    rho_r = tfd.partial_trace(psi, side="right", dims=state.dims)
    s_l = tfd.von_neumann_entropy(rho_l)
    s_r = tfd.von_neumann_entropy(rho_r)
    s_thermal = tfd.von_neumann_entropy(tfd.thermal_state(spectrum, opts.beta))
    rows = [
        ("fidelity", fidelity),
        ("entropy_left", s_l),
        ("entropy_right", s_r),
        ("entropy_thermal", s_thermal),
    ]
    H_op = np.diag(spectrum).astype(complex)
    corr_hh = tfd.two_sided_correlator(psi, H_op, H_op, dims=state.dims)
    rows.append(("corr_HH_re", corr_hh.real))
    rows.append(("corr_HH_im", corr_hh.imag))
    for i in range(min(len(spectrum), 4)):
        proj = np.zeros((len(spectrum), len(spectrum)), dtype=complex)
        proj[i, i] = 1.0
        c = tfd.two_sided_correlator(psi, proj, proj, dims=state.dims)
        rows.append((f"corr_P{i}P{i}_re", c.real))
    write_csv(os.path.join(outdir, "tfd.csv"), ["quantity", "value"], rows)
    return 0, {
        "beta": opts.beta,
        "levels": len(spectrum),
        "sign": opts.sign,
        "fidelity": fidelity,
        "entropy_left": s_l,
    }


def cmd_wormhole(opts, outdir: str) -> tuple[int, dict]:
    spec = _black_hole_from(opts)
    points = holography.volume_curve(
        spec, eta_max=opts.eta_max, eta_min=opts.eta_min, points=opts.egrid_points
    )
    rows = [
        (p.E, p.r_turn, spec.omega * p.interior_volume_per_sphere, p.boundary_time_sum)
        for p in points
    ]
    write_csv(os.path.join(outdir, "wormhole.csv"), ["E", "r_turn", "volume", "t_sum"], rows)
    r_m, v_d = holography.critical_surface(spec)
    tail = rows[-max(4, opts.egrid_points // 4) :]
    slope = float(np.polyfit([r[3] for r in tail], [r[2] for r in tail], 1)[0])
    return 0, {
        "dim": spec.d,
        "mu": spec.mu,
        "mass": spec.mass,
        "r_h": spec.r_h,
        "r_m": r_m,
        "V_d": v_d,
        "late_slope": slope,
        "late_slope_over_V_d": slope / v_d,
    }


def cmd_wdw(opts, outdir: str) -> tuple[int, dict]:
    spec = _black_hole_from(opts)
    rate = holography.wdw_action_rate(spec)
    lloyd = holography.lloyd_bound(spec, hbar=opts.hbar)
    write_csv(
        os.path.join(outdir, "wdw.csv"),
        ["d", "mu", "M", "bulk_rate", "boundary_rate", "total_rate", "lloyd_saturation"],
        [(spec.d, spec.mu, spec.mass, rate.bulk, rate.boundary, rate.total, lloyd.saturation)],
    )
    return 0, {
        "dim": spec.d,
        "mu": spec.mu,
        "mass": spec.mass,
        "total_rate": rate.total,
        "total_rate_over_2M": f"{rate.total / (2 * spec.mass):.7f}",
        "lloyd_bound": lloyd.bound,
        "lloyd_saturation": lloyd.saturation,
    }


def cmd_paper_suite(opts, outdir: str) -> tuple[int, dict]:
    results = acceptance.run_all(verbose=True)
    write_csv(
        os.path.join(outdir, "paper_suite.csv"),
        ["criterion", "status", "detail"],
        [(name, "PASS" if ok else "FAIL", detail.replace(",", ";")) for name, ok, detail in results],
    )
    failed = [name for name, ok, _ in results if not ok]
    summary = {"checks": len(results), "failed": len(failed)}
    if failed:
        summary["failing"] = ";".join(failed)
    return (1 if failed else 0), summary


# --- argument plumbing ------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {DEFAULT_SEED})")
    sub.add_argument("--outdir", type=str, default=None, help=f"output directory (default ., or ${OUTDIR_ENV})")
    sub.add_argument("--config", type=str, default=None, help="key=value file merged under the flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="complexitylab",
        description="Numerical laboratory: qubit scrambling, exact gate complexity, "
        "the penalized complexity metric, counting estimates, thermofield doubles, "
        "and AdS-Schwarzschild wormhole growth.",
    )
    subs = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = subs.add_parser(
        "scramble",
        help="Monte-Carlo epidemic growth of a one-qubit perturbation",
        description="Random pairings spread a one-qubit perturbation; the mean size "
        "follows s(tau)/K = e^(tau-ln K)/(1+e^(tau-ln K)) and the precursor "
        "complexity follows K ln(1+e^(tau-ln K)).  The logistic column holds "
        "K times the logistic fraction so it is directly comparable to mc_mean.",
    )
    p.add_argument("--qubits", type=int, default=None, help="even qubit count K (default 10)")
    p.add_argument("--max-steps", type=int, default=None, help="circuit depth to simulate (default 12)")
    p.add_argument("--trials", type=int, default=None, help="Monte-Carlo trials (default 20000)")
    _add_common(p)

    p = subs.add_parser(
        "bfs",
        help="breadth-first gate complexity over an inverse-closed gate set",
        description="Counts distinct unitaries first reached at each word length; "
        "with --target reports its exact gate complexity (the shortest word).",
    )
    p.add_argument("--gateset", choices=("cnot", "clifford2", "random"), default=None, help="gate set (default clifford2)")
    p.add_argument("--max-depth", type=int, default=None, help="BFS depth cap (default 12)")
    p.add_argument("--epsilon", type=float, default=None, help="dedup resolution (default 1e-6)")
    p.add_argument("--pairs", type=int, default=None, help="Haar gate pairs for --gateset random (default 4)")
    p.add_argument("--target", type=str, default=None, help="CSV file of the target matrix, rows of re,im pairs")
    _add_common(p)

    p = subs.add_parser(
        "curvature",
        help="sectional curvature ensemble of the penalized metric",
        description="Averages R = (1/3 - I(3)/4) * 2 Tr([H,D][D,H]) / (Tr D^2 Tr H^2) "
        "over Gaussian 2-local pairs; negative for I(3) > 4/3 and the raw trace "
        "ratio scales like 1/K.",
    )
    p.add_argument("--qubits", type=int, default=None, help="even qubit count K >= 4 (default 8)")
    p.add_argument("--penalty-c", type=float, default=None, help="penalty prefactor c (default 1.0)")
    p.add_argument("--penalty-k", type=int, default=None, help="locality threshold k (default 2)")
    p.add_argument("--trials", type=int, default=None, help="ensemble size (default 100)")
    _add_common(p)

    p = subs.add_parser(
        "counting",
        help="log-space counting report",
        description="Group volume, eps-ball volume, unitary count (2^K/eps^2)^(4^K/2), "
        "pairing branching factor, maximum complexity 4^K(1/2+|ln eps|/ln K) and "
        "recurrence magnitudes, all as natural logs.",
    )
    p.add_argument("--qubits", type=int, default=None, help="even qubit count K (default 4)")
    p.add_argument("--epsilon", type=float, default=None, help="resolution in (0,1) (default 0.01)")
    _add_common(p)

    p = subs.add_parser(
        "tfd",
        help="thermofield double: evolution, entropies, correlators",
        description="Builds sum_i e^(-beta E_i/2)/sqrt(Z) |i>|i>, applies the phases "
        "e^(-i E_i (tl -+ tr)), and reports fidelity, reduced entropies and "
        "two-sided correlators; the difference Hamiltonian leaves the state "
        "invariant at tl = tr, the sum does not.",
    )
    p.add_argument("--beta", type=float, default=None, help="inverse temperature >= 0 (default 1.0)")
    p.add_argument("--spectrum", type=str, default=None, help="comma-separated energies or a file (default 0,1)")
    p.add_argument("--tl", type=float, default=None, help="left boundary time (default 0)")
    p.add_argument("--tr", type=float, default=None, help="right boundary time (default 0)")
    p.add_argument("--sign", choices=("minus", "plus"), default=None, help="Hamiltonian combination (default minus)")
    _add_common(p)

    p = subs.add_parser(
        "wormhole",
        help="interior maximal-volume slices of the eternal AdS black hole",
        description="For f(r) = 1 - mu/r^(d-3) + r^2/l^2, integrates the interior "
        "volume and boundary anchor time of maximal slices on a geometric grid of "
        "conserved energies approaching E_c; the volume grows linearly in t_l + t_r "
        "with slope Omega_(d-2) r_m^(d-2) sqrt|f(r_m)|.",
    )
    p.add_argument("--dim", type=int, default=None, help="bulk dimension d >= 4 (default 4)")
    p.add_argument("--mu", type=float, default=None, help="mass parameter (default 100)")
    p.add_argument("--mass", type=float, default=None, help="mass M (overrides --mu)")
    p.add_argument("--lads", type=float, default=None, help="AdS radius (default 1)")
    p.add_argument("--G", type=float, default=None, help="Newton constant (default 1)")
    p.add_argument("--egrid-points", type=int, default=None, help="energy grid size (default 16)")
    p.add_argument("--eta-max", type=float, default=None, help="largest 1 - E/E_c (default 0.1)")
    p.add_argument("--eta-min", type=float, default=None, help="smallest 1 - E/E_c (default 1e-5)")
    _add_common(p)

    p = subs.add_parser(
        "wdw",
        help="late-time action growth of the Wheeler-DeWitt patch",
        description="Bulk term -r_h^(d-1) Omega/(8 pi G l^2) plus the surface bracket "
        "evaluated at the horizon; the total equals 2M exactly and saturates the "
        "growth bound 2M/(pi hbar).",
    )
    p.add_argument("--dim", type=int, default=None, help="bulk dimension d >= 4 (default 4)")
    p.add_argument("--mu", type=float, default=None, help="mass parameter (default 1)")
    p.add_argument("--mass", type=float, default=None, help="mass M (overrides --mu)")
    p.add_argument("--lads", type=float, default=None, help="AdS radius (default 1)")
    p.add_argument("--G", type=float, default=None, help="Newton constant (default 1)")
    p.add_argument("--hbar", type=float, default=None, help="hbar for the bound (default 1)")
    _add_common(p)

    p = subs.add_parser(
        "paper-suite",
        help="run every acceptance check, one PASS/FAIL line each",
        description="Runs the full acceptance suite (action-rate identity, wormhole "
        "growth, high-temperature volume rate, epidemic vs logistic, curvature "
        "ensemble, Loschmidt orders, geodesic residual, gate metric axioms, "
        "thermofield-double suite, counting estimates).  Exit 0 iff all pass.",
    )
    _add_common(p)

    return parser


_DEFAULTS = {
    "scramble": {"qubits": 10, "max_steps": 12, "trials": 20000},
    "bfs": {"gateset": "clifford2", "max_depth": 12, "epsilon": 1e-6, "pairs": 4, "target": None},
    "curvature": {"qubits": 8, "penalty_c": 1.0, "penalty_k": 2, "trials": 100},
    "counting": {"qubits": 4, "epsilon": 0.01},
    "tfd": {"beta": 1.0, "spectrum": "0,1", "tl": 0.0, "tr": 0.0, "sign": "minus"},
    "wormhole": {"dim": 4, "mu": 100.0, "mass": None, "lads": 1.0, "G": 1.0, "egrid_points": 16, "eta_max": 0.1, "eta_min": 1e-5},
    "wdw": {"dim": 4, "mu": 1.0, "mass": None, "lads": 1.0, "G": 1.0, "hbar": 1.0},
    "paper-suite": {},
}

_HANDLERS = {
    "scramble": cmd_scramble,
    "bfs": cmd_bfs,
    "curvature": cmd_curvature,
    "counting": cmd_counting,
    "tfd": cmd_tfd,
    "wormhole": cmd_wormhole,
    "wdw": cmd_wdw,
    "paper-suite": cmd_paper_suite,
}


def _load_config(path: str) -> dict[str, str]:
    if not os.path.exists(path):
        print(f"error: --config: no such file: {path}", file=sys.stderr)
        raise SystemExit(2)
    entries = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                print(f"error: --config: line {lineno} is not key=value: {line!r}", file=sys.stderr)
                raise SystemExit(2)
            key, value = line.split("=", 1)
            entries[key.strip().replace("-", "_")] = value.strip()
    return entries


def _merge_options(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset flags from the config file, then from builtin defaults."""
    defaults = dict(_DEFAULTS[args.command])
    defaults["seed"] = DEFAULT_SEED
    defaults["outdir"] = os.environ.get(OUTDIR_ENV, ".")
    config = _load_config(args.config) if args.config else {}
    for key in list(config):
        if key not in defaults:
            print(f"error: --config: unknown flag {key!r} for {args.command}", file=sys.stderr)
            raise SystemExit(2)
    for key, default in defaults.items():
        if getattr(args, key, None) is not None:
            continue
        if key in config:
            raw = config[key]
            caster = type(default) if default is not None else str
            if caster is bool:
                value = raw.lower() in ("1", "true", "yes")
            else:
                try:
                    value = caster(raw)
                except ValueError:
                    print(f"error: --config: bad value for {key}: {raw!r}", file=sys.stderr)
                    raise SystemExit(2)
            setattr(args, key, value)
        else:
            setattr(args, key, default)
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    args = _merge_options(args)
    os.makedirs(args.outdir, exist_ok=True)
    start = time.perf_counter()
    try:
        code, summary = _HANDLERS[args.command](args, args.outdir)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    wall = time.perf_counter() - start
    entries = {"command": args.command, "seed": args.seed}
    entries.update(summary)
    entries["wall_time_s"] = f"{wall:.3f}"
    name = args.command.replace("-", "_")
    write_summary(os.path.join(args.outdir, f"{name}_summary.txt"), entries)
    for key, value in entries.items():
        print(f"{key}: {_fmt(value)}")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
