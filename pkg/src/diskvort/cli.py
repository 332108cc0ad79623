"""Command-line front end.

Subcommands mirror the library surface: ``zeros`` tabulates Bessel zeros,
``expand`` prints Dini coefficients, ``evolve`` samples a solution in time,
``verify`` runs the oracle suite, and ``converge`` executes a sweep toward
the inviscid limit.  Exit codes: 0 success, 2 validation failure, 3
consistency (oracle disagreement) failure.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .bessel import bessel_j0, j1_zeros
from .fd import FdGrid, FdState, discrete_mean, fd_solve, pde_residual
from .harness import (
    ExperimentConfig,
    UnknownBuiltin,
    default_zero_table,
    format_float as fmt,
    builtin_initial,
    emit_report,
    run_convergence_sweep,
    sweep_path,
)
from .quadrature import default_rule, integrate_radial
from .spectral import (
    ConsistencyFailure,
    FluidParams,
    ModalSolution,
    ZeroMeanViolation,
    dini_expand,
    evaluate_velocity,
    evaluate_vorticity,
)

__all__ = ["main"]


def _cmd_zeros(args) -> int:
    table = j1_zeros(args.count, args.tol)
    print("k,j_k")
    for k, z in enumerate(table.zeros, start=1):
        print(f"{k},{fmt(z)}")
    return 0


def _cmd_expand(args) -> int:
    omega0 = builtin_initial(args.initial)
    zeros = default_zero_table(args.modes)
    expansion = dini_expand(omega0, args.modes, zeros, default_rule())
    print("k,j_k,A_k")
    for k in range(args.modes):
        print(f"{k + 1},{fmt(zeros.zeros[k])},{fmt(expansion.coeffs[k])}")
    print(f"mean,{fmt(expansion.mean)}")
    return 0


def _cmd_evolve(args) -> int:
    omega0 = builtin_initial(args.initial)
    expansion = dini_expand(omega0, args.modes, default_zero_table(args.modes), default_rule())
    sol = ModalSolution(expansion=expansion, params=FluidParams(nu=args.nu, alpha=args.alpha))
    radii = np.linspace(0.0, 1.0, args.grid)
    print("t,r,omega,u_theta")
    for t in np.linspace(0.0, args.t_final, args.t_samples):
        omega = evaluate_vorticity(sol, radii, t)
        velocity = evaluate_velocity(sol, radii, t)
        for r, w, u in zip(radii, omega, velocity.u_theta):
            print(f"{fmt(t)},{fmt(r)},{fmt(w)},{fmt(u)}")
    return 0


def _cmd_verify(args) -> int:
    rule = default_rule()
    params = FluidParams(nu=args.nu, alpha=args.alpha)
    failures = 0

    def report(name, ok, detail):
        nonlocal failures
        failures += 0 if ok else 1
        print(f"{name}: {'ok' if ok else 'FAIL'} ({detail})")

    zeros = default_zero_table(20)
    j = zeros.zeros
    basis = bessel_j0(np.outer(rule.nodes, j))
    scaled = basis * (rule.weights * rule.nodes)[:, None]
    gram = 2.0 * (basis.T @ scaled) / bessel_j0(j) ** 2
    dev = float(np.max(np.abs(gram - np.eye(len(j)))))
    report("orthogonality", dev < 1e-8, f"max Gram deviation {dev:.3e}")

    omega0 = builtin_initial("eigen:1")
    expansion = dini_expand(omega0, 16, default_zero_table(16), rule)
    sol = ModalSolution(expansion=expansion, params=params)
    worst = 0.0
    for t in (0.0, 0.5 * args.t_final, args.t_final):
        quad = np.asarray(evaluate_vorticity(sol, rule.nodes, t)) - omega0(rule.nodes)
        q = math.sqrt(2.0 * math.pi * float(np.dot(rule.weights * rule.nodes, quad * quad)))
        amp = expansion.coeffs * bessel_j0(expansion.mode_zeros) * (1.0 - np.exp(-sol.decay_rates * t))
        s = math.sqrt(math.pi * float(np.dot(amp, amp)))
        worst = max(worst, abs(q - s))
    report("parseval", worst < 1e-8, f"max norm mismatch {worst:.3e}")

    coarse = pde_residual(sol, FdGrid(n_nodes=513), 0.5 * args.t_final, 1e-3)
    fine = pde_residual(sol, FdGrid(n_nodes=1025), 0.5 * args.t_final, 5e-4)
    ratio = coarse / fine if fine else math.inf
    report("residual order", coarse < 1e-3 and 3.5 <= ratio <= 4.5,
           f"residual {coarse:.3e}, refinement ratio {ratio:.2f}")

    grid = FdGrid(n_nodes=args.grid)
    steps = args.steps or max(1, math.ceil(args.t_final * (args.grid - 1)))
    state = fd_solve(omega0, params, grid, args.t_final, steps)
    modal = evaluate_vorticity(sol, grid.radii, args.t_final)
    num = math.sqrt(float(np.sum(grid.radii * (state.values - modal) ** 2)))
    den = math.sqrt(float(np.sum(grid.radii * modal**2)))
    rel = num / den if den else num
    report("fd agreement", rel < 1e-3, f"relative L2 difference {rel:.3e}")

    # deterministic stepping lets run prefixes isolate per-step mean changes
    dt = args.t_final / steps
    drift = 0.0
    prev = discrete_mean(FdState(grid=grid, values=np.asarray(omega0(grid.radii), dtype=float)))
    for k in range(1, 26):
        mean_k = discrete_mean(fd_solve(omega0, params, grid, k * dt, k))
        drift = max(drift, abs(mean_k - prev))
        prev = mean_k
    report("mean conservation", drift < 1e-12, f"max per-step drift {drift:.3e}")

    constraint = abs(2.0 * integrate_radial(
        lambda r: np.asarray(evaluate_vorticity(sol, r, args.t_final)), rule))
    report("no-slip constraint", constraint < 1e-9, f"2 int r omega dr = {constraint:.3e}")

    return 3 if failures else 0


def _parse_pairs(text: str):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        nu, _, alpha = chunk.partition(":")
        pairs.append((float(nu), float(alpha)))
    if not pairs:
        raise ValueError("no (nu, alpha) pairs supplied")
    return pairs


def _cmd_converge(args) -> int:
    if args.config:
        config = ExperimentConfig.from_json_file(args.config)
    else:
        sweep = _parse_pairs(args.pairs) if args.pairs else sweep_path(
            args.m_start, args.m_stop, args.exponent)
        config = ExperimentConfig(
            initial=args.initial,
            n_modes=args.modes,
            t_final=args.t_final,
            t_samples=args.t_samples,
            grid_points=args.grid,
            sweep=sweep,
        )
    report = run_convergence_sweep(config, verify_fd=args.verify)
    emit_report(report, format=args.format, destination=args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskvort",
        description="Spectral solver and oracle harness for radial disk vorticity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="tabulate positive zeros of J1")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(handler=_cmd_zeros)

    p = sub.add_parser("expand", help="Dini coefficients of an initial profile")
    p.add_argument("--initial", required=True)
    p.add_argument("--modes", type=int, default=64)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("evolve", help="sample vorticity and velocity over time")
    p.add_argument("--initial", required=True)
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t-final", type=float, default=1.0)
    p.add_argument("--t-samples", type=int, default=33)
    p.add_argument("--grid", type=int, default=33)
    p.add_argument("--modes", type=int, default=64)
    p.set_defaults(handler=_cmd_evolve)

    p = sub.add_parser("verify", help="run the oracle consistency suite")
    p.add_argument("--nu", type=float, default=0.01)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--grid", type=int, default=1025)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--t-final", type=float, default=1.0)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("converge", help="run a (nu, alpha) convergence sweep")
    p.add_argument("--config", default=None, help="JSON config file")
    p.add_argument("--initial", default="eigen:1")
    p.add_argument("--modes", type=int, default=64)
    p.add_argument("--t-final", type=float, default=1.0)
    p.add_argument("--t-samples", type=int, default=33)
    p.add_argument("--grid", type=int, default=1025)
    p.add_argument("--pairs", default=None, help="explicit sweep 'nu:alpha;nu:alpha;...'")
    p.add_argument("--m-start", type=int, default=1)
    p.add_argument("--m-stop", type=int, default=5)
    p.add_argument("--exponent", type=float, default=0.75)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None, help="destination path; stdout when omitted")
    p.add_argument("--verify", action="store_true", help="cross check each cell with the FD solver")
    p.set_defaults(handler=_cmd_converge)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ConsistencyFailure as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ZeroMeanViolation, UnknownBuiltin, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
