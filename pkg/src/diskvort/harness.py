"""Experiment configuration, the initial-data catalog, and convergence sweeps.

A sweep walks a list of (nu, alpha) pairs toward the inviscid limit, records
the sup-over-time L2 errors of vorticity and velocity against the frozen
Euler reference, and serializes the result as CSV or JSON with deterministic,
round-trip-exact number formatting.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .bessel import BesselZeroTable, bessel_j0, j1_zeros
from .fd import FdGrid, conserved_weights, fd_solve
from .quadrature import QuadratureRule, default_rule
from .spectral import (
    ConsistencyFailure,
    FluidParams,
    ModalSolution,
    RadialProfile,
    ZERO_MEAN_TOL,
    dini_expand,
    evaluate_vorticity,
    tail_estimate,
    validate_initial_vorticity,
    velocity_error_norm,
    vorticity_error_norm,
)

__all__ = [
    "UnknownBuiltin",
    "ExperimentConfig",
    "SweepRow",
    "SweepReport",
    "sweep_path",
    "builtin_initial",
    "run_convergence_sweep",
    "emit_report",
    "CSV_HEADER",
    "format_float",
    "default_zero_table",
]

CSV_HEADER = "nu,alpha,alpha2_over_nu,sup_err_omega_l2,sup_err_u_l2,max_err_compact,tail_estimate"

_KNOWN_TOLERANCES = {"zero_mean"}

# FD-vs-spectral gate used by the optional --verify pass; eigenmode data has
# no truncation tail, for which this bound is meaningful as is.
_FD_AGREEMENT_TOL = 1e-3


class UnknownBuiltin(ValueError):
    """Initial-data descriptor does not name a known builtin."""


def format_float(x: float) -> str:
    """17 significant digits; round-trips every float64 exactly."""
    return format(float(x), ".17g")


def sweep_path(m_start: int, m_stop: int, exponent: float = 0.75) -> list[tuple[float, float]]:
    """Pairs (nu, alpha) = (10^-m, nu^exponent) for m in m_start..m_stop.

    The default exponent 0.75 keeps alpha well inside o(sqrt(nu)).
    """
    if m_stop < m_start:
        raise ValueError("m_stop must not be smaller than m_start")
    return [(10.0**-m, (10.0**-m) ** exponent) for m in range(m_start, m_stop + 1)]


@dataclass(eq=False)
class ExperimentConfig:
    """Inputs of one convergence experiment; mirrors the JSON config format."""

    initial: str = "eigen:1"
    n_modes: int = 64
    t_final: float = 1.0
    t_samples: int = 33
    grid_points: int = 1025
    sweep: list = field(default_factory=lambda: sweep_path(1, 5))
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.t_final <= 0:
            raise ValueError("t_final must be positive")
        if self.t_samples < 1:
            raise ValueError("t_samples must be positive")
        if self.grid_points < 3:
            raise ValueError("grid_points must be at least 3")
        if self.n_modes < 1:
            raise ValueError("n_modes must be positive")
        cleaned = []
        for entry in self.sweep:
            nu, alpha = (float(v) for v in entry)
            if nu < 0 or alpha < 0:
                raise ValueError("sweep entries must have nonnegative nu and alpha")
            cleaned.append((nu, alpha))
        self.sweep = cleaned
        unknown = set(self.tolerances) - _KNOWN_TOLERANCES
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")
        self.tolerances = {"zero_mean": ZERO_MEAN_TOL, **self.tolerances}

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        allowed = {"initial", "n_modes", "t_final", "t_samples", "grid_points", "sweep", "tolerances"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        sweep = data.get("sweep")
        if isinstance(sweep, dict):
            allowed_rule = {"m_start", "m_stop", "exponent"}
            unknown = set(sweep) - allowed_rule
            if unknown:
                raise ValueError(f"unknown sweep rule keys: {sorted(unknown)}")
            data["sweep"] = sweep_path(
                int(sweep["m_start"]), int(sweep["m_stop"]), float(sweep.get("exponent", 0.75))
            )
        return cls(**data)

    @classmethod
    def from_json_file(cls, path) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class SweepRow:
    nu: float
    alpha: float
    alpha2_over_nu: float
    sup_err_omega_l2: float
    sup_err_u_l2: float
    max_err_compact: float
    tail_estimate: float


@dataclass(eq=False)
class SweepReport:
    rows: list


@lru_cache(maxsize=None)
def default_zero_table(count: int) -> BesselZeroTable:
    return j1_zeros(count)


def builtin_initial(name: str, tol: float = ZERO_MEAN_TOL):
    """Resolve an initial-data descriptor to an admissible radial function.

    Recognized forms:
      eigen:k            the k-th basis mode J0(j_k r), admissible by design
      poly:c0,c2,c4,...  even polynomial sum c_{2m} r^(2m)
      file:path          two-column CSV of r, omega samples on [0, 1]

    Every profile is passed through the zero-mean admissibility check.
    """
    kind, sep, arg = name.partition(":")
    if not sep:
        raise UnknownBuiltin(f"initial-data descriptor {name!r} has no ':' separator")
    if kind == "eigen":
        try:
            k = int(arg)
        except ValueError as exc:
            raise UnknownBuiltin(f"bad eigen mode index in {name!r}") from exc
        if k < 1:
            raise UnknownBuiltin("eigen mode index must be at least 1")
        j_k = default_zero_table(k).zeros[k - 1]
        profile = lambda r: bessel_j0(j_k * np.asarray(r, dtype=float))
    elif kind == "poly":
        try:
            coeffs = [float(c) for c in arg.split(",") if c.strip() != ""]
        except ValueError as exc:
            raise UnknownBuiltin(f"bad polynomial coefficients in {name!r}") from exc
        if not coeffs:
            raise UnknownBuiltin("poly descriptor needs at least one coefficient")
        def profile(r, _coeffs=tuple(coeffs)):
            rsq = np.asarray(r, dtype=float) ** 2
            out = np.zeros_like(rsq)
            for c in reversed(_coeffs):
                out = out * rsq + c
            return out
    elif kind == "file":
        profile = _load_profile(arg)
    else:
        raise UnknownBuiltin(f"unknown initial-data kind {kind!r}")
    return validate_initial_vorticity(profile, tol=tol)


def _load_profile(path: str) -> RadialProfile:
    try:
        data = np.loadtxt(path, delimiter=",", ndmin=2)
    except ValueError:
        data = np.loadtxt(path, delimiter=",", ndmin=2, skiprows=1)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValueError(f"profile file {path!r} must hold two columns r,omega")
    return RadialProfile(radii=data[:, 0], values=data[:, 1])


def _nu_ratio(nu: float, alpha: float) -> float:
    if nu > 0.0:
        return alpha * alpha / nu
    return 0.0 if alpha == 0.0 else math.inf


def run_convergence_sweep(config: ExperimentConfig, rule: QuadratureRule | None = None,
                          verify_fd: bool = False) -> SweepReport:
    """Evaluate every sweep cell and collect one report row per (nu, alpha).

    For each pair the modal solution is sampled on a uniform time grid over
    [0, t_final]; the report records the sup over samples of both L2 error
    norms, the pointwise max error on the compact set [0, 0.9] at t_final,
    and the expansion's truncation-tail estimate.  A ConsistencyFailure in
    any cell aborts the sweep with the cell identified.  With ``verify_fd``
    each cell is additionally reproduced by the Crank-Nicolson solver and
    must agree with the modal solution in L2.
    """
    rule = rule or default_rule()
    omega0 = builtin_initial(config.initial, tol=config.tolerances["zero_mean"])
    expansion = dini_expand(omega0, config.n_modes, default_zero_table(config.n_modes), rule)
    times = np.linspace(0.0, config.t_final, config.t_samples)
    compact_radii = np.linspace(0.0, 0.9, 181)
    omega0_compact = np.asarray(omega0(compact_radii), dtype=float)
    tail = tail_estimate(expansion)
    rows = []
    for nu, alpha in config.sweep:
        sol = ModalSolution(expansion=expansion, params=FluidParams(nu=nu, alpha=alpha))
        try:
            sup_omega = max(vorticity_error_norm(sol, omega0, t, rule) for t in times)
            sup_u = max(velocity_error_norm(sol, omega0, t, rule) for t in times)
        except ConsistencyFailure as exc:
            raise ConsistencyFailure(f"sweep cell nu={nu:g} alpha={alpha:g}: {exc}") from exc
        final = evaluate_vorticity(sol, compact_radii, config.t_final)
        compact_err = float(np.max(np.abs(final - omega0_compact)))
        if verify_fd:
            _verify_cell_against_fd(sol, omega0, config, tail)
        rows.append(SweepRow(
            nu=nu,
            alpha=alpha,
            alpha2_over_nu=_nu_ratio(nu, alpha),
            sup_err_omega_l2=sup_omega,
            sup_err_u_l2=sup_u,
            max_err_compact=compact_err,
            tail_estimate=tail,
        ))
    return SweepReport(rows=rows)


def _verify_cell_against_fd(sol: ModalSolution, omega0, config: ExperimentConfig, tail: float):
    grid = FdGrid(n_nodes=config.grid_points)
    n_steps = max(1, math.ceil(config.t_final * (config.grid_points - 1)))
    state = fd_solve(omega0, sol.params, grid, config.t_final, n_steps)
    modal = evaluate_vorticity(sol, grid.radii, config.t_final)
    w = conserved_weights(grid)
    err = math.sqrt(float(np.dot(w, (state.values - modal) ** 2)))
    scale = max(1.0, math.sqrt(float(np.dot(w, modal * modal))))
    bound = (_FD_AGREEMENT_TOL + math.sqrt(math.pi) * tail) * scale
    if err > bound:
        raise ConsistencyFailure(
            "FD cross check failed at nu={:g} alpha={:g}: L2 difference {:.3e} above {:.3e}".format(
                sol.params.nu, sol.params.alpha, err, bound
            )
        )


def _report_lines_csv(report: SweepReport):
    yield CSV_HEADER
    for row in report.rows:
        yield ",".join(format_float(v) for v in (
            row.nu, row.alpha, row.alpha2_over_nu, row.sup_err_omega_l2,
            row.sup_err_u_l2, row.max_err_compact, row.tail_estimate,
        ))


def _report_text_json(report: SweepReport) -> str:
    chunks = []
    for row in report.rows:
        fields = ", ".join(
            f'"{name}": {format_float(getattr(row, name))}'
            for name in ("nu", "alpha", "alpha2_over_nu", "sup_err_omega_l2",
                         "sup_err_u_l2", "max_err_compact", "tail_estimate")
        )
        chunks.append("    {" + fields + "}")
    body = ",\n".join(chunks)
    return '{\n  "rows": [\n' + body + "\n  ]\n}\n" if chunks else '{\n  "rows": []\n}\n'


def emit_report(report: SweepReport, format: str = "csv", destination=None) -> None:
    """Serialize a sweep report deterministically to a path or standard output.

    Identical reports always produce byte-identical output; floats carry 17
    significant digits, which is round-trip exact for float64.
    """
    if format == "csv":
        text = "\n".join(_report_lines_csv(report)) + "\n"
    elif format == "json":
        text = _report_text_json(report)
    else:
        raise ValueError(f"unknown report format {format!r}")
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    try:
        Path(destination).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write report to {destination!r}: {exc}") from exc
