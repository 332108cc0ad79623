"""Modal solution of the radial viscoelastic vorticity equation on the unit disk.

The initial vorticity is expanded in the Dini basis J0(j_k r), where the j_k
are the positive zeros of J1.  Every basis mode satisfies the nonlocal no-slip
constraint int_0^1 r J0(j_k r) dr = J1(j_k)/j_k = 0, so the constraint is
preserved automatically by the evolution, which multiplies mode k by
exp(-mu_k t) with mu_k = j_k^2 nu / (1 + j_k^2 alpha^2).  The inviscid
(Euler) reference keeps the initial profile frozen in time, and the azimuthal
velocity follows from the vorticity through u(r) = (1/r) int_0^r rho w drho,
which the identity d/dy (y J1) = y J0 turns into J1(j_k r)/j_k mode by mode.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bessel import BesselZeroTable, bessel_j0, bessel_j1
from .quadrature import QuadratureRule, default_rule

__all__ = [
    "ZeroMeanViolation",
    "ConsistencyFailure",
    "Regime",
    "FluidParams",
    "RadialProfile",
    "VelocityProfile",
    "DiniExpansion",
    "ModalSolution",
    "validate_initial_vorticity",
    "dini_expand",
    "decay_rates",
    "classify_regime",
    "evaluate_vorticity",
    "euler_reference",
    "evaluate_velocity",
    "vorticity_error_norm",
    "velocity_error_norm",
    "tail_estimate",
]

ZERO_MEAN_TOL = 1e-9

# Fine uniform grid backing the nested-quadrature cross checks.
_NESTED_GRID_POINTS = 8193


class ZeroMeanViolation(ValueError):
    """Initial vorticity fails the zero radial mean required by no-slip walls."""


class ConsistencyFailure(RuntimeError):
    """Two independent evaluations of the same quantity disagree."""


class Regime(enum.Enum):
    """Sign of nu - lambda^2 alpha^2 decides the separated-mode character."""

    DEGENERATE = "degenerate"
    ELASTIC_POSITIVE = "elastic_positive"
    OSCILLATORY = "oscillatory"


@dataclass(frozen=True)
class FluidParams:
    """Viscosity nu and elastic length alpha; both nonnegative and finite."""

    nu: float
    alpha: float

    def __post_init__(self):
        for name in ("nu", "alpha"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and nonnegative, got {v!r}")


@dataclass(eq=False)
class RadialProfile:
    """A radial function sampled on a grid spanning [0, 1].

    Instances are callable and interpolate linearly, so they can be used
    anywhere a radial function is expected.
    """

    radii: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.radii = np.asarray(self.radii, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.radii.shape != self.values.shape or self.radii.ndim != 1:
            raise ValueError("radii and values must be 1-d arrays of equal length")
        if len(self.radii) < 2 or self.radii[0] != 0.0 or self.radii[-1] != 1.0:
            raise ValueError("radii must run from 0 to 1 inclusive")
        if np.any(np.diff(self.radii) <= 0):
            raise ValueError("radii must be strictly increasing")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("profile values must be finite")
        self.radii.flags.writeable = False
        self.values.flags.writeable = False

    def __call__(self, r):
        return np.interp(r, self.radii, self.values)

    @classmethod
    def from_function(cls, fn, n_points: int = 257) -> "RadialProfile":
        radii = np.linspace(0.0, 1.0, n_points)
        return cls(radii=radii, values=np.asarray(fn(radii), dtype=float))


@dataclass(eq=False)
class VelocityProfile:
    """Azimuthal speed samples; the full field is u_theta * (-x2/r, x1/r)."""

    radii: np.ndarray
    u_theta: np.ndarray

    def __post_init__(self):
        self.radii = np.asarray(self.radii, dtype=float)
        self.u_theta = np.asarray(self.u_theta, dtype=float)
        if self.radii.shape != self.u_theta.shape or self.radii.ndim != 1:
            raise ValueError("radii and u_theta must be 1-d arrays of equal length")
        if not np.all(np.isfinite(self.u_theta)):
            raise ValueError("velocity values must be finite")


@dataclass(eq=False)
class DiniExpansion:
    """Mean term and mode coefficients of an initial vorticity profile."""

    mean: float
    coeffs: np.ndarray
    n_modes: int
    zero_table: BesselZeroTable

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        self.coeffs.flags.writeable = False
        if self.n_modes < 1 or len(self.coeffs) != self.n_modes:
            raise ValueError("coeffs must hold exactly n_modes entries")
        if len(self.zero_table) < self.n_modes:
            raise ValueError("zero table is shorter than the requested mode count")
        if not (np.all(np.isfinite(self.coeffs)) and math.isfinite(self.mean)):
            raise ValueError("expansion data must be finite")

    @property
    def mode_zeros(self) -> np.ndarray:
        return self.zero_table.zeros[: self.n_modes]


@dataclass(eq=False)
class ModalSolution:
    """A Dini expansion together with fluid parameters and per-mode decay rates."""

    expansion: DiniExpansion
    params: FluidParams
    decay_rates: np.ndarray | None = None

    def __post_init__(self):
        expected = decay_rates(self.params, self.expansion.zero_table)[: self.expansion.n_modes]
        if self.decay_rates is None:
            self.decay_rates = expected
        else:
            self.decay_rates = np.asarray(self.decay_rates, dtype=float)
            if self.decay_rates.shape != expected.shape or np.any(self.decay_rates != expected):
                raise ValueError("decay rates disagree with j^2 nu / (1 + j^2 alpha^2)")
        self.decay_rates.flags.writeable = False


def decay_rates(params: FluidParams, zeros: BesselZeroTable) -> np.ndarray:
    """Exponential rate mu_k = j_k^2 nu / (1 + j_k^2 alpha^2) per tabulated zero."""
    jsq = zeros.zeros**2
    return jsq * params.nu / (1.0 + jsq * params.alpha**2)


def classify_regime(params: FluidParams, lam: float) -> Regime:
    """Compare nu against lambda^2 alpha^2 with a 1e-12 relative window."""
    if not (lam > 0.0 and math.isfinite(lam)):
        raise ValueError("lambda must be positive and finite")
    threshold = lam * lam * params.alpha**2
    if abs(params.nu - threshold) <= 1e-12 * max(params.nu, threshold):
        return Regime.DEGENERATE
    return Regime.ELASTIC_POSITIVE if params.nu < threshold else Regime.OSCILLATORY


def _radial_mean(omega0, rule: QuadratureRule) -> float:
    values = np.asarray(omega0(rule.nodes), dtype=float)
    return 2.0 * float(np.dot(rule.weights * rule.nodes, values))


def validate_initial_vorticity(omega0, tol: float = ZERO_MEAN_TOL, project_mean: bool = False,
                               rule: QuadratureRule | None = None):
    """Enforce the admissibility constraint 2 int_0^1 r w0(r) dr = 0.

    Admissible data is returned unchanged.  With ``project_mean`` the constant
    a0 = 2 int r w0 dr is subtracted, which zeroes the constraint exactly;
    otherwise inadmissible data raises ZeroMeanViolation.  ``omega0`` may be
    any callable on [0, 1], including a RadialProfile.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    rule = rule or default_rule()
    mean = _radial_mean(omega0, rule)
    if abs(mean) <= tol:
        return omega0
    if not project_mean:
        raise ZeroMeanViolation(
            f"initial vorticity has radial mean {mean:.3e}, above the tolerance {tol:.1e}"
        )
    if isinstance(omega0, RadialProfile):
        return RadialProfile(radii=omega0.radii, values=omega0.values - mean)
    return lambda r: np.asarray(omega0(r), dtype=float) - mean


def dini_expand(omega0, n_modes: int, zeros: BesselZeroTable,
                rule: QuadratureRule | None = None) -> DiniExpansion:
    """Project an initial profile onto the first ``n_modes`` Dini modes.

    Coefficients follow A_k = (2 / J0(j_k)^2) int_0^1 w0(r) J0(j_k r) r dr,
    evaluated with the supplied quadrature rule; the mean term 2 int r w0 dr
    is carried alongside even though it vanishes for admissible data.
    """
    if n_modes < 1:
        raise ValueError("n_modes must be positive")
    if n_modes > len(zeros):
        raise ValueError("zero table is shorter than the requested mode count")
    rule = rule or default_rule()
    j = zeros.zeros[:n_modes]
    values = np.asarray(omega0(rule.nodes), dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("initial vorticity is not finite on the quadrature nodes")
    basis = bessel_j0(np.outer(rule.nodes, j))
    weighted = rule.weights * rule.nodes * values
    coeffs = 2.0 * (basis.T @ weighted) / bessel_j0(j) ** 2
    mean = 2.0 * float(np.dot(rule.weights * rule.nodes, values))
    return DiniExpansion(mean=mean, coeffs=coeffs, n_modes=n_modes, zero_table=zeros)


def _check_time(t):
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError("time must be finite and nonnegative")


def _check_radii(r):
    arr = np.asarray(r, dtype=float)
    if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
        raise ValueError("radii must lie in [0, 1]")
    return arr


def _mode_amplitudes(sol: ModalSolution, t: float) -> np.ndarray:
    return sol.expansion.coeffs * np.exp(-sol.decay_rates * t)


def evaluate_vorticity(sol: ModalSolution, r, t: float):
    """Vorticity mean + sum_k A_k exp(-mu_k t) J0(j_k r) at radius r, time t."""
    _check_time(t)
    arr = _check_radii(r)
    basis = bessel_j0(np.outer(arr.ravel(), sol.expansion.mode_zeros))
    out = sol.expansion.mean + (basis @ _mode_amplitudes(sol, t)).reshape(arr.shape)
    return float(out) if np.ndim(r) == 0 else out


def euler_reference(omega0, r, t: float):
    """The inviscid solution: the initial profile, frozen for all time."""
    _check_time(t)
    return omega0(_check_radii(r))


def evaluate_velocity(sol: ModalSolution, grid, t: float) -> VelocityProfile:
    """Azimuthal velocity u(r) = (1/r) int_0^r rho w(rho, t) drho on a radius grid.

    Mode k contributes A_k exp(-mu_k t) J1(j_k r) / j_k, which vanishes at
    r = 0 (regularity) and at r = 1 (no slip, since J1(j_k) = 0).
    """
    _check_time(t)
    arr = np.atleast_1d(_check_radii(grid))
    j = sol.expansion.mode_zeros
    basis = bessel_j1(np.outer(arr, j)) / j
    u = basis @ _mode_amplitudes(sol, t) + 0.5 * sol.expansion.mean * arr
    return VelocityProfile(radii=arr, u_theta=u)


def tail_estimate(expansion: DiniExpansion) -> float:
    """Estimate of sum_{k > N} |A_k J0(j_k)| from a geometric fit.

    The last eight coefficient magnitudes are fit with a common ratio and the
    implied geometric tail is returned.  Spectra that have already decayed to
    rounding noise report zero; non-decaying fits fall back to a crude
    n * |last| bound.
    """
    cached = expansion.__dict__.get("_tail_estimate")
    if cached is not None:
        return cached
    c = np.abs(expansion.coeffs * bessel_j0(expansion.mode_zeros))
    top = float(c.max(initial=0.0))
    window = c[-min(8, len(c)):]
    if top == 0.0 or np.all(window < 1e-13 * top):
        estimate = 0.0
    else:
        positive = window[window > 0]
        ratios = positive[1:] / positive[:-1]
        rho = float(np.exp(np.mean(np.log(ratios)))) if len(ratios) else 1.0
        if 0.0 < rho < 1.0:
            estimate = float(window[-1]) * rho / (1.0 - rho)
        else:
            estimate = float(window[-1]) * len(c)
    expansion.__dict__["_tail_estimate"] = estimate
    return estimate


@dataclass(eq=False)
class _ModeWorkspace:
    """Quadrature-node mode samples reused across snapshot evaluations."""

    rule: QuadratureRule
    radial_weights: np.ndarray   # w_i r_i
    basis0: np.ndarray           # J0(j_k r_i)
    basis1_over_j: np.ndarray    # J1(j_k r_i) / j_k
    prefix0: np.ndarray          # trapezoid cumulative of rho J0(j_k rho) up to r_i
    grid: np.ndarray             # fine grid behind the cumulative integrals
    grid_steps: np.ndarray
    node_index: np.ndarray


def _workspace(expansion: DiniExpansion, rule: QuadratureRule) -> _ModeWorkspace:
    cache = expansion.__dict__.setdefault("_workspaces", {})
    ws = cache.get(id(rule))
    if ws is not None and ws.rule is rule:
        return ws
    j = expansion.mode_zeros
    nodes = rule.nodes
    grid = np.union1d(np.linspace(0.0, 1.0, _NESTED_GRID_POINTS), nodes)
    steps = np.diff(grid)
    integrand = grid[:, None] * bessel_j0(np.outer(grid, j))
    segments = 0.5 * (integrand[1:, :] + integrand[:-1, :]) * steps[:, None]
    cumulative = np.vstack([np.zeros((1, len(j))), np.cumsum(segments, axis=0)])
    node_index = np.searchsorted(grid, nodes)
    ws = _ModeWorkspace(
        rule=rule,
        radial_weights=rule.weights * nodes,
        basis0=bessel_j0(np.outer(nodes, j)),
        basis1_over_j=bessel_j1(np.outer(nodes, j)) / j,
        prefix0=cumulative[node_index, :],
        grid=grid,
        grid_steps=steps,
        node_index=node_index,
    )
    cache[id(rule)] = ws
    return ws


def _cumulative_radial(ws: _ModeWorkspace, values: np.ndarray) -> np.ndarray:
    """Trapezoid cumulative of rho * values(rho) from 0 to each rule node."""
    f = ws.grid * values
    segments = 0.5 * (f[1:] + f[:-1]) * ws.grid_steps
    cumulative = np.concatenate([[0.0], np.cumsum(segments)])
    return cumulative[ws.node_index]


def vorticity_error_norm(sol: ModalSolution, omega0, t: float,
                         rule: QuadratureRule | None = None) -> float:
    """L2(disk) distance between the evolving vorticity and the Euler reference.

    The norm is computed twice: by quadrature of the sampled difference
    against the true initial profile, and by the mode-sum identity
    sqrt(pi * sum_k A_k^2 J0(j_k)^2 (1 - exp(-mu_k t))^2).  The two must
    agree up to the expansion's truncation tail, else ConsistencyFailure is
    raised.  The quadrature value is returned.
    """
    _check_time(t)
    rule = rule or default_rule()
    ws = _workspace(sol.expansion, rule)
    decay = np.exp(-sol.decay_rates * t)
    coeffs = sol.expansion.coeffs
    omega_nodes = sol.expansion.mean + ws.basis0 @ (coeffs * decay)
    diff = omega_nodes - np.asarray(omega0(rule.nodes), dtype=float)
    if not np.all(np.isfinite(diff)):
        raise ValueError("reference profile is not finite on the quadrature nodes")
    quadrature_norm = float(np.sqrt(2.0 * np.pi * np.dot(ws.radial_weights, diff * diff)))
    amplitudes = coeffs * bessel_j0(sol.expansion.mode_zeros) * (1.0 - decay)
    spectral_norm = float(np.sqrt(np.pi * np.dot(amplitudes, amplitudes)))
    tolerance = 1e-8 + math.sqrt(math.pi) * tail_estimate(sol.expansion)
    if abs(quadrature_norm - spectral_norm) > tolerance:
        raise ConsistencyFailure(
            "vorticity norm mismatch at t={:g}: quadrature {:.12e} vs spectral {:.12e}".format(
                t, quadrature_norm, spectral_norm
            )
        )
    return quadrature_norm


def velocity_error_norm(sol: ModalSolution, omega0, t: float,
                        rule: QuadratureRule | None = None) -> float:
    """L2(disk) distance between the evolving velocity and the Euler velocity.

    Evaluates sqrt(2 pi int_0^1 g(r)^2 dr / r) with the inner integral
    g(r) = int_0^r rho (w - w_E) drho in closed modal form
    sum_k A_k (exp(-mu_k t) - 1) r J1(j_k r) / j_k, and cross checks g
    against direct nested quadrature of the sampled difference.
    """
    _check_time(t)
    rule = rule or default_rule()
    ws = _workspace(sol.expansion, rule)
    decay = np.exp(-sol.decay_rates * t)
    coeffs = sol.expansion.coeffs
    g_modal = rule.nodes * (ws.basis1_over_j @ (coeffs * (decay - 1.0)))
    value = float(np.sqrt(2.0 * np.pi * np.dot(rule.weights, g_modal * g_modal / rule.nodes)))

    omega0_grid = np.asarray(omega0(ws.grid), dtype=float)
    if not np.all(np.isfinite(omega0_grid)):
        raise ValueError("initial vorticity is not finite on the cross-check grid")
    g_nested = (
        0.5 * sol.expansion.mean * rule.nodes**2
        + ws.prefix0 @ (coeffs * decay)
        - _cumulative_radial(ws, omega0_grid)
    )
    nested = float(np.sqrt(2.0 * np.pi * np.dot(rule.weights, g_nested * g_nested / rule.nodes)))
    tolerance = 1e-6 + math.sqrt(math.pi) * tail_estimate(sol.expansion)
    if abs(value - nested) > tolerance:
        raise ConsistencyFailure(
            "velocity norm mismatch at t={:g}: modal {:.12e} vs nested {:.12e}".format(
                t, value, nested
            )
        )
    return value
