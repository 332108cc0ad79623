"""Spectral solver for radially symmetric viscoelastic vorticity on the unit disk.

The package expands an admissible initial vorticity in the Bessel modes
J0(j_k r), evolves each mode with its exponential decay rate, reconstructs
the azimuthal velocity, and measures L2 convergence toward the frozen Euler
solution as viscosity and the elastic length vanish.  An independent
Crank-Nicolson finite-difference solver cross checks the modal evolution.
"""

from .bessel import BesselZeroTable, bessel_j0, bessel_j1, j1_zeros, modified_i0
from .fd import (
    FdGrid,
    FdState,
    conserved_weights,
    discrete_mean,
    fd_solve,
    pde_residual,
    radial_laplacian,
    weighted_energy,
)
from .harness import (
    CSV_HEADER,
    ExperimentConfig,
    SweepReport,
    SweepRow,
    UnknownBuiltin,
    builtin_initial,
    emit_report,
    run_convergence_sweep,
    sweep_path,
)
from .quadrature import QuadratureRule, default_rule, gauss_rule, integrate_radial, l2_disk_norm
from .spectral import (
    ConsistencyFailure,
    DiniExpansion,
    FluidParams,
    ModalSolution,
    RadialProfile,
    Regime,
    VelocityProfile,
    ZeroMeanViolation,
    classify_regime,
    decay_rates,
    dini_expand,
    euler_reference,
    evaluate_velocity,
    evaluate_vorticity,
    tail_estimate,
    validate_initial_vorticity,
    velocity_error_norm,
    vorticity_error_norm,
)

__version__ = "0.1.0"

__all__ = [
    "BesselZeroTable",
    "bessel_j0",
    "bessel_j1",
    "j1_zeros",
    "modified_i0",
    "QuadratureRule",
    "gauss_rule",
    "default_rule",
    "integrate_radial",
    "l2_disk_norm",
    "FluidParams",
    "RadialProfile",
    "VelocityProfile",
    "DiniExpansion",
    "ModalSolution",
    "Regime",
    "ZeroMeanViolation",
    "ConsistencyFailure",
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
    "FdGrid",
    "FdState",
    "conserved_weights",
    "discrete_mean",
    "weighted_energy",
    "radial_laplacian",
    "pde_residual",
    "fd_solve",
    "ExperimentConfig",
    "SweepRow",
    "SweepReport",
    "UnknownBuiltin",
    "sweep_path",
    "builtin_initial",
    "run_convergence_sweep",
    "emit_report",
    "CSV_HEADER",
    "__version__",
]
