import math

import numpy as np
import pytest

from diskvort import (
    FdGrid,
    FdState,
    FluidParams,
    ModalSolution,
    ZeroMeanViolation,
    bessel_j0,
    conserved_weights,
    dini_expand,
    discrete_mean,
    evaluate_vorticity,
    fd_solve,
    j1_zeros,
    pde_residual,
    radial_laplacian,
    weighted_energy,
)


@pytest.fixture(scope="module")
def eigen(zeros8, rule):
    j1 = zeros8.zeros[0]
    omega0 = lambda r: bessel_j0(j1 * np.asarray(r, dtype=float))
    expansion = dini_expand(omega0, 8, zeros8, rule)
    return omega0, expansion, j1


def weighted_l2(grid, values):
    return math.sqrt(float(np.dot(conserved_weights(grid), values**2)))


def test_laplacian_of_constant_vanishes():
    grid = FdGrid(n_nodes=257)
    state = FdState(grid=grid, values=np.full(grid.n_nodes, 3.0))
    assert np.max(np.abs(radial_laplacian(state))) < 1e-10


def test_laplacian_of_r_squared_is_four():
    grid = FdGrid(n_nodes=257)
    state = FdState(grid=grid, values=grid.radii**2)
    interior = radial_laplacian(state)[:-1]
    assert np.max(np.abs(interior - 4.0)) < 1e-10


def test_laplacian_of_eigen_mode_is_second_order(eigen):
    omega0, _, j1 = eigen

    def interior_error(n):
        grid = FdGrid(n_nodes=n)
        state = FdState(grid=grid, values=omega0(grid.radii))
        exact = -(j1**2) * omega0(grid.radii)
        return np.max(np.abs((radial_laplacian(state) - exact)[1:-1]))

    coarse = interior_error(513)
    fine = interior_error(1025)
    assert fine < 1e-4
    assert 3.4 < coarse / fine < 4.6


def test_pde_residual_refines_at_second_order(eigen, zeros8):
    _, expansion, _ = eigen
    sol = ModalSolution(expansion=expansion, params=FluidParams(nu=0.01, alpha=0.1))
    coarse = pde_residual(sol, FdGrid(n_nodes=513), 0.5, 1e-3)
    fine = pde_residual(sol, FdGrid(n_nodes=1025), 0.5, 5e-4)
    assert coarse < 1e-3
    assert 3.5 <= coarse / fine <= 4.5


def test_pde_residual_vanishes_for_stationary_solution(eigen):
    _, expansion, _ = eigen
    sol = ModalSolution(expansion=expansion, params=FluidParams(nu=0.0, alpha=0.1))
    assert pde_residual(sol, FdGrid(n_nodes=257), 0.5, 1e-3) < 1e-12


def test_pde_residual_of_euler_reference_sees_the_viscous_term():
    params = FluidParams(nu=0.02, alpha=0.1)
    frozen = lambda r, t: 1.0 - 2.0 * np.asarray(r, dtype=float) ** 2
    residual = pde_residual(frozen, FdGrid(n_nodes=513), 0.5, 1e-3, params=params)
    # omega_t = 0 leaves -nu * Delta(1 - 2 r^2) = 8 nu
    assert abs(residual - 8.0 * params.nu) < 1e-8


def test_pde_residual_requires_params_for_bare_callables():
    with pytest.raises(ValueError):
        pde_residual(lambda r, t: np.zeros_like(r), FdGrid(n_nodes=65), 0.5, 1e-3)


def test_fd_matches_modal_solution(eigen):
    omega0, expansion, j1 = eigen
    params = FluidParams(nu=0.01, alpha=0.1)
    sol = ModalSolution(expansion=expansion, params=params)
    grid = FdGrid(n_nodes=1025)
    state = fd_solve(omega0, params, grid, 1.0, 1000)
    modal = evaluate_vorticity(sol, grid.radii, 1.0)
    rel = weighted_l2(grid, state.values - modal) / weighted_l2(grid, modal)
    assert rel < 1e-4


def test_fd_is_stationary_without_viscosity(eigen):
    omega0, _, _ = eigen
    grid = FdGrid(n_nodes=257)
    state = fd_solve(omega0, FluidParams(nu=0.0, alpha=0.1), grid, 1.0, 100)
    assert np.max(np.abs(state.values - omega0(grid.radii))) < 1e-13
    assert state.time == 1.0


def test_fd_navier_stokes_reduction(eigen):
    omega0, expansion, _ = eigen
    params = FluidParams(nu=0.01, alpha=0.0)
    sol = ModalSolution(expansion=expansion, params=params)
    grid = FdGrid(n_nodes=1025)
    state = fd_solve(omega0, params, grid, 1.0, 1000)
    modal = evaluate_vorticity(sol, grid.radii, 1.0)
    rel = weighted_l2(grid, state.values - modal) / weighted_l2(grid, modal)
    assert rel < 1e-4


def test_fd_rejects_inadmissible_data():
    with pytest.raises(ZeroMeanViolation):
        fd_solve(lambda r: np.ones_like(r), FluidParams(nu=0.01, alpha=0.1),
                 FdGrid(n_nodes=129), 1.0, 10)


def test_mean_is_conserved_per_step(eigen):
    omega0, _, _ = eigen
    params = FluidParams(nu=0.01, alpha=0.1)
    grid = FdGrid(n_nodes=1025)
    dt = 1e-3
    # deterministic stepping: the k-step run shares its prefix with the
    # (k+1)-step run, so consecutive means isolate one step's drift
    means = [discrete_mean(FdState(grid=grid, values=omega0(grid.radii)))]
    for k in range(1, 16):
        means.append(discrete_mean(fd_solve(omega0, params, grid, k * dt, k)))
    drifts = [abs(b - a) for a, b in zip(means, means[1:])]
    assert max(drifts) < 1e-12


def test_mean_is_conserved_over_a_long_run(eigen):
    omega0, _, _ = eigen
    params = FluidParams(nu=0.01, alpha=0.1)
    grid = FdGrid(n_nodes=1025)
    before = discrete_mean(FdState(grid=grid, values=omega0(grid.radii)))
    after = discrete_mean(fd_solve(omega0, params, grid, 1.0, 1000))
    assert abs(after - before) < 1e-12


def test_energy_never_increases_even_at_large_steps(zeros8):
    rng = np.random.default_rng(7)
    grid = FdGrid(n_nodes=129)
    params = FluidParams(nu=0.3, alpha=0.2)
    dt = 0.05
    basis = bessel_j0(np.outer(grid.radii, zeros8.zeros[:6]))
    for _ in range(10):
        coeffs = rng.normal(size=6)
        omega0 = lambda r, c=coeffs: bessel_j0(np.outer(np.asarray(r, dtype=float),
                                                        zeros8.zeros[:6])) @ c
        energies = [weighted_energy(FdState(grid=grid, values=basis @ coeffs))]
        for k in range(1, 13):
            state = fd_solve(omega0, params, grid, k * dt, k)
            energies.append(weighted_energy(state))
        assert all(b <= a * (1.0 + 1e-13) for a, b in zip(energies, energies[1:]))


def test_fd_agrees_across_the_default_sweep(eigen):
    omega0, expansion, _ = eigen
    grid = FdGrid(n_nodes=1025)
    for m in range(1, 6):
        params = FluidParams(nu=10.0**-m, alpha=10.0 ** (-0.75 * m))
        sol = ModalSolution(expansion=expansion, params=params)
        state = fd_solve(omega0, params, grid, 1.0, 1024)
        modal = evaluate_vorticity(sol, grid.radii, 1.0)
        assert weighted_l2(grid, state.values - modal) < 1e-3


def test_fd_error_refines_at_second_order(eigen):
    omega0, expansion, _ = eigen
    params = FluidParams(nu=0.05, alpha=0.1)
    sol = ModalSolution(expansion=expansion, params=params)

    def run(n, steps, t_final=0.5):
        grid = FdGrid(n_nodes=n)
        state = fd_solve(omega0, params, grid, t_final, steps)
        modal = evaluate_vorticity(sol, grid.radii, t_final)
        return weighted_l2(grid, state.values - modal)

    coarse = run(129, 64)
    fine = run(257, 128)
    assert 3.5 <= coarse / fine <= 4.5


def test_grid_and_state_validation():
    with pytest.raises(ValueError):
        FdGrid(n_nodes=2)
    grid = FdGrid(n_nodes=17)
    assert grid.radii[0] == 0.0 and grid.radii[-1] == 1.0
    assert np.max(np.abs(np.diff(grid.radii) - grid.h)) < 1e-15
    with pytest.raises(ValueError):
        FdState(grid=grid, values=np.zeros(5))
    with pytest.raises(ValueError):
        FdState(grid=grid, values=np.full(17, np.nan))
