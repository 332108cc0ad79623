"""The Bessel basis behind the solver.

Every admissible vorticity profile on the unit disk expands in the modes
J0(j_k r), where j_1 < j_2 < ... are the positive zeros of J1.  Each mode
automatically satisfies the no-slip constraint int_0^1 r J0(j_k r) dr = 0,
which is exactly why this basis (and not the usual Dirichlet one) drives the
solver.  This script tabulates the zeros, confirms a couple of classical
identities numerically, and draws the first few modes.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from diskvort import bessel_j0, bessel_j1, gauss_rule, integrate_radial, j1_zeros

table = j1_zeros(8)
print("first zeros of J1 (certified to 1e-12):")
for k, z in enumerate(table.zeros, start=1):
    print(f"  j_{k} = {z:.12f}   residual J1(j_{k}) = {bessel_j1(z):+.2e}")

# the defining property: each mode integrates to zero against r dr
rule = gauss_rule(16, 16)
print("\nno-slip constraint per mode, int_0^1 r J0(j_k r) dr:")
for k, z in enumerate(table.zeros[:4], start=1):
    value = integrate_radial(lambda r: bessel_j0(z * r), rule)
    print(f"  mode {k}: {value:+.2e}")

# d/dx [x J1(x)] = x J0(x), checked by central differences
x = np.linspace(0.5, 20.0, 7)
h = 1e-6
lhs = ((x + h) * bessel_j1(x + h) - (x - h) * bessel_j1(x - h)) / (2 * h)
print("\nmax |d/dx[x J1] - x J0| on a sample grid:", np.max(np.abs(lhs - x * bessel_j0(x))))

r = np.linspace(0.0, 1.0, 512)
fig, ax = plt.subplots(figsize=(7, 4))
for k in range(4):
    ax.plot(r, bessel_j0(table.zeros[k] * r), label=f"$J_0(j_{{{k + 1}}} r)$")
ax.axhline(0.0, color="gray", lw=0.5)
ax.set_xlabel("r")
ax.set_title("Dini basis modes on the unit disk")
ax.legend()
fig.tight_layout()
fig.savefig("demo01_basis_modes.png", dpi=150)
print("\nwrote demo01_basis_modes.png")
