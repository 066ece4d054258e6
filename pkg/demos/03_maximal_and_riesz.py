"""Fractional maximal operators and the Riesz potential on sampled functions.

Reproduces the closed-form values on the unit-ball indicator, compares the
uncentered and centered operators, and checks the pointwise domination of
the maximal function by the Riesz potential.
"""

import numpy as np

from olab import GridSpec, maximal, riesz_potential, sample_function

grid = GridSpec(1, 1 / 64, 16.0)
chi = sample_function(grid, {"type": "ball_indicator", "center": (0.0,), "radius": 1.0})

print("== closed forms for M_{1/2} chi_{B(0,1)} ==")
m = maximal(chi, alpha=0.5)
print(f"  at x = 0: {m.value_at(0.0):.6f}   (continuum sqrt 2 = {np.sqrt(2):.6f})")
print(f"  at x = 3: {m.value_at(3.0):.6f}   (continuum 1/sqrt 2 = {2**-0.5:.6f})")

print("\n== Hardy-Littlewood operator fixes constants ==")
const = sample_function(grid, {"type": "ball_indicator", "center": (0.0,), "radius": 16.0})
m0 = maximal(const, alpha=0.0)
print("  M(1) on the interior of the domain:", np.unique(m0.values[512:-512]))

print("\n== uncentered vs centered ==")
for alpha in (0.0, 0.25, 0.5):
    c = maximal(chi, alpha=alpha).values
    u = maximal(chi, alpha=alpha, centered=False).values
    worst = (u / np.maximum(c, 1e-300)).max()
    print(f"  alpha={alpha}: max uncentered/centered = {worst:.6f} <= 2^(1-alpha) = {2**(1-alpha):.6f}")

print("\n== Riesz potential ==")
i_half = riesz_potential(chi, 0.5)
print(f"  I_{{1/2}} chi at 0 = {i_half.value_at(0.0):.6f}  (integral of |y|^(-1/2) over [-1,1] is 4)")
m_half = maximal(chi, alpha=0.5)
ok = np.all(m_half.values <= 2**-0.5 * i_half.values * (1 + 1e-9) + 1e-300)
print("  pointwise M_alpha f <= v_1^(alpha-1) I_alpha f:", ok)

print("\n== a 2-D check on a small grid ==")
g2 = GridSpec(2, 1 / 16, 2.0)
disk = sample_function(g2, {"type": "ball_indicator", "center": (0.0, 0.0), "radius": 1.0})
m2 = maximal(disk, alpha=0.5)
print(f"  M_{{1/2}} chi_disk at origin = {m2.value_at((0.0, 0.0)):.6f}  (continuum pi^(1/4) = {np.pi**0.25:.6f})")
i2 = riesz_potential(disk, 1.0)
print(f"  I_1 chi_disk at origin    = {i2.value_at((0.0, 0.0)):.6f}  (continuum 2 pi = {2*np.pi:.6f})")
