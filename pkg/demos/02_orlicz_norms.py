"""Luxemburg and weak Orlicz norms on the default 1-D grid.

Shows the characteristic-function law, the weak <= strong ordering, the
normalization property of the gauge, and the Lebesgue-type differentiation
limit on shrinking balls.
"""

import numpy as np

from olab import (
    Ball,
    GridSpec,
    PowerLogYoung,
    PowerYoung,
    luxemburg_norm,
    sample_function,
    weak_orlicz_norm,
)

grid = GridSpec(1, 1 / 64, 16.0)
p2 = PowerYoung(2)
chi = sample_function(grid, {"type": "ball_indicator", "center": (0.0,), "radius": 1.0})

print("== characteristic-function law ==")
print("  ||chi_B(0,1)||_{L^Phi} =", luxemburg_norm(chi, p2).value, " (1/phi_inv(1/|B|) = sqrt 2)")
print("  weak norm             =", weak_orlicz_norm(chi, p2).value)

print("\n== weak <= strong on a mixed test function ==")
f = sample_function(grid, {"type": "sum", "terms": [
    {"type": "ball_indicator", "center": (-2.0,), "radius": 1.5, "weight": 0.7},
    {"type": "ball_indicator", "center": (1.0,), "radius": 0.5, "weight": 2.0},
    {"type": "gaussian", "scale": 1.0, "center": (4.0,)},
]})
for phi, name in [(p2, "t^2"), (PowerLogYoung(2, 1), "t^2 log(e+t)")]:
    s = luxemburg_norm(f, phi).value
    w = weak_orlicz_norm(f, phi).value
    print(f"  {name:14s} strong {s:.6f}  weak {w:.6f}")

print("\n== normalization of the gauge ==")
lam = luxemburg_norm(f, p2).value
print("  integral phi(f / ||f||) =", grid.cell_volume * p2(f.values / lam).sum(), "(<= 1)")

print("\n== differentiation limit at the origin ==")
print("  Gaussian bump, balls of radius 8h on refined grids:")
for h_inv in (64, 128, 256):
    g = GridSpec(1, 1 / h_inv, 16.0)
    bump = sample_function(g, {"type": "gaussian", "scale": 1.0})
    r = 8.0 / h_inv
    chi_r = sample_function(g, {"type": "ball_indicator", "center": (0.0,), "radius": r})
    ratio = luxemburg_norm(bump, p2, Ball((0.0,), r)).value / luxemburg_norm(chi_r, p2).value
    print(f"    h = 1/{h_inv:<4d} ratio = {ratio:.6f} -> f(0) = 1")
