"""Generalized Orlicz-Morrey norms: ball suprema, witnesses, triviality.

Builds Morrey-type norms as suprema over sampled ball families, shows the
witness ball where the sup is attained, probes parameter ranges where the
space degenerates to {0}, and checks growth-function class membership.
"""

import numpy as np

from olab import (
    GridSpec,
    MorreySampling,
    PowerGrowth,
    PowerYoung,
    check_membership,
    generalized_orlicz_morrey_norm,
    growth_from_lambda,
    sample_function,
    triviality_probe,
)

grid = GridSpec(1, 1 / 64, 16.0)
p2 = PowerYoung(2)
chi = sample_function(grid, {"type": "ball_indicator", "center": (0.0,), "radius": 1.0})

print("== Morrey norm of the unit-ball indicator ==")
varphi = PowerGrowth(-0.25)  # the lambda = 1/2 power model for p = 2, n = 1
ev = generalized_orlicz_morrey_norm(chi, p2, varphi)
print(f"  value = {ev.value:.6f}")
print(f"  witness ball: center {ev.witness.center}, radius {ev.witness.radius:.6f}")
print(f"  truncation: {ev.truncation}")

print("\n== weak variant ==")
evw = generalized_orlicz_morrey_norm(chi, p2, varphi, weak=True)
print(f"  weak value = {evw.value:.6f} (<= strong)")

print("\n== the lambda = 0 norm recovers the global Orlicz norm ==")
lam0 = growth_from_lambda(p2, 0.0, measure_based=True)
ev0 = generalized_orlicz_morrey_norm(
    chi, p2, lam0, sampling=MorreySampling(r_min=4 * grid.h, r_max=2.0**10, n_radii=128))
print(f"  value = {ev0.value:.6f} (global norm is sqrt 2 = {np.sqrt(2):.6f})")

print("\n== triviality probes ==")
for lam in (-1.0, 0.5, 2.0):
    rep = triviality_probe(p2, growth_from_lambda(p2, lam), grid=grid)
    det = rep.details
    print(f"  lambda = {lam:4}: {rep.verdict:13s} "
          f"(upper leg {det['upper']['verdict']}, lower leg {det['lower']['verdict']})")

print("\n== growth-function classes ==")
for expo in (-0.5, 0.5):
    g_rep = check_membership(PowerGrowth(expo), p2, "g")
    o_rep = check_membership(PowerGrowth(expo), p2, "omega")
    print(f"  t^{expo:+.1f}: almost-monotone class {g_rep.verdict:13s} "
          f"admissibility {o_rep.verdict}")
