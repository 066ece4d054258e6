"""Young functions: evaluation, inverses, conjugates, growth classes.

Walks through the supported kinds, checks the generalized inverse against
re-evaluation, builds tabulated convex conjugates, and classifies doubling
behavior.
"""

import numpy as np

from olab import (
    ExpMinusOneYoung,
    LinearCappedYoung,
    PowerLogYoung,
    PowerYoung,
    classify_growth,
)

print("== evaluation ==")
p2 = PowerYoung(2)
plog = PowerLogYoung(2, 1)
cap = LinearCappedYoung()
for phi, name in [(p2, "t^2"), (plog, "t^2 log(e+t)"), (cap, "cap at 1")]:
    print(f"  {name:14s} at 0.5, 1.5, 3.0:",
          [phi(t) for t in (0.5, 1.5, 3.0)])

print("\n== generalized inverses ==")
print("  cube root of 8:", PowerYoung(3).inverse(8.0))
root = plog.inverse(5.0)
print(f"  t^2 log(e+t) = 5 at t = {root:.12f}; re-evaluates to {plog(root):.12f}")
print("  cap kind, inverse of 100:", cap.inverse(100.0), "(the jump sits at 1)")

print("\n== convex conjugates ==")
conj = p2.conjugate()
rs = np.geomspace(1e-3, 1e3, 7)
print("  pairing product over r (should lie in [1, 2]):")
print("  ", np.round(p2.inverse(rs) * conj.inverse(rs) / rs, 6))
half = PowerYoung(2, scale=0.5)
hc = half.conjugate()
rs = np.geomspace(1e-2, 1e2, 5)
print("  t^2/2 against its conjugate (self-conjugate):")
for r in rs:
    print(f"    r={r:8.3f}  phi={half(r):12.5g}  conj={hc(r):12.5g}")

print("\n== growth classes ==")
for phi, name in [(p2, "t^2"), (plog, "t^2 log(e+t)"), (ExpMinusOneYoung(), "e^t - 1")]:
    for cls in ("delta2", "nabla2", "delta_prime"):
        rep = classify_growth(phi, cls)
        print(f"  {name:14s} {cls:12s} -> {rep.verdict:13s} C = {rep.constant:g}")
