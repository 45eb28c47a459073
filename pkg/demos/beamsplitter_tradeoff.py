"""Mixing a squeezed vacuum with a bright coherent state on a beam splitter.

Walks the basic trade-off: turning up the mixing angle brightens the
output (alpha_sq grows) but dilutes the squeezing and pushes the overall
uncertainty above the minimum-uncertainty level. A more strongly squeezed
input is NOT always better once you ask for a bright output.
"""

import math

import numpy as np

from sqzlab import BsParams, bs_evaluate, bs_uncertainty, squeeze_metrics

print("output squeezing and uncertainty vs brightness, two input squeeze levels")
print(f"{'alpha_sq':>10} | {'b=1: dB':>9} {'U':>7} | {'b=2: dB':>9} {'U':>7}")
for theta in np.linspace(0.0, math.pi / 2, 12):
    row = [f"{math.sin(theta)**2:10.4f}"]
    for b in (1.0, 2.0):
        pt = bs_evaluate(BsParams(b=b, theta=float(theta)))
        m = squeeze_metrics(pt.stats)
        row.append(f"{m.squeeze_db:9.3f} {m.uncertainty:7.3f}")
    print(" | ".join(row))

print()
print("the counterintuitive part: at fixed brightness, the best input squeeze")
print("level under an uncertainty budget is finite, not 'as much as possible'")
alpha_sq = 0.25
theta = math.asin(math.sqrt(alpha_sq))
budget = 1.5
best = None
for b in np.linspace(0.0, 6.0, 601):
    p = BsParams(b=float(b), theta=theta)
    if bs_uncertainty(p) <= budget:
        m = squeeze_metrics(bs_evaluate(p).stats)
        if best is None or m.squeeze_db > best[1]:
            best = (float(b), m.squeeze_db)
print(
    f"alpha_sq = {alpha_sq}, uncertainty <= {budget}: best input b = "
    f"{best[0]:.2f} giving {best[1]:.2f} dB"
)
print(f"(an unconstrained b = 6 input would give uncertainty "
      f"{bs_uncertainty(BsParams(6.0, theta)):.1f})")
