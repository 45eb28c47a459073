"""Seeded optical parametric oscillator: the two operating regimes.

With the pump and seed drives out of phase the cavity amplifies the seed
and squeezes phase; in phase it deamplifies and squeezes amplitude. The
amplifying regime buys brightness cheaply (gain (1+c0)/(1-c0)); the
deamplifying one has to burn seed power against the deamplification, and
its brightness-vs-seed map even turns around, which is where sweeps cut
off.
"""

import numpy as np

from sqzlab import (
    OpoParams,
    Regime,
    amplitude_cutoff_index,
    opo_evaluate,
    squeeze_metrics,
)

print("phase-squeezing (amplifying) regime, seed_ratio = 1e-3")
print(f"{'c0':>6} {'alpha_sq':>12} {'squeeze dB':>11} {'uncertainty':>12}")
for c0 in (0.3, 0.6, 0.9, 0.99):
    pt = opo_evaluate(OpoParams(c0, 1e-3, Regime.PHASE_SQUEEZING))
    m = squeeze_metrics(pt.stats)
    print(f"{c0:6.2f} {pt.alpha_sq:12.3e} {m.squeeze_db:11.3f} {m.uncertainty:12.5f}")

print()
print("amplitude-squeezing (deamplifying) regime at c0 = 0.6:")
print("brightness vs seed turns around, cutting off the usable sweep")
seeds = np.logspace(-2, 1.0, 16)
points = [opo_evaluate(OpoParams(0.6, float(s), Regime.AMPLITUDE_SQUEEZING)) for s in seeds]
cut = amplitude_cutoff_index([p.alpha_sq for p in points])
for i, (s, pt) in enumerate(zip(seeds, points)):
    mark = "  <- cutoff starts here" if cut is not None and i == cut else ""
    print(f"seed {s:9.3e}  alpha_sq {pt.alpha_sq:11.4e}{mark}")
