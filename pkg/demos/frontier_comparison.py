"""Best attainable squeezing vs brightness, all methods side by side.

Sweeps each method over its stock grid, extracts the optimal-squeezing
envelope under a few overall-uncertainty ceilings, writes one SVG chart
per method into demos/output/, and prints the ranking at alpha_sq = 0.1.
"""

import os

from sqzlab import LogBins, Method, default_grid, frontier_suite
from sqzlab.svg import frontier_svg

OUT_DIR = os.path.join(os.path.dirname(__file__), "output")
THRESHOLDS = (1.01, 1.1, 2.0)
BINS = LogBins(1e-6, 1.0, 200)
METHODS = (
    Method.BEAM_SPLITTER,
    Method.OPO_PHASE,
    Method.OPA_PHASE,
    Method.OM_AMPLITUDE,
)

os.makedirs(OUT_DIR, exist_ok=True)
at_tenth = {}
for method in METHODS:
    curves = frontier_suite(method, THRESHOLDS, default_grid(method), BINS)
    path = os.path.join(OUT_DIR, f"frontier_{method.value}.svg")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(frontier_svg(curves, title=f"optimal squeezing: {method.value}"))
    print(f"wrote {path}")
    tenth_bin = BINS.index(0.1)
    for p in curves[-1].points:  # threshold 2.0
        if BINS.index(p.alpha_sq) == tenth_bin:
            at_tenth[method.value] = p.squeeze_db

print()
print("best squeezing at alpha_sq = 0.1 under uncertainty <= 2:")
for name, db in sorted(at_tenth.items(), key=lambda kv: -kv[1]):
    print(f"  {name:13s} {db:6.2f} dB")
print()
print("seeded amplification beats passive mixing; the dissipative")
print("optomechanical route trails both once brightness is demanded.")
