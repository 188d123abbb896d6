"""Put a learned predictor back into the loop.

Three ways to run the farm for a few simulated hours: drones never form
ensembles, the exact resolver decides everything, or a decision tree picks
the field-approach memberships and the solver handles the rest.  Lower
undisturbed bird time is better.
"""

import statistics
import tempfile
from pathlib import Path

from ensemble_resolution import harness
from ensemble_resolution.sim import WorldConfig

cfg = WorldConfig().with_changes(episode_minutes=180)

data = harness.generate(cfg, episodes=12, seed=7)
model, _ = harness.train(data, "dt-single", holdout=0.0)
path = Path(tempfile.mkdtemp()) / "dt.json"
model.save(path)

plans = [harness.RunPlan("never", 5), harness.RunPlan("exact", 5),
         harness.RunPlan("hybrid", 5, model=str(path), label="hybrid-dt")]
for s in harness.compare(plans, cfg):
    lat = s.latency()
    line = f"{s.plan:10} mean undisturbed minutes {s.stats['mean']:6.1f}  violations {s.violations}"
    if "resolve_median_s" in lat:
        line += f"  median resolve {lat['resolve_median_s'] * 1e3:.2f} ms"
    if "predictor_median_s" in lat:
        line += f"  (predictor {lat['predictor_median_s'] * 1e6:.0f} us)"
    print(line)
