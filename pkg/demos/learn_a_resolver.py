"""Harvest exact decisions from a few short episodes and learn to imitate them.

Every simulated minute the exact resolver decides which field each drone
should approach (or none).  Those decisions become labels for a decision
tree and a small residual network, scored here by balanced accuracy on
episodes they never saw.  With a thousand rows the scores stay modest;
experiments/run_experiments.py trains on 100k and 1M rows.
"""

from ensemble_resolution import harness
from ensemble_resolution.nn import TrainConfig
from ensemble_resolution.sim import WorldConfig

cfg = WorldConfig().with_changes(episode_minutes=120)

train = harness.generate(cfg, episodes=10, seed=100)
test = harness.generate(cfg, episodes=4, seed=500)
print(f"{len(train)} training rows, {len(test)} test rows")
for name, h in zip(train.label_names, train.histograms()):
    print(f"  {name}: " + " ".join(f"{c}={int(n)}" for c, n in zip(train.classes, h)))

for learner in ("dt-single", "dt-multi", "nn-small"):
    model, _ = harness.train(train, learner, holdout=0.0,
                             nn_config=TrainConfig(batch_size=256, epochs=20, seed=0))
    s = harness.evaluate(model, test).summary()
    print(f"{learner:9}  balanced accuracy {s['balanced_accuracy']:.3f}  accuracy {s['accuracy']:.3f}")
