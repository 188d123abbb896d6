"""Resolve a single farm snapshot and show which ensembles form.

Two drones are idle near field F2, a flock has landed there, and a third
drone is low on energy next to a free charger.  The exact resolver decides
who approaches the field and who goes to charge.
"""

from ensemble_resolution.scenario import build_scenario_candidates, derive_tasks
from ensemble_resolution.sim import DroneKnowledge, DroneMode, KnowledgeSnapshot, WorldConfig
from ensemble_resolution.solver import brute_force_solve, encode, solve

cfg = WorldConfig()
idle = DroneMode.IDLE
snap = KnowledgeSnapshot(
    occupied=(True, False, True),
    drones=(
        DroneKnowledge(0.9, 180.0, 120.0, idle),
        DroneKnowledge(0.8, 230.0, 130.0, idle),
        DroneKnowledge(0.1, 210.0, 160.0, idle),
        DroneKnowledge(0.0, 50.0, 280.0, DroneMode.DEAD),
    ),
    flocks=((200.0, 70.0),) + ((395.0, 295.0),) * 4,
)

cands = build_scenario_candidates(snap, cfg, frozenset())
problem = encode(cands)
print(f"{len(cands)} candidate ensembles, {len(problem.variables)} Boolean variables")

result = solve(problem)
print(f"utility {result.utility:.3f}, optimal={result.optimal}, nodes={result.stats.nodes}")
for iid, inst in cands.instances.items():
    if result.best.is_present(iid):
        members = {r: sorted(result.best.selected(iid, r)) for r in inst.roles}
        print(f"  {inst.spec.name:26} {members}")

print("tasks:")
for task in derive_tasks(cands, result.best):
    print("  ", task)

# the exhaustive oracle agrees, tie-break included
assert brute_force_solve(problem).bits == result.bits
