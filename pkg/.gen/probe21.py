"""One-off: exhaustive hunt for a 16-point independent dominating set on the
21x21 board among sets invariant under an order-4 symmetry subgroup.

C4 covers every D4-symmetric set as well (a D4 orbit is a union of C4
orbits), so the passes below are exhaustive for stabilizer order >= 4.
"""
import json
import sys
import time

sys.setrecursionlimit(100000)

from gridlock.geometry import BoardSize
from gridlock.search import (
    _AXES,
    _DIAGONALS,
    _ROTATIONS,
    _BudgetOut,
    _OrbitMixer,
    _group_orbits,
    _orbit_solution,
)

TARGET = 16
board = BoardSize(21)

passes = []
for name, group in [("C4", _ROTATIONS), ("DIAG", _DIAGONALS), ("AXES", _AXES)]:
    orbits = _group_orbits(board, group)
    quads = [o for o in orbits if len(o) == 4]
    passes.append((f"{name}-quads", quads, 80_000_000))
    if any(len(o) != 4 for o in orbits):
        passes.append((f"{name}-full", orbits, 200_000_000))

for name, orbits, cap in passes:
    t0 = time.time()
    mixer = _OrbitMixer(board, orbits, [cap])
    if TARGET not in mixer.reachable_sums(TARGET):
        print(f"{name}: target unreachable", flush=True)
        continue
    try:
        found = mixer.combo(TARGET)
        status = "exhausted"
    except _BudgetOut:
        found = None
        status = "budget out"
    dt = time.time() - t0
    used = cap - mixer.budget[0]
    if found is not None:
        sol = _orbit_solution(board, found)
        print(f"{name}: HIT size {sol.size} in {dt:.1f}s ({used} ticks)", flush=True)
        with open("/root/pkg/.gen/probe21_hit.json", "w") as fh:
            json.dump(sol.to_json_dict(), fh)
        break
    print(f"{name}: no hit, {status}, {dt:.1f}s ({used} ticks)", flush=True)
print("probe done", flush=True)
