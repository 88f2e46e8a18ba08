"""Run the exhaustive searches that back the shipped result fixtures.

Each completed run is dumped to .gen/results/ as JSON with counts,
canonical witnesses, node totals and wall time, so an interrupted batch
keeps everything finished so far.  Run order puts the cheap jobs first.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

from gridlock import BoardSize
from gridlock.search import min_dominating, min_dominating_exterior

OUT = Path(__file__).resolve().parent.parent / ".gen" / "results"


def dump(name: str, outcome, started: float) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    payload = {
        "n": outcome.board.n,
        "mode": outcome.mode,
        "margin": outcome.margin,
        "minimum": outcome.minimum_size,
        "distinct": outcome.distinct_count,
        "classes": outcome.symmetry_class_count,
        "exhausted": outcome.exhausted,
        "nodes": outcome.nodes_explored,
        "seconds": round(time.time() - started, 1),
        "witnesses": [
            [[p.x, p.y] for p in w.points] for w in outcome.witnesses
        ],
        "phases": [
            {"size": ph.size, "nodes": ph.nodes, "found": ph.found}
            for ph in outcome.phases
        ],
    }
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(payload))
    print(f"[done] {name}: min={payload['minimum']} distinct={payload['distinct']} "
          f"classes={payload['classes']} nodes={payload['nodes']:,} "
          f"{payload['seconds']}s", flush=True)


def run_grid(n: int, mode: str, enumerate_all: bool, tag: str = "") -> None:
    name = f"grid_n{n}_{mode}" + (tag or ("" if enumerate_all else "_first"))
    if (OUT / f"{name}.json").exists():
        print(f"[skip] {name}", flush=True)
        return
    t0 = time.time()
    outcome = min_dominating(BoardSize(n), mode, enumerate_all=enumerate_all)
    dump(name, outcome, t0)


def run_exterior(n: int, margin: int, enumerate_all: bool) -> None:
    name = f"exterior_n{n}_e{margin}"
    if (OUT / f"{name}.json").exists():
        print(f"[skip] {name}", flush=True)
        return
    t0 = time.time()
    outcome = min_dominating_exterior(
        BoardSize(n), margin, "independent", enumerate_all=enumerate_all
    )
    dump(name, outcome, t0)


def main() -> None:
    jobs = sys.argv[1:] or ["quick", "long"]
    if "quick" in jobs:
        for n in range(2, 9):
            run_grid(n, "independent", True)
        for n in range(2, 9):
            run_grid(n, "general", True)
        run_exterior(2, 1, True)
    if "long" in jobs:
        run_exterior(7, 2, True)
        run_grid(9, "independent", True)
        run_grid(10, "independent", True)
        run_grid(9, "general", False)
        run_grid(10, "general", False)
        run_grid(11, "independent", True)
        run_grid(12, "independent", True)


if __name__ == "__main__":
    main()
