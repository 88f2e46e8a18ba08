"""Assemble the packaged results seed and the repo fixtures directory.

Reads the finished search dumps in .gen/results/, converts them to the
cache's JSONL record format (re-verifying every witness on the way in),
and writes a handful of standalone solution files under fixtures/.
Rerunnable; later batch output just extends the seed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from gridlock import BoardSize, GridPoint, Solution
from gridlock.cache import CachedResult
from gridlock.domination import construct_central_columns
from gridlock.torus import construct_even

ROOT = Path(__file__).resolve().parent.parent
GEN = ROOT / ".gen" / "results"
DATA = ROOT / "src" / "gridlock" / "data"
FIXTURES = ROOT / "fixtures"


def load_record(path: Path) -> CachedResult:
    data = json.loads(path.read_text(encoding="utf-8"))
    board = BoardSize(data["n"])
    margin = data.get("margin", 0)
    witnesses = tuple(
        Solution.verified(
            board,
            data["mode"],
            [GridPoint(p[0], p[1]) for p in pts],
            margin=margin,
        )
        for pts in data["witnesses"]
    )
    return CachedResult(
        n=data["n"],
        mode=data["mode"],
        margin=margin,
        minimum=data["minimum"],
        distinct=data["distinct"],
        classes=data["classes"],
        exhausted=data["exhausted"],
        nodes=data["nodes"],
        witnesses=witnesses,
        enumerated=not path.stem.endswith("_first"),
    )


def best_known_record(path: Path, nodes: int) -> CachedResult | None:
    """A non-exhausted seed entry holding one best-known witness."""
    if not path.exists():
        return None
    sol = Solution.from_json_dict(json.loads(path.read_text(encoding="utf-8")))
    return CachedResult(
        n=sol.board.n,
        mode=sol.mode,
        margin=sol.margin,
        minimum=sol.size,
        distinct=1,
        classes=1,
        exhausted=False,
        nodes=nodes,
        witnesses=(sol,),
        enumerated=False,
    )


def main() -> int:
    records = []
    for path in sorted(GEN.glob("*.json")):
        rec = load_record(path)
        records.append(rec)
        wtag = f"{len(rec.witnesses)} witnesses"
        print(f"  {path.stem}: min={rec.minimum} {wtag}")
    augment21 = best_known_record(
        GEN.parent / "probe21_hit.json", nodes=11_462_327
    )
    if augment21 is not None:
        records.append(augment21)
        print(f"  probe21_hit: best known size {augment21.minimum} (not exhausted)")
    DATA.mkdir(parents=True, exist_ok=True)
    seed = DATA / "results.jsonl"
    with seed.open("w", encoding="utf-8") as fh:
        for rec in sorted(records, key=lambda r: r.key):
            fh.write(json.dumps(rec.to_json_dict(), separators=(",", ":")) + "\n")
    print(f"wrote {seed} ({len(records)} records)")

    FIXTURES.mkdir(exist_ok=True)

    def dump(name: str, payload: dict) -> None:
        out = FIXTURES / name
        out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {out}")

    dump("fig3_n16.json", construct_central_columns(BoardSize(16)).to_json_dict())
    dump("torus_n6_even.json", construct_even(6).to_json_dict())
    by_key = {r.key: r for r in records}
    picks = [
        ((7, "general", 0), "n07_general.json"),
        ((7, "independent", 0), "n07_independent.json"),
        ((8, "independent", 0), "n08_independent.json"),
        ((10, "independent", 0), "n10_independent.json"),
        ((2, "independent", 1), "exterior_n2_e1.json"),
        ((7, "independent", 2), "exterior_n7_e2.json"),
    ]
    for key, name in picks:
        rec = by_key.get(key)
        if rec and rec.witnesses:
            dump(name, rec.witnesses[0].to_json_dict())
        else:
            print(f"  missing {key}, skipped {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
