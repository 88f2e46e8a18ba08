"""Results cache for exhaustive searches.

Search results are stored one JSON record per line keyed by
(n, mode, margin).  The package ships a pre-seeded read-only layer with
the small-board enumerations so API consumers and the gallery UI get
instant answers; a writable user layer (GRIDLOCK_CACHE_DIR, defaulting
to ~/.cache/gridlock) holds anything computed locally.  A record whose
search ran to exhaustion is never silently replaced by a budgeted one.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .domination import Solution
from .geometry import BoardSize
from .search import SearchOutcome


def default_cache_dir() -> Path:
    env = os.environ.get("GRIDLOCK_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "gridlock"


@dataclass(frozen=True)
class CachedResult:
    n: int
    mode: str
    margin: int
    minimum: int
    distinct: int
    classes: int
    exhausted: bool
    nodes: int
    witnesses: tuple[Solution, ...]
    enumerated: bool = False

    @property
    def key(self) -> tuple[int, str, int]:
        return (self.n, self.mode, self.margin)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "margin": self.margin,
            "minimum": self.minimum,
            "distinct": self.distinct,
            "classes": self.classes,
            "exhausted": self.exhausted,
            "nodes": self.nodes,
            "enumerated": self.enumerated,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CachedResult":
        witnesses = tuple(
            Solution.from_json_dict(w) for w in data["witnesses"]
        )
        return cls(
            n=int(data["n"]),
            mode=str(data["mode"]),
            margin=int(data.get("margin", 0)),
            minimum=int(data["minimum"]),
            distinct=int(data["distinct"]),
            classes=int(data["classes"]),
            exhausted=bool(data["exhausted"]),
            nodes=int(data.get("nodes", 0)),
            witnesses=witnesses,
            enumerated=bool(data.get("enumerated", False)),
        )

    @classmethod
    def from_outcome(
        cls, outcome: SearchOutcome, enumerated: bool = False
    ) -> "CachedResult":
        return cls(
            n=outcome.board.n,
            mode=outcome.mode,
            margin=outcome.margin,
            minimum=outcome.minimum_size,
            distinct=outcome.distinct_count,
            classes=outcome.symmetry_class_count,
            exhausted=outcome.exhausted,
            nodes=outcome.nodes_explored,
            witnesses=outcome.witnesses,
            enumerated=enumerated,
        )


def _load_jsonl(text: str) -> dict[tuple[int, str, int], CachedResult]:
    out: dict[tuple[int, str, int], CachedResult] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rec = CachedResult.from_json_dict(json.loads(line))
        out[rec.key] = rec
    return out


def packaged_results() -> dict[tuple[int, str, int], CachedResult]:
    """The read-only result layer shipped inside the package."""
    try:
        ref = resources.files("gridlock").joinpath("data/results.jsonl")
        text = ref.read_text(encoding="utf-8")
    except (FileNotFoundError, ModuleNotFoundError):
        return {}
    return _load_jsonl(text)


class ResultsCache:
    """Two-layer cache: packaged seed underneath, user directory on top."""

    def __init__(self, directory: Path | str | None = None) -> None:
        self.directory = Path(directory) if directory else default_cache_dir()
        self._lock = threading.Lock()
        self._seed = packaged_results()
        self._user = self._load_user()

    @property
    def path(self) -> Path:
        return self.directory / "results.jsonl"

    def _load_user(self) -> dict[tuple[int, str, int], CachedResult]:
        try:
            return _load_jsonl(self.path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return {}

    def get(self, n: int, mode: str, margin: int = 0) -> CachedResult | None:
        """Best available record: an exhausted one wins over a budgeted one."""
        key = (n, mode, margin)
        with self._lock:
            user = self._user.get(key)
            seed = self._seed.get(key)
        if user and seed:
            if (seed.exhausted, seed.enumerated) > (user.exhausted, user.enumerated):
                return seed
            return user
        return user or seed

    def put(self, result: CachedResult | SearchOutcome, force: bool = False) -> bool:
        """Store a result; returns False when the guard rejects a downgrade.

        An exhausted record is only replaced by another exhausted record
        unless force is set.
        """
        if isinstance(result, SearchOutcome):
            result = CachedResult.from_outcome(result)
        with self._lock:
            old = self._user.get(result.key)
            if old and old.exhausted and not result.exhausted and not force:
                return False
            self._user[result.key] = result
            self._write_locked()
        return True

    def _write_locked(self) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = "\n".join(
            json.dumps(rec.to_json_dict(), separators=(",", ":"))
            for rec in sorted(self._user.values(), key=lambda r: r.key)
        )
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload + ("\n" if payload else ""))
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def keys(self) -> list[tuple[int, str, int]]:
        with self._lock:
            return sorted(set(self._seed) | set(self._user))
