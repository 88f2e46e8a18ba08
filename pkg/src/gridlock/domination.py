"""Domination predicates and verified solution objects.

A cell q is dominated by a point set S when q is a member of S or q lies
on a line spanned by two members of S.  Sets whose members avoid three
collinear points are "independent"; arbitrary sets are "general".
Everything that claims to be a dominating set in this package goes
through the verifying factory in this module first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .geometry import (
    BoardSize,
    GridPoint,
    PointSet,
    grid_line_points,
    primitive_direction,
)

MODE_GENERAL = "general"
MODE_INDEPENDENT = "independent"
_MODES = (MODE_GENERAL, MODE_INDEPENDENT)

# A domination mask is just a PointSet of covered cells.
DominationMask = PointSet


class VerificationError(ValueError):
    """Raised when a claimed solution fails re-verification."""


def dominated_cells(
    board: BoardSize, points: Sequence[GridPoint]
) -> DominationMask:
    """Board cells dominated by an arbitrary collection of lattice points.

    Points may lie outside the board (they then contribute only through
    the lines they span).  Each spanned line is traced once; lines are
    keyed by direction plus the cross-product offset, which is constant
    along a line.
    """
    pts = list(dict.fromkeys(points))  # dedupe, keep order
    bits = 0
    for p in pts:
        if board.contains(p):
            bits |= 1 << board.index_of(p)
    seen_lines = set()
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            d = primitive_direction(a, b)
            key = (d, a.x * d.dy - a.y * d.dx)
            if key in seen_lines:
                continue
            seen_lines.add(key)
            for q in grid_line_points(board, a, d):
                bits |= 1 << board.index_of(q)
    return PointSet(board, bits)


def dominated_mask(board: BoardSize, s: PointSet) -> DominationMask:
    """Cells dominated by a board-bound point set."""
    if s.board != board:
        raise ValueError("point set bound to a different board")
    return dominated_cells(board, s.points())


def is_dominating(board: BoardSize, points: Sequence[GridPoint]) -> bool:
    """True when every board cell is dominated."""
    return dominated_cells(board, points).bits == (1 << board.cell_count) - 1


def is_general_position(points: Sequence[GridPoint]) -> bool:
    """True when no three of the points are collinear.

    Sorts the points and hashes the direction from each anchor to every
    later point; a repeated direction from one anchor is a collinear
    triple.  Repeated points are rejected.
    """
    pts = sorted(points, key=lambda p: (p.y, p.x))
    for i, a in enumerate(pts):
        seen = set()
        for b in pts[i + 1 :]:
            if a == b:
                return False
            d = primitive_direction(a, b)
            if d in seen:
                return False
            seen.add(d)
    return True


# ----- Verified solutions -----


@dataclass(frozen=True)
class Solution:
    """A verified dominating set.

    `points` live in the original board frame; with a nonzero `margin`
    they may range over [1 - margin, n + margin] while domination is
    still required on the board proper.  Instances are built through
    `Solution.verified` (or the JSON loader, which re-verifies), so an
    existing Solution can be trusted to dominate.
    """

    board: BoardSize
    mode: str
    points: tuple[GridPoint, ...]
    margin: int = 0
    provenance: str = "search"

    @property
    def size(self) -> int:
        return len(self.points)

    @classmethod
    def verified(
        cls,
        board: BoardSize,
        mode: str,
        points: Sequence[GridPoint],
        margin: int = 0,
        provenance: str = "search",
    ) -> "Solution":
        if mode not in _MODES:
            raise VerificationError(f"unknown mode {mode!r}")
        if margin < 0:
            raise VerificationError("margin must be >= 0")
        pts = tuple(sorted(points, key=lambda p: (p.y, p.x)))
        if len(set(pts)) != len(pts):
            raise VerificationError("repeated points")
        lo, hi = 1 - margin, board.n + margin
        for p in pts:
            if not (lo <= p.x <= hi and lo <= p.y <= hi):
                raise VerificationError(
                    f"{p} outside the margin-{margin} frame of board {board.n}"
                )
        if mode == MODE_INDEPENDENT and not is_general_position(pts):
            raise VerificationError("three collinear points in independent mode")
        if not is_dominating(board, pts):
            missing = PointSet.full(board).difference(dominated_cells(board, pts))
            raise VerificationError(
                f"not dominating: {len(missing)} cells uncovered, "
                f"first {missing.points()[:3]}"
            )
        return cls(board, mode, pts, margin, provenance)

    def point_set(self) -> PointSet:
        """The members as a PointSet (margin-0 solutions only)."""
        if self.margin:
            raise ValueError("exterior solution does not fit a board-bound set")
        return PointSet.of(self.board, self.points)

    def to_json_dict(self) -> dict:
        out: dict = {
            "kind": "grid",
            "n": self.board.n,
            "mode": self.mode,
            "size": self.size,
            "points": [[p.x, p.y] for p in self.points],
        }
        if self.margin:
            out["margin"] = self.margin
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "Solution":
        if not isinstance(data, dict) or data.get("kind") != "grid":
            raise VerificationError("expected a grid solution object")
        try:
            n = int(data["n"])
            mode = data["mode"]
            raw = data["points"]
        except (KeyError, TypeError, ValueError) as exc:
            raise VerificationError(f"malformed solution: {exc}") from exc
        if not isinstance(raw, list):
            raise VerificationError("points must be a list of [x, y] pairs")
        points = []
        for item in raw:
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise VerificationError(f"bad point entry {item!r}")
            points.append(GridPoint(int(item[0]), int(item[1])))
        margin = int(data.get("margin", 0))
        sol = cls.verified(
            BoardSize(n),
            mode,
            points,
            margin=margin,
            provenance=str(data.get("provenance", "external")),
        )
        if "size" in data and int(data["size"]) != sol.size:
            raise VerificationError(
                f"declared size {data['size']} != actual {sol.size}"
            )
        return sol

    @classmethod
    def from_json(cls, text: str) -> "Solution":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise VerificationError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def construct_central_columns(board: BoardSize) -> Solution:
    """The two-central-columns dominating set of size 2 * ceil(n / 2).

    For even n = 2k the set is the 2 x k block spanning columns k, k + 1
    and rows ceil(k/2) + 1 .. k + ceil(k/2).  For odd n the set built for
    n + 1 already fits inside the board and is returned verbatim.
    """
    n = board.n
    if n < 3:
        raise ValueError(f"construction defined for n >= 3, got {n}")
    k = (n + 1) // 2  # side of the even board actually used is 2k
    lo = (k + 1) // 2 + 1
    points = [
        GridPoint(x, y)
        for x in (k, k + 1)
        for y in range(lo, k + lo)
    ]
    for p in points:
        assert board.contains(p), f"construction escaped the board at {p}"
    return Solution.verified(
        board, MODE_GENERAL, points, provenance="construction"
    )
