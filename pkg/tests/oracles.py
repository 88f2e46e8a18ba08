"""Naive reference implementations used as oracles.

Everything here is written from the definitions with plain loops: no
pruning, no symmetry reduction, no bitmasks, no shared code with the
package beyond the core datatypes.  Slow on purpose.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from gridlock.geometry import BoardSize, GridPoint


def cross(a: GridPoint, b: GridPoint, c: GridPoint) -> int:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def naive_dominated(n: int, points: list[GridPoint]) -> set[GridPoint]:
    """Triple loop over cells x point pairs, cross-product collinearity."""
    out = set(p for p in points if 1 <= p.x <= n and 1 <= p.y <= n)
    for qx in range(1, n + 1):
        for qy in range(1, n + 1):
            q = GridPoint(qx, qy)
            if q in out:
                continue
            for a, b in combinations(points, 2):
                if cross(a, b, q) == 0:
                    out.add(q)
                    break
    return out


def naive_is_dominating(n: int, points: list[GridPoint]) -> bool:
    return len(naive_dominated(n, points)) == n * n


def naive_general_position(points: list[GridPoint]) -> bool:
    return all(cross(a, b, c) != 0 for a, b, c in combinations(points, 3))


def naive_min_dominating(n: int, mode: str) -> tuple[int, int]:
    """(minimum size, number of distinct minimum sets) by full enumeration."""
    cells = [GridPoint(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    for k in range(1, len(cells) + 1):
        count = 0
        for combo in combinations(cells, k):
            pts = list(combo)
            if mode == "independent" and not naive_general_position(pts):
                continue
            if naive_is_dominating(n, pts):
                count += 1
        if count:
            return k, count
    raise AssertionError("unreachable: the full grid dominates itself")


def naive_torus_dominated(n: int, points: list[tuple[int, int]]) -> set[tuple[int, int]]:
    """Per-cell line scan on the torus.

    A torus line is the projection of an integer line: through a cell q
    it is {q + t*d mod n} for a residue direction d that lifts to a
    primitive integer vector, which happens exactly when
    gcd(dx, dy, n) = 1.  A cell is dominated when it carries a point or
    some line through it holds two points of the set.
    """
    pts = set((x % n, y % n) for x, y in points)
    dirs = [
        (dx, dy)
        for dx in range(n)
        for dy in range(n)
        if (dx or dy) and gcd(gcd(dx, dy), n) == 1
    ]
    out = set()
    for qx in range(n):
        for qy in range(n):
            q = (qx, qy)
            if q in pts:
                out.add(q)
                continue
            for dx, dy in dirs:
                line = {((qx + t * dx) % n, (qy + t * dy) % n) for t in range(n)}
                if len(line & pts) >= 2:
                    out.add(q)
                    break
    return out


def naive_game_value(n: int, placed: tuple[tuple[int, int], ...] = ()) -> str:
    """Zermelo recursion on raw sets: who wins from this position.

    The player unable to move loses, so a position with no legal cell
    is a loss for the side to move.
    """
    pts = [GridPoint(x, y) for x, y in placed]
    moves = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            q = GridPoint(x, y)
            if q in pts:
                continue
            if any(cross(a, b, q) == 0 for a, b in combinations(pts, 2)):
                continue
            moves.append((x, y))
    for mv in moves:
        if naive_game_value(n, placed + (mv,)) == "loss":
            return "win"
    return "loss"


def board_points(n: int) -> list[GridPoint]:
    return [GridPoint(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]


__all__ = [
    "board_points",
    "cross",
    "naive_dominated",
    "naive_game_value",
    "naive_general_position",
    "naive_is_dominating",
    "naive_min_dominating",
    "naive_torus_dominated",
]
