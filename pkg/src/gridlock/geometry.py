"""Exact integer geometry on square boards.

Cells are 1-based (x, y) pairs with x naming the column and y the row.
A board of side n stores subsets as bitmasks indexed row-major:
bit (y - 1) * n + (x - 1).  All predicates use integer arithmetic only,
so there is no tolerance anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class GridPoint:
    """A lattice point.  Coordinates may lie outside the board."""

    x: int
    y: int

    def shifted(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class BoardSize:
    """Side length of a square board plus index helpers."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"board side must be >= 1, got {self.n}")

    @property
    def cell_count(self) -> int:
        return self.n * self.n

    @property
    def half_up(self) -> int:
        # ceil(n / 2); the usual split point for constructions
        return (self.n + 1) // 2

    def contains(self, p: GridPoint) -> bool:
        return 1 <= p.x <= self.n and 1 <= p.y <= self.n

    def index_of(self, p: GridPoint) -> int:
        if not self.contains(p):
            raise ValueError(f"{p} outside board of side {self.n}")
        return (p.y - 1) * self.n + (p.x - 1)

    def point_at(self, index: int) -> GridPoint:
        if not 0 <= index < self.cell_count:
            raise ValueError(f"index {index} out of range for side {self.n}")
        y, x = divmod(index, self.n)
        return GridPoint(x + 1, y + 1)

    def all_points(self) -> Iterator[GridPoint]:
        for index in range(self.cell_count):
            yield self.point_at(index)


@dataclass(frozen=True, order=True)
class Direction:
    """A primitive direction: gcd(|dx|, |dy|) == 1, canonically oriented.

    Canonical means dx > 0, or dx == 0 and dy > 0, so each line keeps a
    single direction label regardless of traversal order.
    """

    dx: int
    dy: int

    def __post_init__(self) -> None:
        if (self.dx, self.dy) == (0, 0):
            raise ValueError("null direction")
        if math.gcd(abs(self.dx), abs(self.dy)) != 1:
            raise ValueError(f"({self.dx}, {self.dy}) is not primitive")
        if not (self.dx > 0 or (self.dx == 0 and self.dy > 0)):
            raise ValueError(f"({self.dx}, {self.dy}) is not canonically oriented")


def collinear(a: GridPoint, b: GridPoint, c: GridPoint) -> bool:
    """True when a, b, c lie on one line.

    Uses the cross product of (b - a) and (c - a); degenerate triples with
    repeated points count as collinear.
    """
    return (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x)


def primitive_direction(a: GridPoint, b: GridPoint) -> Direction:
    """The canonical primitive direction of the line through two distinct points."""
    if a == b:
        raise ValueError(f"direction undefined for coincident points {a}")
    dx = b.x - a.x
    dy = b.y - a.y
    g = math.gcd(abs(dx), abs(dy))
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return Direction(dx, dy)


def grid_line_points(
    board: BoardSize, p: GridPoint, d: Direction
) -> tuple[GridPoint, ...]:
    """All board cells on the infinite line through p with direction d.

    p itself may lie outside the board; the result is ordered along the
    direction of travel and may be empty.
    """
    lo, hi = None, None
    for coord, step, in ((p.x, d.dx), (p.y, d.dy)):
        if step == 0:
            if not 1 <= coord <= board.n:
                return ()
            continue
        # 1 <= coord + t * step <= n as a t-interval
        a = (1 - coord) / step
        b = (board.n - coord) / step
        if a > b:
            a, b = b, a
        t_lo = math.ceil(a)
        t_hi = math.floor(b)
        lo = t_lo if lo is None else max(lo, t_lo)
        hi = t_hi if hi is None else min(hi, t_hi)
    if lo is None:
        raise AssertionError("direction cannot be (0, 0)")
    if hi < lo:
        return ()
    return tuple(
        GridPoint(p.x + t * d.dx, p.y + t * d.dy) for t in range(lo, hi + 1)
    )


def line_through(board: BoardSize, a: GridPoint, b: GridPoint) -> tuple[GridPoint, ...]:
    """Board cells on the line spanned by two distinct lattice points."""
    return grid_line_points(board, a, primitive_direction(a, b))


# ----- Point sets as board-bound bitmasks -----


@dataclass(frozen=True)
class PointSet:
    """An immutable subset of board cells backed by a row-major bitmask."""

    board: BoardSize
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.board.cell_count:
            raise ValueError("bitmask has bits outside the board")

    @classmethod
    def empty(cls, board: BoardSize) -> "PointSet":
        return cls(board, 0)

    @classmethod
    def full(cls, board: BoardSize) -> "PointSet":
        return cls(board, (1 << board.cell_count) - 1)

    @classmethod
    def of(cls, board: BoardSize, points: Sequence[GridPoint]) -> "PointSet":
        bits = 0
        for p in points:
            bits |= 1 << board.index_of(p)
        return cls(board, bits)

    @classmethod
    def of_indices(cls, board: BoardSize, indices: Sequence[int]) -> "PointSet":
        bits = 0
        for i in indices:
            if not 0 <= i < board.cell_count:
                raise ValueError(f"index {i} out of range")
            bits |= 1 << i
        return cls(board, bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, p: GridPoint) -> bool:
        return self.board.contains(p) and bool(self.bits >> self.board.index_of(p) & 1)

    def __iter__(self) -> Iterator[GridPoint]:
        return iter(self.points())

    def indices(self) -> tuple[int, ...]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def points(self) -> tuple[GridPoint, ...]:
        """Members in row-major order."""
        return tuple(self.board.point_at(i) for i in self.indices())

    def with_point(self, p: GridPoint) -> "PointSet":
        return PointSet(self.board, self.bits | 1 << self.board.index_of(p))

    def without_point(self, p: GridPoint) -> "PointSet":
        return PointSet(self.board, self.bits & ~(1 << self.board.index_of(p)))

    def union(self, other: "PointSet") -> "PointSet":
        self._check_same_board(other)
        return PointSet(self.board, self.bits | other.bits)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_same_board(other)
        return PointSet(self.board, self.bits & other.bits)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_same_board(other)
        return PointSet(self.board, self.bits & ~other.bits)

    def issubset(self, other: "PointSet") -> bool:
        self._check_same_board(other)
        return self.bits & ~other.bits == 0

    def _check_same_board(self, other: "PointSet") -> None:
        if self.board != other.board:
            raise ValueError("point sets bound to different boards")


# ----- The dihedral symmetry group of the board -----


class SymmetryTransform(Enum):
    """The eight symmetries of a square board, as maps on 1-based cells."""

    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_X = "flip_x"  # mirror across the vertical axis
    FLIP_Y = "flip_y"  # mirror across the horizontal axis
    TRANSPOSE = "transpose"  # mirror across the main diagonal
    ANTITRANSPOSE = "antitranspose"  # mirror across the anti-diagonal

    def apply_point(self, board: BoardSize, p: GridPoint) -> GridPoint:
        n1 = board.n + 1
        x, y = p.x, p.y
        if self is SymmetryTransform.IDENTITY:
            return p
        if self is SymmetryTransform.ROT90:
            return GridPoint(y, n1 - x)
        if self is SymmetryTransform.ROT180:
            return GridPoint(n1 - x, n1 - y)
        if self is SymmetryTransform.ROT270:
            return GridPoint(n1 - y, x)
        if self is SymmetryTransform.FLIP_X:
            return GridPoint(n1 - x, y)
        if self is SymmetryTransform.FLIP_Y:
            return GridPoint(x, n1 - y)
        if self is SymmetryTransform.TRANSPOSE:
            return GridPoint(y, x)
        return GridPoint(n1 - y, n1 - x)


ALL_TRANSFORMS: tuple[SymmetryTransform, ...] = tuple(SymmetryTransform)


def apply_symmetry(
    board: BoardSize, transform: SymmetryTransform, s: PointSet
) -> PointSet:
    if s.board != board:
        raise ValueError("point set bound to a different board")
    return PointSet.of(
        board, [transform.apply_point(board, p) for p in s.points()]
    )


def _index_key(s: PointSet) -> tuple[int, ...]:
    return s.indices()


def canonical_form(board: BoardSize, s: PointSet) -> PointSet:
    """The lexicographically smallest dihedral image of s.

    Images are compared by their sorted index tuples, so two sets are
    equivalent under the symmetry group exactly when their canonical
    forms are equal.
    """
    return min(
        (apply_symmetry(board, t, s) for t in ALL_TRANSFORMS), key=_index_key
    )


def orbit_images(board: BoardSize, s: PointSet) -> tuple[PointSet, ...]:
    """The distinct dihedral images of s, in canonical index order."""
    seen: dict[int, PointSet] = {}
    for t in ALL_TRANSFORMS:
        image = apply_symmetry(board, t, s)
        seen.setdefault(image.bits, image)
    return tuple(sorted(seen.values(), key=_index_key))


def permutation_table(board: BoardSize):
    """Cell-index permutations for every transform, as an (8, n*n) array.

    Row order matches ALL_TRANSFORMS; row 0 is the identity.  Used by the
    search kernels for prefix canonicity tests.
    """
    import numpy as np

    table = np.empty((len(ALL_TRANSFORMS), board.cell_count), dtype=np.int64)
    for row, t in enumerate(ALL_TRANSFORMS):
        for index in range(board.cell_count):
            table[row, index] = board.index_of(
                t.apply_point(board, board.point_at(index))
            )
    return table
