"""Solver for the alternating no-three-collinear placement game.

Players take turns placing a point on the n x n grid subject to the
rule that no three placed points may ever be collinear; whoever makes
the last legal move wins.  The game is impartial and fully determined
by the placed set, so positions are memoized on the canonical form of
the placement under the dihedral board symmetries, with the side to
move recovered from parity.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from .domination import is_general_position
from .geometry import (
    BoardSize,
    GridPoint,
    PointSet,
    line_through,
    permutation_table,
)


class Player(str, Enum):
    FIRST = "first"
    SECOND = "second"

    @property
    def other(self) -> "Player":
        return Player.SECOND if self is Player.FIRST else Player.FIRST


class IllegalMoveError(ValueError):
    """A move that violates the placement rules; reason is machine-readable."""

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class GameState:
    board: BoardSize
    placed: PointSet
    to_move: Player

    def __post_init__(self) -> None:
        if self.placed.board != self.board:
            raise ValueError("placed set belongs to a different board")
        expected = Player.FIRST if len(self.placed) % 2 == 0 else Player.SECOND
        if self.to_move is not expected:
            raise ValueError(
                f"side to move {self.to_move.value} inconsistent with "
                f"{len(self.placed)} placed points"
            )
        if not is_general_position(self.placed.points()):
            raise ValueError("placed points contain three collinear")

    @classmethod
    def initial(cls, board: BoardSize) -> "GameState":
        return cls(board, PointSet.empty(board), Player.FIRST)

    def play(self, point: GridPoint) -> "GameState":
        """The state after the side to move places `point`; validates."""
        if not self.board.contains(point):
            raise IllegalMoveError(
                "out_of_range",
                f"({point.x},{point.y}) is outside the {self.board.n}x"
                f"{self.board.n} board",
            )
        if point in self.placed:
            raise IllegalMoveError(
                "occupied", f"({point.x},{point.y}) is already occupied"
            )
        tab = _game_tables(self.board)
        idx = self.board.index_of(point)
        blocked = _blocked_bits(tab, self.placed.indices())
        if (blocked >> idx) & 1:
            raise IllegalMoveError(
                "collinear",
                f"({point.x},{point.y}) is collinear with two placed points",
            )
        return GameState(
            self.board, self.placed.with_point(point), self.to_move.other
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.board.n,
            "placed": [[p.x, p.y] for p in self.placed.points()],
            "toMove": self.to_move.value,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GameState":
        board = BoardSize(int(data["n"]))
        pts = [GridPoint(int(x), int(y)) for x, y in data["placed"]]
        placed = PointSet.of(board, pts)
        if len(pts) != len(placed):
            raise ValueError("duplicate placed points")
        to_move = Player(data["toMove"]) if "toMove" in data else (
            Player.FIRST if len(placed) % 2 == 0 else Player.SECOND
        )
        return cls(board, placed, to_move)


@dataclass(frozen=True)
class GameVerdict:
    """Outcome of a solve; winner None means the node budget ran out."""

    winner: Player | None
    principal_move: GridPoint | None
    nodes: int

    @property
    def known(self) -> bool:
        return self.winner is not None


# ----- Per-board move tables -----


class _GameTables:
    def __init__(self, board: BoardSize) -> None:
        self.board = board
        n = board.n
        self.ncells = board.cell_count
        self.full = (1 << self.ncells) - 1
        # pair_line[i][j]: bits of every cell collinear with cells i and j
        self.pair_line = [[0] * self.ncells for _ in range(self.ncells)]
        pts = list(board.all_points())
        for i in range(self.ncells):
            for j in range(i + 1, self.ncells):
                bits = 0
                for q in line_through(board, pts[i], pts[j]):
                    bits |= 1 << board.index_of(q)
                self.pair_line[i][j] = bits
                self.pair_line[j][i] = bits
        # center-out candidate order (stable by index on ties)
        cx = cy = (n + 1) / 2
        self.center_order = sorted(
            range(self.ncells),
            key=lambda i: ((pts[i].x - cx) ** 2 + (pts[i].y - cy) ** 2, i),
        )
        self.perms = [
            [int(v) for v in row] for row in permutation_table(board)
        ]


_GAME_CACHE: dict[int, _GameTables] = {}
_GAME_LOCK = threading.Lock()


def _game_tables(board: BoardSize) -> _GameTables:
    with _GAME_LOCK:
        tab = _GAME_CACHE.get(board.n)
    if tab is None:
        tab = _GameTables(board)
        with _GAME_LOCK:
            _GAME_CACHE[board.n] = tab
    return tab


def _blocked_bits(tab: _GameTables, placed: list[int]) -> int:
    blocked = 0
    pair_line = tab.pair_line
    for a_pos, a in enumerate(placed):
        row = pair_line[a]
        for b in placed[a_pos + 1 :]:
            blocked |= row[b]
    return blocked


def legal_moves(state: GameState) -> list[GridPoint]:
    """Empty cells whose addition keeps general position, row-major."""
    tab = _game_tables(state.board)
    placed = state.placed.indices()
    free = tab.full & ~state.placed.bits & ~_blocked_bits(tab, placed)
    board = state.board
    return [board.point_at(i) for i in range(tab.ncells) if (free >> i) & 1]


# ----- Minimax with transposition on canonical placement -----


class _Budget(Exception):
    pass


class Solver:
    """Reusable game engine with persistent transposition tables.

    A single instance may serve many evaluate/best_move calls for the
    same board; node budgets are per call while the memo accumulates.
    """

    def __init__(self, board: BoardSize, transposition: bool = True) -> None:
        self.board = board
        self.tab = _game_tables(board)
        self.transposition = transposition
        self.win_memo: dict[tuple[int, ...], bool] = {}
        self.dist_memo: dict[tuple[int, ...], int] = {}
        self.nodes = 0
        self._limit: int | None = None

    def set_budget(self, node_budget: int | None) -> None:
        self._limit = None if node_budget is None else self.nodes + node_budget

    def _key(self, placed: list[int]) -> tuple[int, ...]:
        if not self.transposition:
            return tuple(placed)
        best = None
        for perm in self.tab.perms:
            cand = tuple(sorted(perm[i] for i in placed))
            if best is None or cand < best:
                best = cand
        return best

    def _tick(self) -> None:
        self.nodes += 1
        if self._limit is not None and self.nodes > self._limit:
            raise _Budget

    def _children(self, placed: list[int], bits: int, blocked: int):
        tab = self.tab
        free = tab.full & ~bits & ~blocked
        pair_line = tab.pair_line
        for c in tab.center_order:
            if not (free >> c) & 1:
                continue
            row = pair_line[c]
            child_blocked = blocked
            for q in placed:
                child_blocked |= row[q]
            yield c, child_blocked

    def win(self, placed: list[int], bits: int, blocked: int) -> bool:
        """True when the side to move wins with optimal play."""
        self._tick()
        key = self._key(placed)
        memo = self.win_memo
        if key in memo:
            return memo[key]
        result = False
        for c, child_blocked in self._children(placed, bits, blocked):
            child = sorted(placed + [c])
            if not self.win(child, bits | (1 << c), child_blocked):
                result = True
                break
        memo[key] = result
        return result

    def dist(self, placed: list[int], bits: int, blocked: int) -> int:
        """Plies until the game ends under optimal play.

        The winner minimizes, the loser maximizes; requires visiting
        every child, so it is kept separate from the cutoff win search.
        """
        self._tick()
        key = self._key(placed)
        if key in self.dist_memo:
            return self.dist_memo[key]
        child_vals: list[tuple[bool, int]] = []
        for c, child_blocked in self._children(placed, bits, blocked):
            child = sorted(placed + [c])
            cb = bits | (1 << c)
            child_vals.append(
                (self.win(child, cb, child_blocked), self.dist(child, cb, child_blocked))
            )
        if not child_vals:
            d = 0
        else:
            losses = [d for w, d in child_vals if not w]
            if losses:
                d = 1 + min(losses)
            else:
                d = 1 + max(d for _, d in child_vals)
        self.dist_memo[key] = d
        return d


def _state_parts(state: GameState) -> tuple[list[int], int, int]:
    tab = _game_tables(state.board)
    placed = list(state.placed.indices())
    return placed, state.placed.bits, _blocked_bits(tab, placed)


def evaluate(
    state: GameState,
    node_budget: int | None = None,
    *,
    transposition: bool = True,
    solver: Solver | None = None,
) -> GameVerdict:
    """Game-theoretic value of a state; unknown verdict on budget."""
    if solver is None:
        solver = Solver(state.board, transposition)
    elif solver.board != state.board:
        raise ValueError("solver was built for a different board")
    start = solver.nodes
    solver.set_budget(node_budget)
    placed, bits, blocked = _state_parts(state)
    try:
        mover_wins = solver.win(placed, bits, blocked)
        principal = None
        if mover_wins:
            # lowest row-major winning move
            tab = solver.tab
            free = tab.full & ~bits & ~blocked
            for c in range(tab.ncells):
                if not (free >> c) & 1:
                    continue
                child_blocked = blocked
                for q in placed:
                    child_blocked |= tab.pair_line[c][q]
                child = sorted(placed + [c])
                if not solver.win(child, bits | (1 << c), child_blocked):
                    principal = state.board.point_at(c)
                    break
        winner = state.to_move if mover_wins else state.to_move.other
        return GameVerdict(winner, principal, solver.nodes - start)
    except _Budget:
        return GameVerdict(None, None, solver.nodes - start)


def solve(n: int, node_budget: int | None = None) -> GameVerdict:
    """Winner of the placement game on the empty n x n board."""
    return evaluate(GameState.initial(BoardSize(n)), node_budget)


def best_move(state: GameState, budget: int | None = None) -> GridPoint | None:
    move, _ = best_move_info(state, budget)
    return move


def best_move_info(
    state: GameState,
    budget: int | None = None,
    solver: Solver | None = None,
) -> tuple[GridPoint | None, bool]:
    """(move, exact): the engine move and whether it is solver-backed.

    A win-preserving move (lowest row-major index) when one exists;
    otherwise the move that maximizes the opponent's shortest forced
    win.  When the budget runs out the move falls back to maximizing
    the opponent's immediate mobility and exact is False.
    """
    moves = legal_moves(state)
    if not moves:
        return None, True
    if solver is None:
        solver = Solver(state.board)
    elif solver.board != state.board:
        raise ValueError("solver was built for a different board")
    solver.set_budget(budget)
    board = state.board
    placed, bits, blocked = _state_parts(state)
    tab = solver.tab
    children = []
    for m in moves:
        c = board.index_of(m)
        child_blocked = blocked
        for q in placed:
            child_blocked |= tab.pair_line[c][q]
        children.append((m, sorted(placed + [c]), bits | (1 << c), child_blocked))
    try:
        child_wins = {
            m: solver.win(pl, b, bl) for m, pl, b, bl in children
        }
        winning = [m for m in moves if not child_wins[m]]
        if winning:
            return winning[0], True
        # lost position: stall by maximizing the opponent's shortest win
        best = None
        best_d = -1
        for m, pl, b, bl in children:
            d = solver.dist(pl, b, bl)
            if d > best_d:
                best, best_d = m, d
        return best, True
    except _Budget:
        # budget ran out: prefer a move that keeps the most replies open
        fallback = None
        fallback_mob = -1
        for m, pl, b, bl in children:
            mob = bin(tab.full & ~b & ~bl).count("1")
            if mob > fallback_mob:
                fallback, fallback_mob = m, mob
        return fallback, False


def mirror_move(board: BoardSize, last: GridPoint) -> GridPoint:
    """The point-reflected reply (n+1-x, n+1-y); defined for even n."""
    if board.n % 2:
        raise ValueError("mirror strategy is defined for even board sides")
    if not board.contains(last):
        raise ValueError(f"{last} is outside the board")
    return GridPoint(board.n + 1 - last.x, board.n + 1 - last.y)
