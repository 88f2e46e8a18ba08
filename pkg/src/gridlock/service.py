"""HTTP API for solution browsing and interactive play.

Endpoints are JSON over HTTP.  Game sessions live in memory behind a
per-game lock; every response that carries a state also carries the
legal moves so clients never have to re-derive rules locally.  The
bundled web client is served from the package's static directory when
present.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .bounds import bound_report
from .cache import ResultsCache
from .domination import dominated_cells
from .game import (
    GameState,
    GameVerdict,
    IllegalMoveError,
    Player,
    Solver,
    best_move_info,
    evaluate,
    legal_moves,
)
from .geometry import BoardSize, GridPoint

# masks are cheap; game sessions keep per-board tables, so cap them lower
MAX_MASK_BOARD = 32
MAX_GAME_BOARD = 16
# solver effort per request; n <= 5 verdicts are exact well within this
ENGINE_BUDGET = 300_000
VERDICT_BUDGET = 150_000


@dataclass
class GameSession:
    state: GameState
    engine: str  # "first", "second", or "none"
    solver: Solver
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_engine_move: GridPoint | None = None
    engine_exact: bool = True


class SessionStore:
    """In-memory game sessions; ids are opaque tokens."""

    def __init__(self) -> None:
        self._games: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def create(self, state: GameState, engine: str) -> str:
        game_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._games[game_id] = GameSession(state, engine, Solver(state.board))
        return game_id

    def get(self, game_id: str) -> GameSession | None:
        with self._lock:
            return self._games.get(game_id)


def _error(status: int, detail) -> JSONResponse:
    return JSONResponse({"detail": detail}, status_code=status)


def _parse_points(board: BoardSize, raw: str) -> list[GridPoint]:
    pts = []
    if not raw:
        return pts
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad point {chunk!r}, expected 'x,y'")
        p = GridPoint(int(parts[0]), int(parts[1]))
        if not board.contains(p):
            raise ValueError(f"point ({p.x},{p.y}) is off the board")
        pts.append(p)
    return pts


def _verdict_json(verdict: GameVerdict) -> dict:
    return {
        "winner": verdict.winner.value if verdict.winner else None,
        "principalMove": (
            [verdict.principal_move.x, verdict.principal_move.y]
            if verdict.principal_move
            else None
        ),
        "nodes": verdict.nodes,
    }


def _game_payload(game_id: str, session: GameSession) -> dict:
    state = session.state
    moves = legal_moves(state)
    over = not moves
    verdict = None
    if not over:
        v = evaluate(state, VERDICT_BUDGET, solver=session.solver)
        if v.known:
            verdict = {"winner": v.winner.value, "nodes": v.nodes}
    return {
        "id": game_id,
        "state": state.to_json_dict(),
        "legalMoves": [[p.x, p.y] for p in moves],
        "engineMove": (
            [session.last_engine_move.x, session.last_engine_move.y]
            if session.last_engine_move
            else None
        ),
        "engineExact": session.engine_exact,
        "over": over,
        # the side to move cannot place a point, so the other side moved last
        "winner": state.to_move.other.value if over else None,
        "verdictIfKnown": verdict,
    }


def _engine_side(session: GameSession) -> Player | None:
    if session.engine == "first":
        return Player.FIRST
    if session.engine == "second":
        return Player.SECOND
    return None


def _maybe_engine_reply(session: GameSession) -> None:
    side = _engine_side(session)
    if side is None or session.state.to_move is not side:
        return
    move, exact = best_move_info(session.state, ENGINE_BUDGET, session.solver)
    if move is None:
        return
    session.state = session.state.play(move)
    session.last_engine_move = move
    session.engine_exact = exact


def create_app(cache_dir: Path | str | None = None) -> FastAPI:
    app = FastAPI(title="gridlock", docs_url=None, redoc_url=None)
    cache = ResultsCache(cache_dir)
    store = SessionStore()

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request body")

    @app.get("/api/solutions")
    def get_solutions(n: int, mode: str = "independent"):
        if mode not in ("general", "independent"):
            return _error(400, f"unknown mode {mode!r}")
        if not 1 <= n <= 10_000:
            return _error(400, "n out of range")
        rec = cache.get(n, mode)
        if rec is None:
            return _error(
                404,
                f"no cached solutions for n={n} mode={mode}; "
                f"run: gridlock search --n {n} --mode {mode} --enumerate",
            )
        return {
            "n": rec.n,
            "mode": rec.mode,
            "minimum": rec.minimum,
            "distinct": rec.distinct,
            "classes": rec.classes,
            "exhausted": rec.exhausted,
            "witnesses": [w.to_json_dict() for w in rec.witnesses],
        }

    @app.get("/api/bounds")
    def get_bounds(n: int):
        if not 1 <= n <= 10_000_000:
            return _error(400, "n out of range")
        return bound_report(n).to_json_dict()

    @app.get("/api/dominated")
    def get_dominated(n: int, points: str = ""):
        if not 1 <= n <= MAX_MASK_BOARD:
            return _error(400, f"n must be in [1, {MAX_MASK_BOARD}]")
        board = BoardSize(n)
        try:
            pts = _parse_points(board, points)
        except ValueError as exc:
            return _error(400, str(exc))
        mask = dominated_cells(board, pts)
        return {
            "n": n,
            "points": [[p.x, p.y] for p in pts],
            "dominated": sorted([p.x, p.y] for p in mask),
            "count": len(mask),
            "isDominating": len(mask) == board.cell_count,
        }

    @app.post("/api/game")
    async def create_game(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        if not isinstance(body, dict) or "n" not in body:
            return _error(400, "body must be an object with field 'n'")
        try:
            n = int(body["n"])
        except (TypeError, ValueError):
            return _error(400, "'n' must be an integer")
        if not 1 <= n <= MAX_GAME_BOARD:
            return _error(400, f"n must be in [1, {MAX_GAME_BOARD}]")
        engine = body.get("engine", "second")
        if engine not in ("first", "second", "none"):
            return _error(400, "engine must be 'first', 'second', or 'none'")
        state = GameState.initial(BoardSize(n))
        game_id = store.create(state, engine)
        session = store.get(game_id)
        with session.lock:
            _maybe_engine_reply(session)
            return _game_payload(game_id, session)

    @app.get("/api/game/{game_id}")
    def get_game(game_id: str):
        session = store.get(game_id)
        if session is None:
            return _error(404, f"no game with id {game_id!r}")
        with session.lock:
            return _game_payload(game_id, session)

    @app.post("/api/game/{game_id}/move")
    async def post_move(game_id: str, request: Request):
        session = store.get(game_id)
        if session is None:
            return _error(404, f"no game with id {game_id!r}")
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed JSON body")
        if not isinstance(body, dict):
            return _error(400, "body must be an object with fields 'x' and 'y'")
        try:
            x, y = int(body["x"]), int(body["y"])
        except (KeyError, TypeError, ValueError):
            return _error(400, "fields 'x' and 'y' must be integers")
        with session.lock:
            engine_side = _engine_side(session)
            if engine_side is not None and session.state.to_move is engine_side:
                return _error(409, {"reason": "engine_turn"})
            try:
                session.state = session.state.play(GridPoint(x, y))
            except IllegalMoveError as exc:
                return _error(409, {"reason": exc.reason, "message": str(exc)})
            session.last_engine_move = None
            _maybe_engine_reply(session)
            return _game_payload(game_id, session)

    static_dir = _static_dir()
    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def _static_dir() -> str | None:
    try:
        ref = resources.files("gridlock").joinpath("static")
        path = Path(str(ref))
    except ModuleNotFoundError:
        return None
    if path.is_dir() and (path / "index.html").exists():
        return str(path)
    return None


def run(host: str = "127.0.0.1", port: int = 8000, cache_dir=None) -> None:
    import uvicorn

    uvicorn.run(create_app(cache_dir), host=host, port=port, log_level="warning")
