"""Command line interface.

Every subcommand supports --json for machine-readable output.  Exit
codes: 0 on success, 1 when a verification or computation fails, 2 on
usage errors (argparse's default).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import bound_report, janson_estimate
from .cache import CachedResult, ResultsCache
from .domination import (
    MODE_GENERAL,
    MODE_INDEPENDENT,
    Solution,
    VerificationError,
    construct_central_columns,
)
from .game import (
    GameState,
    IllegalMoveError,
    Player,
    Solver,
    best_move_info,
    legal_moves,
    solve,
)
from .geometry import BoardSize, GridPoint
from .render import (
    RenderSpec,
    render_ascii,
    render_solution_ascii,
    render_solution_svg,
    save_board_figure,
    save_bounds_figure,
)
from .search import (
    min_dominating,
    min_dominating_exterior,
    symmetric_augment,
)
from .torus import (
    TorusConstructionError,
    TorusSolution,
    construct_2p,
    construct_3q,
    construct_apex,
    construct_even,
    monte_carlo_domination,
    torus_min_dominating,
)

MODES = (MODE_GENERAL, MODE_INDEPENDENT)


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _outcome_payload(outcome, cached: bool) -> dict:
    return {
        "n": outcome.board.n,
        "mode": outcome.mode,
        "margin": outcome.margin,
        "minimum": outcome.minimum_size,
        "distinct": outcome.distinct_count,
        "classes": outcome.symmetry_class_count,
        "exhausted": outcome.exhausted,
        "nodes": outcome.nodes_explored,
        "cached": cached,
        "witnesses": [w.to_json_dict() for w in outcome.witnesses],
    }


def _cached_payload(rec: CachedResult) -> dict:
    return {
        "n": rec.n,
        "mode": rec.mode,
        "margin": rec.margin,
        "minimum": rec.minimum,
        "distinct": rec.distinct,
        "classes": rec.classes,
        "exhausted": rec.exhausted,
        "nodes": rec.nodes,
        "cached": True,
        "witnesses": [w.to_json_dict() for w in rec.witnesses],
    }


def _search_text(payload: dict) -> str:
    lines = [
        f"n={payload['n']} mode={payload['mode']} margin={payload['margin']}",
        f"minimum {payload['minimum']}  distinct {payload['distinct']}  "
        f"classes {payload['classes']}",
        f"exhausted {payload['exhausted']}  nodes {payload['nodes']}"
        + ("  (cached)" if payload["cached"] else ""),
    ]
    return "\n".join(lines)


def cmd_search(args) -> int:
    if args.mode not in MODES:
        raise VerificationError(f"unknown mode {args.mode!r}")
    cache = ResultsCache(args.cache_dir)
    margin = args.exterior
    rec = None if args.recompute else cache.get(args.n, args.mode, margin)
    usable = rec is not None and rec.exhausted and (rec.enumerated or not args.enumerate)
    if usable:
        payload = _cached_payload(rec)
    else:
        board = BoardSize(args.n)
        if margin > 0:
            outcome = min_dominating_exterior(
                board, margin, args.mode,
                enumerate_all=args.enumerate, node_budget=args.budget,
            )
        else:
            outcome = min_dominating(
                board, args.mode,
                enumerate_all=args.enumerate, node_budget=args.budget,
            )
        cache.put(CachedResult.from_outcome(outcome, enumerated=args.enumerate))
        payload = _outcome_payload(outcome, cached=False)
    if args.json:
        _print_json(payload)
    else:
        print(_search_text(payload))
        if payload["witnesses"]:
            first = Solution.from_json_dict(payload["witnesses"][0])
            print(render_solution_ascii(first))
    return 0


def cmd_verify(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    data = json.loads(text)
    kind = data.get("kind", "grid")
    # loaders re-run the full domination / collinearity checks
    if kind == "torus":
        sol = TorusSolution.from_json_dict(data)
        summary = {
            "kind": "torus", "n": sol.n, "size": sol.size, "valid": True,
        }
    else:
        gsol = Solution.from_json_dict(data)
        summary = {
            "kind": "grid", "n": gsol.board.n, "mode": gsol.mode,
            "size": gsol.size, "margin": gsol.margin, "valid": True,
        }
    if args.json:
        _print_json(summary)
    else:
        bits = " ".join(f"{k}={v}" for k, v in summary.items() if k != "valid")
        print(f"valid: {bits}")
    return 0


def _construct(args):
    n = args.n
    if args.grid:
        return construct_central_columns(BoardSize(n))
    if args.augment:
        seeds = []
        cache = ResultsCache(args.cache_dir)
        for m in range(max(2, n - 4), n):
            rec = cache.get(m, MODE_INDEPENDENT, 0)
            if rec and rec.witnesses:
                seeds.extend(rec.witnesses)
        return symmetric_augment(BoardSize(n), budget=args.budget, seeds=seeds)
    if args.torus_even:
        return construct_even(n)
    if args.torus_3q:
        return construct_3q(n)
    if args.torus_2p:
        return construct_2p(n, args.p)
    return construct_apex(n, args.p)


def cmd_construct(args) -> int:
    sol = _construct(args)
    payload = sol.to_json_dict()
    if args.out:
        Path(args.out).write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )
        print(f"wrote {args.out}")
        return 0
    if args.json:
        _print_json(payload)
    elif isinstance(sol, Solution):
        print(f"size {sol.size} on the {sol.board.n} x {sol.board.n} board")
        print(render_solution_ascii(sol))
    else:
        pts = " ".join(f"({p.x},{p.y})" for p in sol.points)
        print(f"size {sol.size} on the {sol.n} x {sol.n} torus: {pts}")
    return 0


def cmd_bounds(args) -> int:
    if args.janson:
        est = janson_estimate(args.n, args.m)
        payload = {
            "n": est.n,
            "m": est.m,
            "mu": float(est.mu),
            "delta": float(est.delta),
            "failureBound": est.failure_bound,
            "certifiesExistence": est.certifies_existence(),
        }
        if args.json:
            _print_json(payload)
        else:
            print(
                f"torus n={est.n}, m={est.m}: failure bound "
                f"{est.failure_bound:.6g}"
                + (" (certifies existence)" if est.certifies_existence() else "")
            )
        return 0
    report = bound_report(args.n)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(
            f"n={report.n}: counting lower {report.trivial_lower}, "
            f"totient lower {report.phi_lower}, "
            f"construction upper {report.construction_upper}"
        )
    return 0


def cmd_torus_mc(args) -> int:
    freq = monte_carlo_domination(args.n, args.m, args.trials, seed=args.seed)
    payload = {
        "n": args.n, "m": args.m, "trials": args.trials,
        "seed": args.seed, "dominationFrequency": freq,
    }
    if args.json:
        _print_json(payload)
    else:
        print(
            f"torus n={args.n}, m={args.m}: {freq:.3f} of {args.trials} "
            f"random sets dominate"
        )
    return 0


def cmd_torus_search(args) -> int:
    outcome = torus_min_dominating(
        args.n, budget=args.budget, enumerate_all=args.enumerate
    )
    payload = {
        "n": outcome.n,
        "minimum": outcome.minimum_size,
        "distinct": outcome.distinct_count,
        "classes": outcome.symmetry_class_count,
        "exhausted": outcome.exhausted,
        "nodes": outcome.nodes_explored,
        "witnesses": [w.to_json_dict() for w in outcome.witnesses],
    }
    if args.json:
        _print_json(payload)
    else:
        print(
            f"torus n={args.n}: minimum {outcome.minimum_size}, "
            f"distinct {outcome.distinct_count}, "
            f"classes {outcome.symmetry_class_count}, "
            f"exhausted {outcome.exhausted}, nodes {outcome.nodes_explored}"
        )
    return 0


def cmd_game_solve(args) -> int:
    verdict = solve(args.n, node_budget=args.budget)
    if verdict.known:
        winner = "first" if verdict.winner is Player.FIRST else "second"
    else:
        winner = "unknown"
    payload = {
        "n": args.n,
        "winner": winner,
        "principalMove": (
            [verdict.principal_move.x, verdict.principal_move.y]
            if verdict.principal_move else None
        ),
        "nodes": verdict.nodes,
    }
    if args.json:
        _print_json(payload)
    elif verdict.known:
        move = payload["principalMove"]
        extra = f", best opening {tuple(move)}" if move else ""
        print(f"n={args.n}: {winner} player wins{extra} ({verdict.nodes} nodes)")
    else:
        print(f"n={args.n}: unknown within budget ({verdict.nodes} nodes)")
    return 0


def _board_text(state: GameState) -> str:
    return render_ascii(state.board, state.placed.points())


def cmd_game_play(args) -> int:
    board = BoardSize(args.n)
    state = GameState.initial(board)
    engine = None
    if args.engine != "none":
        engine = Player.FIRST if args.engine == "first" else Player.SECOND
    solver = Solver(board)
    print(f"no-three-in-line game on {args.n} x {args.n}; moves as 'x y'")
    while True:
        moves = legal_moves(state)
        if not moves:
            loser = state.to_move
            winner = loser.other
            name = "First" if winner is Player.FIRST else "Second"
            print(_board_text(state))
            print(f"{name} player wins after {len(state.placed)} moves")
            return 0
        if engine is not None and state.to_move is engine:
            move, exact = best_move_info(state, budget=args.budget, solver=solver)
            state = state.play(move)
            tag = "" if exact else " (heuristic)"
            print(f"engine plays {move.x} {move.y}{tag}")
            continue
        print(_board_text(state))
        side = "First" if state.to_move is Player.FIRST else "Second"
        sys.stdout.write(f"{side} to move> ")
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            print("\ninput closed, aborting game")
            return 1
        parts = line.split()
        if len(parts) != 2:
            print("enter two integers, e.g. '2 3'")
            continue
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            print("enter two integers, e.g. '2 3'")
            continue
        try:
            state = state.play(GridPoint(x, y))
        except IllegalMoveError as exc:
            print(f"illegal move ({exc.reason}): {exc}")


def _load_export_solution(args) -> Solution:
    if args.input:
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        return Solution.from_json_dict(data)
    cache = ResultsCache(args.cache_dir)
    rec = cache.get(args.n, args.mode, 0)
    if rec is None or not rec.witnesses:
        raise VerificationError(
            f"no cached solution for n={args.n} mode={args.mode}; "
            f"run: gridlock search --n {args.n} --mode {args.mode}"
        )
    return rec.witnesses[0]


def cmd_export(args) -> int:
    sol = _load_export_solution(args)
    if args.svg:
        spec = RenderSpec(
            target="svg", cell_px=args.cell_px,
            show_mask=args.mask, show_lines=args.lines,
        )
        text = render_solution_svg(sol, spec)
    else:
        text = render_solution_ascii(sol)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def cmd_report(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cache = ResultsCache(args.cache_dir)
    rows = []
    figures = []
    for n in range(2, args.max_n + 1):
        rep = bound_report(n)
        row = rep.to_json_dict()
        row.pop("notes", None)
        for mode, col in ((MODE_GENERAL, "exactGeneral"), (MODE_INDEPENDENT, "exactIndependent")):
            rec = cache.get(n, mode, 0)
            row[col] = rec.minimum if rec and rec.exhausted else None
        row["exact"] = row["exactGeneral"]
        rows.append(row)
    csv_path = out / "bounds.csv"
    cols = [
        "n", "trivialLower", "phiLower", "constructionUpper",
        "exactGeneral", "exactIndependent",
    ]
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=cols, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
    fig_path = out / "bounds.png"
    save_bounds_figure(rows, str(fig_path))
    figures.append(fig_path)
    for n in range(2, args.max_n + 1):
        rec = cache.get(n, MODE_INDEPENDENT, 0)
        if rec and rec.witnesses:
            path = out / f"board_n{n}_independent.png"
            save_board_figure(rec.witnesses[0], str(path))
            figures.append(path)
    print(f"wrote {csv_path}")
    for fig in figures:
        print(f"wrote {fig}")
    return 0


def cmd_serve(args) -> int:
    from .service import run

    run(host=args.host, port=args.port, cache_dir=args.cache_dir)
    return 0


def _add_cache_dir(p) -> None:
    p.add_argument(
        "--cache-dir", default=None,
        help="results cache directory (default: GRIDLOCK_CACHE_DIR or ~/.cache/gridlock)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridlock",
        description="dominating sets spanned by lines on grids and tori",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exact minimum dominating set search")
    p.add_argument("--n", type=int, required=True, help="board side length")
    p.add_argument("--mode", default=MODE_GENERAL, choices=MODES)
    p.add_argument(
        "--exterior", type=int, default=0, metavar="E",
        help="allow points up to E cells outside the board",
    )
    p.add_argument(
        "--enumerate", action="store_true",
        help="count every minimum solution instead of stopping at the first",
    )
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.add_argument("--recompute", action="store_true", help="ignore cached results")
    p.add_argument("--json", action="store_true")
    _add_cache_dir(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="re-check a solution JSON file")
    p.add_argument("file", help="path to a solution JSON (grid or torus kind)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="explicit constructions")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--grid", action="store_true", help="two central columns")
    kind.add_argument(
        "--augment", action="store_true",
        help="heuristic independent set from symmetric orbits",
    )
    kind.add_argument("--torus-even", action="store_true", help="4 points, even torus")
    kind.add_argument("--torus-3q", action="store_true", help="multiples of 3")
    kind.add_argument("--torus-2p", action="store_true", help="2p columns construction")
    kind.add_argument("--torus-apex", action="store_true", help="blown-up apexed set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=None, help="prime factor override")
    p.add_argument("--budget", type=int, default=None, help="augment node budget")
    p.add_argument("--out", default=None, help="write JSON to this file")
    p.add_argument("--json", action="store_true")
    _add_cache_dir(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="analytic bounds for one board side")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--janson", action="store_true",
        help="second-moment domination bound for the prime torus",
    )
    p.add_argument("--m", type=int, default=None, help="random set size (with --janson)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("torus", help="torus operations")
    tsub = p.add_subparsers(dest="torus_command", required=True)
    t = tsub.add_parser("mc", help="random-set domination frequency")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--m", type=int, required=True, help="points per random set")
    t.add_argument("--trials", type=int, default=200)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_torus_mc)
    t = tsub.add_parser("search", help="exact torus minimum search")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--budget", type=int, default=None)
    t.add_argument("--enumerate", action="store_true")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_torus_search)

    p = sub.add_parser("game", help="no-three-in-line placement game")
    gsub = p.add_subparsers(dest="game_command", required=True)
    g = gsub.add_parser("solve", help="who wins from the empty board")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--budget", type=int, default=None)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_game_solve)
    g = gsub.add_parser("play", help="interactive game against the engine")
    g.add_argument("--n", type=int, required=True)
    g.add_argument(
        "--engine", default="second", choices=("first", "second", "none"),
    )
    g.add_argument("--budget", type=int, default=300_000)
    g.set_defaults(func=cmd_game_play)

    p = sub.add_parser("export", help="render a solution to SVG or ASCII")
    p.add_argument("--svg", action="store_true", help="emit SVG instead of ASCII")
    p.add_argument("--input", default=None, help="solution JSON file")
    p.add_argument("--n", type=int, default=None, help="board side (cached solution)")
    p.add_argument("--mode", default=MODE_INDEPENDENT, choices=MODES)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--mask", action="store_true", help="shade dominated cells")
    p.add_argument("--lines", action="store_true", help="draw the spanned lines")
    p.add_argument("--cell-px", type=int, default=24)
    _add_cache_dir(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser(
        "report", help="bounds table as CSV plus rendered figures"
    )
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--max-n", type=int, default=12)
    _add_cache_dir(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    _add_cache_dir(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is cmd_export and not args.input and args.n is None:
        parser.error("export needs --input FILE or --n N")
    if args.func is cmd_bounds and args.janson and args.m is None:
        parser.error("bounds --janson needs --m M")
    try:
        return args.func(args)
    except (VerificationError, TorusConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 1


if __name__ == "__main__":
    sys.exit(main())
