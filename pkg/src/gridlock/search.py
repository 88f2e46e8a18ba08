"""Exact minimum-dominating-set search on square boards.

Iterative deepening over the subset size k: each phase enumerates
k-subsets depth-first in row-major index order through the compiled
kernel, so the first phase that finds a solution proves minimality.
With `enumerate_all` the final phase keeps every surviving solution and
exact distinct/class counts are recovered by canonical dedup plus orbit
expansion (shallow-depth symmetry pruning never discards the
lexicographic leader of an orbit).

The exterior variant admits candidate points in a margin around the
board while still requiring domination of the board proper; it reuses
the same kernel over the enlarged cell universe.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .bounds import phi_lower_bound, trivial_lower_bound
from .domination import (
    MODE_GENERAL,
    MODE_INDEPENDENT,
    Solution,
    construct_central_columns,
    is_general_position,
)
from .geometry import (
    ALL_TRANSFORMS,
    BoardSize,
    GridPoint,
    PointSet,
    SymmetryTransform,
    line_through,
    permutation_table,
    primitive_direction,
)


@dataclass(frozen=True)
class SearchConfig:
    mode: str = MODE_GENERAL
    enumerate_all: bool = False
    node_budget: int | None = None
    thread_count: int = 1
    sym_depth: int = 4


@dataclass(frozen=True)
class PhaseStats:
    size: int
    nodes: int
    found: int
    complete: bool


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a minimum-search invocation.

    `exhausted` is True exactly when minimality was proved.  With
    enumeration, `distinct_count` and `symmetry_class_count` cover every
    minimum solution; otherwise they describe the orbit of the single
    reported witness.
    """

    board: BoardSize
    mode: str
    margin: int
    minimum_size: int
    witnesses: tuple[Solution, ...]
    distinct_count: int
    symmetry_class_count: int
    nodes_explored: int
    exhausted: bool
    phases: tuple[PhaseStats, ...] = ()


# ----- Cell tables fed to the kernel -----


@dataclass
class CellTables:
    board: BoardSize          # the board that must be dominated
    carrier: BoardSize        # board enlarged by the margin
    margin: int
    ncells: int
    words: int
    pair_cov: np.ndarray      # uint64[C, C, W], line through the pair
    forb: np.ndarray          # uint64[C, C, W], line minus its endpoints
    own: np.ndarray           # uint64[C, W]
    target: np.ndarray        # uint64[W], cells of the true board
    perms: np.ndarray         # int64[8, C] dihedral cell permutations
    cap_per_pair: int

    def index_to_point(self, index: int) -> GridPoint:
        p = self.carrier.point_at(index)
        return GridPoint(p.x - self.margin, p.y - self.margin)

    def point_to_index(self, p: GridPoint) -> int:
        return self.carrier.index_of(GridPoint(p.x + self.margin, p.y + self.margin))


_TABLE_CACHE: dict[tuple[int, int], CellTables] = {}
_TABLE_LOCK = threading.Lock()


def _enumerate_lines(carrier: BoardSize) -> list[list[int]]:
    """Every maximal board line with >= 2 cells, as cell-index lists."""
    n = carrier.n
    lines = []
    directions = []
    for dx in range(0, n):
        for dy in range(-(n - 1), n):
            if dx == 0 and dy <= 0:
                continue
            from math import gcd

            if gcd(dx, abs(dy)) != 1:
                continue
            directions.append((dx, dy))
    for dx, dy in directions:
        for start in carrier.all_points():
            prev = GridPoint(start.x - dx, start.y - dy)
            if carrier.contains(prev):
                continue
            cells = []
            x, y = start.x, start.y
            while 1 <= x <= n and 1 <= y <= n:
                cells.append((y - 1) * n + (x - 1))
                x += dx
                y += dy
            if len(cells) >= 2:
                lines.append(cells)
    return lines


def build_tables(board: BoardSize, margin: int = 0) -> CellTables:
    key = (board.n, margin)
    with _TABLE_LOCK:
        cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached

    carrier = BoardSize(board.n + 2 * margin)
    ncells = carrier.cell_count
    words = (ncells + 63) // 64
    pair_cov = np.zeros((ncells, ncells, words), dtype=np.uint64)
    forb = np.zeros((ncells, ncells, words), dtype=np.uint64)
    own = np.zeros((ncells, words), dtype=np.uint64)
    target = np.zeros(words, dtype=np.uint64)

    for index in range(ncells):
        own[index, index >> 6] |= np.uint64(1) << np.uint64(index & 63)
        p = carrier.point_at(index)
        if (
            margin < p.x <= board.n + margin
            and margin < p.y <= board.n + margin
        ):
            target[index >> 6] |= np.uint64(1) << np.uint64(index & 63)

    max_target_on_line = 0
    for cells in _enumerate_lines(carrier):
        mask = np.zeros(words, dtype=np.uint64)
        on_target = 0
        for c in cells:
            mask[c >> 6] |= np.uint64(1) << np.uint64(c & 63)
            if target[c >> 6] >> np.uint64(c & 63) & np.uint64(1):
                on_target += 1
        max_target_on_line = max(max_target_on_line, on_target)
        for i, a in enumerate(cells):
            abit = np.uint64(1) << np.uint64(a & 63)
            for b in cells[i + 1 :]:
                pair_cov[a, b] = mask
                pair_cov[b, a] = mask
                line_forb = mask.copy()
                line_forb[a >> 6] &= ~abit
                line_forb[b >> 6] &= ~(np.uint64(1) << np.uint64(b & 63))
                forb[a, b] = line_forb
                forb[b, a] = line_forb

    if margin == 0:
        cap = max(board.n - 2, 0)
    else:
        cap = max_target_on_line
    tables = CellTables(
        board=board,
        carrier=carrier,
        margin=margin,
        ncells=ncells,
        words=words,
        pair_cov=pair_cov,
        forb=forb,
        own=own,
        target=target,
        perms=permutation_table(carrier),
        cap_per_pair=cap,
    )
    with _TABLE_LOCK:
        _TABLE_CACHE[key] = tables
    return tables


# ----- Fallback witnesses for budget exhaustion -----


def greedy_maximal_independent(board: BoardSize) -> Solution:
    """Row-major greedy no-three-in-line set, grown until maximal.

    A maximal such set dominates the board: any cell left out would be
    collinear with two members (that is why it could not be added).
    """
    points: list[GridPoint] = []
    dirs_seen: list[set] = []
    for candidate in board.all_points():
        ok = True
        for i, p in enumerate(points):
            d = primitive_direction(p, candidate)
            if d in dirs_seen[i]:
                ok = False
                break
        if ok:
            for i, p in enumerate(points):
                dirs_seen[i].add(primitive_direction(p, candidate))
            points.append(candidate)
            dirs_seen.append(set())
    return Solution.verified(
        board, MODE_INDEPENDENT, points, provenance="greedy"
    )


def _fallback_solution(board: BoardSize, mode: str) -> Solution:
    if mode == MODE_INDEPENDENT:
        return greedy_maximal_independent(board)
    if board.n >= 3:
        return construct_central_columns(board)
    return Solution.verified(
        board, MODE_GENERAL, tuple(board.all_points()), provenance="construction"
    )


# ----- Counting helpers -----


def _canonical_key(
    indices: Sequence[int], perms: np.ndarray
) -> tuple[int, ...]:
    best = None
    for g in range(perms.shape[0]):
        image = tuple(sorted(int(perms[g, i]) for i in indices))
        if best is None or image < best:
            best = image
    return best


def _orbit_len(indices: Sequence[int], perms: np.ndarray) -> int:
    images = {
        tuple(sorted(int(perms[g, i]) for i in indices))
        for g in range(perms.shape[0])
    }
    return len(images)


# ----- Main driver -----


def _capacity_schedule(k: int, cap_per_pair: int) -> np.ndarray:
    cap_rem = np.zeros(k + 1, dtype=np.int64)
    for c in range(k + 1):
        total = 0
        for j in range(1, k - c + 1):
            total += (c + j - 1) * cap_per_pair + 1
        cap_rem[c] = total
    return cap_rem


def _run_phase(
    tables: CellTables,
    k: int,
    mode: str,
    enumerate_all: bool,
    sym_depth: int,
    node_budget: int,
    thread_count: int,
    max_out: int = 4096,
) -> tuple[np.ndarray, int, int, bool]:
    """Returns (rows, found_count, nodes, aborted) for one phase."""
    indep = mode == MODE_INDEPENDENT
    cap_rem = _capacity_schedule(k, tables.cap_per_pair)
    early_exit = not enumerate_all

    def call(root_lo: int, root_hi: int, budget: int, cap: int):
        out = np.empty((cap, k), dtype=np.int32)
        found, nodes, aborted = _kernels.search_phase(
            np.int64(k),
            np.int64(tables.ncells),
            np.int64(tables.words),
            tables.pair_cov,
            tables.forb,
            tables.own,
            tables.target,
            tables.perms,
            indep,
            np.int64(min(sym_depth, k)),
            cap_rem,
            np.int64(root_lo),
            np.int64(root_hi),
            early_exit,
            np.int64(budget),
            out,
        )
        return out, int(found), int(nodes), bool(aborted)

    if thread_count <= 1 or early_exit:
        out, found, nodes, aborted = call(0, tables.ncells, node_budget, max_out)
        while found > out.shape[0] and not aborted:
            out, found, nodes, aborted = call(
                0, tables.ncells, node_budget, found + 16
            )
        return out[: min(found, out.shape[0])], found, nodes, aborted

    # parallel phase: one kernel call per canonical root, merged in root
    # order so results are identical to the single-thread run
    perms = tables.perms
    roots = [
        r
        for r in range(tables.ncells)
        if all(int(perms[g, r]) >= r for g in range(perms.shape[0]))
    ]
    per_root_budget = -1 if node_budget < 0 else node_budget // max(len(roots), 1)
    results = {}
    with ThreadPoolExecutor(max_workers=thread_count) as pool:
        futures = {
            pool.submit(call, r, r + 1, per_root_budget, max_out): r for r in roots
        }
        for future, r in futures.items():
            results[r] = future.result()
    rows_list, total_found, total_nodes, any_abort = [], 0, 0, False
    for r in roots:
        out, found, nodes, aborted = results[r]
        while found > out.shape[0] and not aborted:
            out, found, nodes, aborted = call(r, r + 1, per_root_budget, found + 16)
        rows_list.append(out[: min(found, out.shape[0])])
        total_found += found
        total_nodes += nodes
        any_abort |= aborted
    rows = (
        np.concatenate(rows_list, axis=0)
        if rows_list
        else np.empty((0, k), dtype=np.int32)
    )
    return rows, total_found, total_nodes, any_abort


def _initial_size(board: BoardSize, margin: int) -> int:
    if margin == 0:
        return max(trivial_lower_bound(board.n), phi_lower_bound(board.n), 1)
    # exterior points may pair-cover up to n board cells and own-cover
    # at most one each
    n = board.n
    s = 1
    while s * (s - 1) // 2 * n + s < n * n:
        s += 1
    return s


def _search(
    board: BoardSize,
    mode: str,
    margin: int,
    config: SearchConfig,
    size_range: tuple[int, int] | None = None,
) -> SearchOutcome:
    if mode not in (MODE_GENERAL, MODE_INDEPENDENT):
        raise ValueError(f"unknown mode {mode!r}")
    if margin < 0:
        raise ValueError("margin must be >= 0")
    tables = build_tables(board, margin)
    budget_left = -1 if config.node_budget is None else int(config.node_budget)
    phases: list[PhaseStats] = []
    total_nodes = 0

    if size_range is None:
        k_lo = _initial_size(board, margin)
        k_hi = 2 * board.n
    else:
        k_lo, k_hi = size_range
        if k_lo < 1 or k_hi < k_lo:
            raise ValueError(f"bad size range {size_range}")
    for k in range(k_lo, k_hi + 1):
        rows, found, nodes, aborted = _run_phase(
            tables,
            k,
            mode,
            config.enumerate_all,
            config.sym_depth,
            budget_left,
            config.thread_count,
        )
        total_nodes += nodes
        phases.append(PhaseStats(k, nodes, found, not aborted))
        if budget_left >= 0:
            budget_left = max(budget_left - nodes, 0)
        if aborted:
            fallback = _fallback_solution(board, mode)
            return SearchOutcome(
                board=board,
                mode=mode,
                margin=margin,
                minimum_size=fallback.size,
                witnesses=(fallback,),
                distinct_count=1,
                symmetry_class_count=1,
                nodes_explored=total_nodes,
                exhausted=False,
                phases=tuple(phases),
            )
        if found:
            return _finish(tables, mode, margin, k, rows, total_nodes, phases, config)
    if size_range is not None:
        # caller restricted the size window; report a clean miss
        fallback = _fallback_solution(board, mode)
        return SearchOutcome(
            board=board,
            mode=mode,
            margin=margin,
            minimum_size=fallback.size,
            witnesses=(fallback,),
            distinct_count=1,
            symmetry_class_count=1,
            nodes_explored=total_nodes,
            exhausted=False,
            phases=tuple(phases),
        )
    raise AssertionError(
        f"no dominating set up to size {k_hi} on board {board.n}; "
        "this contradicts the central-columns construction"
    )


def _finish(
    tables: CellTables,
    mode: str,
    margin: int,
    k: int,
    rows: np.ndarray,
    total_nodes: int,
    phases: list[PhaseStats],
    config: SearchConfig,
) -> SearchOutcome:
    perms = tables.perms
    classes: dict[tuple[int, ...], int] = {}
    for row in rows:
        indices = [int(v) for v in row]
        key = _canonical_key(indices, perms)
        if key not in classes:
            classes[key] = _orbit_len(indices, perms)
    ordered = sorted(classes)
    witnesses = tuple(
        Solution.verified(
            tables.board,
            mode,
            [tables.index_to_point(i) for i in key],
            margin=margin,
            provenance="search",
        )
        for key in ordered
    )
    distinct = sum(classes[key] for key in ordered)
    return SearchOutcome(
        board=tables.board,
        mode=mode,
        margin=margin,
        minimum_size=k,
        witnesses=witnesses,
        distinct_count=distinct,
        symmetry_class_count=len(ordered),
        nodes_explored=total_nodes,
        exhausted=True,
        phases=tuple(phases),
    )


def min_dominating(
    board: BoardSize,
    mode: str = MODE_GENERAL,
    *,
    enumerate_all: bool = False,
    node_budget: int | None = None,
    thread_count: int = 1,
    sym_depth: int = 4,
    size_range: tuple[int, int] | None = None,
) -> SearchOutcome:
    """Minimum dominating set of the board, optionally with enumeration.

    size_range restricts the sizes tried; when given, minimality is
    relative to that window and a miss returns exhausted=False with a
    construction fallback instead of raising.
    """
    config = SearchConfig(mode, enumerate_all, node_budget, thread_count, sym_depth)
    return _search(board, mode, 0, config, size_range)


def min_dominating_exterior(
    board: BoardSize,
    margin: int,
    mode: str = MODE_INDEPENDENT,
    *,
    enumerate_all: bool = False,
    node_budget: int | None = None,
    thread_count: int = 1,
    sym_depth: int = 4,
    size_range: tuple[int, int] | None = None,
) -> SearchOutcome:
    """Minimum set of points in the margin-enlarged frame dominating the board."""
    config = SearchConfig(mode, enumerate_all, node_budget, thread_count, sym_depth)
    return _search(board, mode, margin, config, size_range)


# ----- Symmetric augmentation heuristic -----

_ROTATIONS = (
    SymmetryTransform.IDENTITY,
    SymmetryTransform.ROT90,
    SymmetryTransform.ROT180,
    SymmetryTransform.ROT270,
)

_AXES = (
    SymmetryTransform.IDENTITY,
    SymmetryTransform.FLIP_X,
    SymmetryTransform.FLIP_Y,
    SymmetryTransform.ROT180,
)

_DIAGONALS = (
    SymmetryTransform.IDENTITY,
    SymmetryTransform.TRANSPOSE,
    SymmetryTransform.ANTITRANSPOSE,
    SymmetryTransform.ROT180,
)

_HALF_TURN = (
    SymmetryTransform.IDENTITY,
    SymmetryTransform.ROT180,
)


def _group_orbits(
    board: BoardSize, transforms: Sequence[SymmetryTransform]
) -> list[tuple[int, ...]]:
    """Cell orbits under a transform subgroup, as sorted index tuples.

    Orbits come out ordered by anchor (their smallest cell index).
    """
    seen = [False] * board.cell_count
    orbits: list[tuple[int, ...]] = []
    for idx in range(board.cell_count):
        if seen[idx]:
            continue
        p = board.point_at(idx)
        image = {board.index_of(t.apply_point(board, p)) for t in transforms}
        for j in image:
            seen[j] = True
        orbits.append(tuple(sorted(image)))
    return orbits


class _PairLines:
    """Lazily built full-line bitmasks for cell pairs of one board."""

    def __init__(self, board: BoardSize):
        self.board = board
        self._masks: dict[tuple[int, int], int] = {}

    def mask(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        m = self._masks.get(key)
        if m is None:
            a = self.board.point_at(key[0])
            b = self.board.point_at(key[1])
            m = 0
            for q in line_through(self.board, a, b):
                m |= 1 << self.board.index_of(q)
            self._masks[key] = m
        return m


def _add_orbit(
    pl: _PairLines,
    chosen: tuple[int, ...],
    bits: int,
    dom: int,
    orbit: tuple[int, ...],
) -> tuple[tuple[int, ...], int, int] | None:
    """Extend a no-three-collinear set by a whole orbit.

    Returns (indices, bits, dominated-bits) or None when the union
    would contain three collinear cells.
    """
    new_bits = bits
    for j in orbit:
        new_bits |= 1 << j
    new_dom = dom | new_bits
    for pos, i in enumerate(orbit):
        for j in chosen + orbit[:pos]:
            m = pl.mask(i, j)
            if m & new_bits & ~((1 << i) | (1 << j)):
                return None
            new_dom |= m
    return chosen + orbit, new_bits, new_dom


class _BudgetOut(Exception):
    pass


class _OrbitMixer:
    """Shared state for the orbit phases: one subgroup's orbit list."""

    def __init__(self, board: BoardSize, orbits: list[tuple[int, ...]], budget: list[int]):
        self.board = board
        self.orbits = orbits
        self.pl = _PairLines(board)
        self.full = (1 << board.cell_count) - 1
        self.budget = budget  # single-cell mutable counter
        sizes = [len(o) for o in orbits]
        self.sizes = sizes
        # suffix[i] = total cells in orbits i.. , for reachability pruning
        suffix = [0] * (len(orbits) + 1)
        for i in range(len(orbits) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + sizes[i]
        self.suffix = suffix

    def _tick(self) -> None:
        self.budget[0] -= 1
        if self.budget[0] < 0:
            raise _BudgetOut

    def reachable_sums(self, cap: int) -> set[int]:
        sums = {0}
        for s in self.sizes:
            sums |= {t + s for t in sums if t + s <= cap}
        return sums

    def combo(self, target: int) -> tuple[int, ...] | None:
        """First exact-size orbit union that dominates, anchor-lex order."""
        return self._combo(0, (), 0, 0, target)

    def _combo(
        self, start: int, chosen: tuple[int, ...], bits: int, dom: int, rem: int
    ) -> tuple[int, ...] | None:
        if rem == 0:
            return chosen if dom == self.full else None
        for oi in range(start, len(self.orbits)):
            if self.suffix[oi] < rem:
                return None
            if self.sizes[oi] > rem:
                continue
            self._tick()
            ext = _add_orbit(self.pl, chosen, bits, dom, self.orbits[oi])
            if ext is None:
                continue
            found = self._combo(oi + 1, ext[0], ext[1], ext[2], rem - self.sizes[oi])
            if found is not None:
                return found
        return None

    def greedy_repair(self) -> tuple[int, ...] | None:
        """Greedy marginal-coverage orbit selection plus swap repair.

        Ties on marginal coverage go to the lower anchor (orbits are
        scanned in anchor order and only strict gains displace the
        incumbent).  Returns the chosen cell indices once they dominate,
        or None if the phase stalls before reaching full coverage.
        """
        picked: list[int] = []
        chosen: tuple[int, ...] = ()
        bits = dom = 0
        while dom != self.full:
            best = None
            best_gain = 0
            for oi in range(len(self.orbits)):
                if oi in picked:
                    continue
                self._tick()
                ext = _add_orbit(self.pl, chosen, bits, dom, self.orbits[oi])
                if ext is None:
                    continue
                gain = bin(ext[2]).count("1") - bin(dom).count("1")
                if gain > best_gain:
                    best, best_gain = (oi, ext), gain
            if best is None:
                break
            picked.append(best[0])
            chosen, bits, dom = best[1]
        improved = True
        while dom != self.full and improved:
            improved = False
            for pos in range(len(picked)):
                keep = picked[:pos] + picked[pos + 1 :]
                base = self._rebuild(keep)
                if base is None:
                    continue
                for oi in range(len(self.orbits)):
                    if oi in picked:
                        continue
                    self._tick()
                    ext = _add_orbit(self.pl, base[0], base[1], base[2], self.orbits[oi])
                    if ext is None:
                        continue
                    if bin(ext[2]).count("1") > bin(dom).count("1"):
                        picked[pos] = oi
                        chosen, bits, dom = ext
                        improved = True
                        break
                if improved:
                    break
        return chosen if dom == self.full else None

    def _rebuild(self, picked: list[int]) -> tuple[tuple[int, ...], int, int] | None:
        state: tuple[tuple[int, ...], int, int] = ((), 0, 0)
        for oi in picked:
            ext = _add_orbit(self.pl, state[0], state[1], state[2], self.orbits[oi])
            if ext is None:
                return None
            state = ext
        return state


def symmetric_augment(
    board: BoardSize,
    budget: int | None = None,
    seeds: Sequence[Solution] = (),
) -> Solution:
    """Heuristic independent dominating set assembled from symmetric orbits.

    Cell orbits under the full dihedral group (full 8-orbits, 4-orbits
    on the axes and diagonals, the center) and under its subgroups are
    the building blocks.  Budgeted phases per subgroup: an exact
    combination search over orbit unions for each reachable size below
    the incumbent, the greedy marginal-coverage pass, and a
    swap-one-orbit repair step.  Solutions for smaller boards passed as
    `seeds` are additionally embedded at every offset and extended by a
    point or a half-turn-symmetric pair.  The smallest verified result
    wins; a maximal no-three-collinear set (never larger than 2n) is
    the fallback, so a solution is always returned but no optimality is
    claimed.
    """
    if board.n < 1:
        raise ValueError("need n >= 1")
    if budget is None:
        budget = 2_000_000
    fallback = greedy_maximal_independent(board)
    best: Solution = fallback
    counter = [budget]
    combo_groups = [ALL_TRANSFORMS, _AXES, _DIAGONALS, _ROTATIONS]
    floor = max(trivial_lower_bound(board.n), 1)
    try:
        pl = _PairLines(board)
        for seed in seeds:
            grown = _embed_extend(board, seed, pl, best.size - 1, counter)
            if grown is not None and len(grown) < best.size:
                best = _orbit_solution(board, grown)
        for transforms in combo_groups:
            mixer = _OrbitMixer(board, _group_orbits(board, transforms), counter)
            hit = mixer.greedy_repair()
            if hit is not None and len(hit) < best.size:
                best = _orbit_solution(board, hit)
            sums = mixer.reachable_sums(best.size - 1)
            for target in range(floor, best.size):
                if target not in sums:
                    continue
                hit = mixer.combo(target)
                if hit is not None:
                    best = _orbit_solution(board, hit)
                    break
        half = _OrbitMixer(board, _group_orbits(board, _HALF_TURN), counter)
        hit = half.greedy_repair()
        if hit is not None and len(hit) < best.size:
            best = _orbit_solution(board, hit)
    except _BudgetOut:
        pass
    return best


def _embed_extend(
    board: BoardSize,
    seed: Solution,
    pl: _PairLines,
    max_size: int,
    budget: list[int],
) -> tuple[int, ...] | None:
    """Grow a smaller board's solution onto this board.

    The seed is translated to every offset; each placement is accepted
    as-is if it already dominates, else extended by one cell or by a
    half-turn-symmetric pair.  Translation preserves collinearity, so
    only the added cells need fresh checks.  Returns cell indices of
    the first fit within max_size, smallest first.
    """
    m = seed.board.n
    n = board.n
    if seed.margin != 0 or m >= n or seed.mode != MODE_INDEPENDENT:
        return None
    full = (1 << board.cell_count) - 1
    n1 = n + 1
    placements: list[tuple[tuple[int, ...], int, int]] = []
    for dx in range(n - m + 1):
        for dy in range(n - m + 1):
            budget[0] -= 1
            if budget[0] < 0:
                raise _BudgetOut
            idx = tuple(
                board.index_of(GridPoint(p.x + dx, p.y + dy)) for p in seed.points
            )
            bits = 0
            for i in idx:
                bits |= 1 << i
            dom = bits
            for a_pos, i in enumerate(idx):
                for j in idx[:a_pos]:
                    dom |= pl.mask(i, j)
            if dom == full and len(idx) <= max_size:
                return idx
            placements.append((idx, bits, dom))
    if seed.size + 1 <= max_size:
        for idx, bits, dom in placements:
            for c in range(board.cell_count):
                if bits >> c & 1:
                    continue
                budget[0] -= 1
                if budget[0] < 0:
                    raise _BudgetOut
                ext = _add_orbit(pl, idx, bits, dom, (c,))
                if ext is not None and ext[2] == full:
                    return ext[0]
    if seed.size + 2 <= max_size:
        for idx, bits, dom in placements:
            for c in range(board.cell_count):
                p = board.point_at(c)
                q = GridPoint(n1 - p.x, n1 - p.y)
                cq = board.index_of(q)
                if cq <= c or bits >> c & 1 or bits >> cq & 1:
                    continue
                budget[0] -= 1
                if budget[0] < 0:
                    raise _BudgetOut
                ext = _add_orbit(pl, idx, bits, dom, (c, cq))
                if ext is not None and ext[2] == full:
                    return ext[0]
    return None


def _orbit_solution(board: BoardSize, cell_indices: Sequence[int]) -> Solution:
    points = [board.point_at(i) for i in cell_indices]
    return Solution.verified(
        board, MODE_INDEPENDENT, points, provenance="augment"
    )
