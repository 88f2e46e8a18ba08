"""Domination on the discrete torus T_n = (Z/n)^2.

Torus lines are images of integer lines under coordinatewise reduction
mod n: orbits {base + t*dir} of directions (a, b) with gcd(a, b, n) = 1.
Every such line has exactly n points; a point is dominated by a set S
when it belongs to S or lies on a line carrying at least two members
of S.  On composite tori two points may share several lines and all of
them count.

The blow-up machinery scales small dominating sets to composite side
lengths.  Every construction re-verifies its output by brute force
before returning it (up to a side-length budget) and raises on failure,
so a returned solution can be trusted even where the scaling argument
is delicate.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .bounds import is_prime

# largest side for which constructions are brute-force verified before
# being returned; table building is quadratic in the cell count
VERIFY_LIMIT = 128


@dataclass(frozen=True, order=True)
class TorusPoint:
    x: int
    y: int


@dataclass(frozen=True, order=True)
class TorusDirection:
    """A residue direction (a, b), not both zero, with gcd(a, b, n) = 1."""

    a: int
    b: int


Pointish = TorusPoint | tuple[int, int]


def _as_point(n: int, p: Pointish) -> TorusPoint:
    if isinstance(p, TorusPoint):
        return TorusPoint(p.x % n, p.y % n)
    x, y = p
    return TorusPoint(x % n, y % n)


def _as_points(n: int, s: Iterable[Pointish]) -> tuple[TorusPoint, ...]:
    return tuple(sorted({_as_point(n, p) for p in s}))


class TorusConstructionError(ValueError):
    """A scaling construction produced a set that fails verification."""


@dataclass(frozen=True)
class TorusLine:
    """A full torus line: the orbit of `base` under steps of `dir`."""

    points: frozenset[TorusPoint]
    base: TorusPoint
    dir: TorusDirection

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def sorted_points(self) -> tuple[TorusPoint, ...]:
        return tuple(sorted(self.points))


def torus_directions(n: int) -> tuple[TorusDirection, ...]:
    """Canonical generators of the direction subgroups of T_n.

    Two directions generate the same line family exactly when one is a
    unit multiple of the other; the representative is the
    lexicographically smallest generator of the orbit.  For prime n
    this gives the familiar n + 1 directions (0,1), (1,0), ..., (1,n-1).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return ()
    units = [t for t in range(1, n) if math.gcd(t, n) == 1]
    seen: set[tuple[int, int]] = set()
    for a in range(n):
        for b in range(n):
            if (a, b) == (0, 0) or math.gcd(math.gcd(a, b), n) != 1:
                continue
            seen.add(min(((a * t) % n, (b * t) % n) for t in units))
    return tuple(TorusDirection(a, b) for a, b in sorted(seen))


# ----- Per-n line structure, cached -----


class _TorusTables:
    def __init__(self, n: int) -> None:
        self.n = n
        self.ncells = n * n
        self.words = (self.ncells + 63) // 64
        self.directions = torus_directions(n)
        self.lines_arr, self.line_dirs = self._build_lines(n)

    def _build_lines(self, n: int):
        # rows of sorted cell indices, one row per distinct line
        if n == 1:
            return np.zeros((1, 1), dtype=np.int32), [TorusDirection(0, 0)]
        xs, ys = np.meshgrid(np.arange(n), np.arange(n), indexing="xy")
        X = xs.ravel()
        Y = ys.ravel()
        rows = []
        dirs: list[TorusDirection] = []
        t = np.arange(n)
        for d in self.directions:
            px = (X[:, None] + t[None, :] * d.a) % n
            py = (Y[:, None] + t[None, :] * d.b) % n
            m = np.sort(py * n + px, axis=1)
            uniq = np.unique(m, axis=0)
            rows.append(uniq.astype(np.int32))
            dirs.extend([d] * uniq.shape[0])
        return np.concatenate(rows, axis=0), dirs

    @cached_property
    def line_masks(self) -> np.ndarray:
        masks = np.zeros((self.lines_arr.shape[0], self.words), dtype=np.uint64)
        for i, row in enumerate(self.lines_arr):
            for c in row:
                masks[i, int(c) >> 6] |= np.uint64(1) << np.uint64(int(c) & 63)
        return masks

    def index(self, p: TorusPoint) -> int:
        return p.y * self.n + p.x

    def point(self, index: int) -> TorusPoint:
        y, x = divmod(index, self.n)
        return TorusPoint(x, y)


_TORUS_CACHE: dict[int, _TorusTables] = {}
_TORUS_LOCK = threading.Lock()


def _tables(n: int) -> _TorusTables:
    with _TORUS_LOCK:
        t = _TORUS_CACHE.get(n)
    if t is None:
        t = _TorusTables(n)
        with _TORUS_LOCK:
            _TORUS_CACHE[n] = t
    return t


def torus_lines_through(n: int, p: Pointish) -> list[TorusLine]:
    """All distinct torus lines through p, one per direction subgroup."""
    if n == 1:
        pt = _as_point(1, p)
        return [TorusLine(frozenset({pt}), pt, TorusDirection(0, 0))]
    pt = _as_point(n, p)
    out = []
    for d in torus_directions(n):
        pts = frozenset(
            TorusPoint((pt.x + t * d.a) % n, (pt.y + t * d.b) % n) for t in range(n)
        )
        out.append(TorusLine(pts, pt, d))
    return out


def all_torus_lines(n: int) -> list[TorusLine]:
    tab = _tables(n)
    out = []
    for row, d in zip(tab.lines_arr, tab.line_dirs):
        pts = [tab.point(int(c)) for c in row]
        out.append(TorusLine(frozenset(pts), min(pts), d))
    return out


def torus_dominated_mask(n: int, s: Iterable[Pointish]) -> frozenset[TorusPoint]:
    """Points of T_n dominated by s: members plus every line with >= 2 members."""
    pts = _as_points(n, s)
    tab = _tables(n)
    member = np.zeros(tab.ncells, dtype=bool)
    for p in pts:
        member[tab.index(p)] = True
    if n == 1:
        return frozenset(pts)
    counts = member[tab.lines_arr].sum(axis=1)
    dominated = member.copy()
    hot = tab.lines_arr[counts >= 2]
    if hot.size:
        dominated[hot.ravel()] = True
    return frozenset(tab.point(i) for i in np.flatnonzero(dominated))


def is_torus_dominating(n: int, s: Iterable[Pointish]) -> bool:
    return len(torus_dominated_mask(n, s)) == n * n


def count_dominating_pairs(n: int, p: Pointish) -> int:
    """Unordered pairs {x, y} (both != p) sharing a line with p."""
    pt = _as_point(n, p)
    pairs: set[tuple[TorusPoint, TorusPoint]] = set()
    for line in torus_lines_through(n, pt):
        others = [q for q in line.points if q != pt]
        for i, a in enumerate(others):
            for b in others[i + 1 :]:
                pairs.add((a, b) if a < b else (b, a))
    return len(pairs)


def count_collinear_triples_with(n: int, p: Pointish) -> int:
    """Unordered triples {x, y, z} (all != p) on a single line through p."""
    pt = _as_point(n, p)
    triples: set[tuple[TorusPoint, ...]] = set()
    for line in torus_lines_through(n, pt):
        others = sorted(q for q in line.points if q != pt)
        k = len(others)
        for i in range(k):
            for j in range(i + 1, k):
                for l in range(j + 1, k):
                    triples.add((others[i], others[j], others[l]))
    return len(triples)


# ----- Solutions -----


@dataclass(frozen=True)
class TorusSolution:
    n: int
    points: tuple[TorusPoint, ...]
    provenance: str = "search"

    @property
    def size(self) -> int:
        return len(self.points)

    def to_json_dict(self) -> dict:
        return {
            "kind": "torus",
            "n": self.n,
            "mode": "general",
            "size": self.size,
            "points": [[p.x, p.y] for p in self.points],
            "provenance": self.provenance,
        }

    @classmethod
    def verified(
        cls, n: int, points: Iterable[Pointish], provenance: str = "search"
    ) -> "TorusSolution":
        pts = _as_points(n, points)
        _verify(n, pts, "torus solution")
        return cls(n, pts, provenance)

    @classmethod
    def from_json_dict(cls, data: dict) -> "TorusSolution":
        if data.get("kind") != "torus":
            raise ValueError("expected a torus solution object")
        pts = [TorusPoint(int(x), int(y)) for x, y in data["points"]]
        sol = cls.verified(
            int(data["n"]), pts, str(data.get("provenance", "external"))
        )
        if "size" in data and int(data["size"]) != sol.size:
            raise ValueError("declared size does not match point count")
        return sol


def _verify(n: int, pts: Sequence[TorusPoint], what: str) -> tuple[TorusPoint, ...]:
    pts = tuple(sorted(pts))
    if n <= VERIFY_LIMIT and not is_torus_dominating(n, pts):
        missing = n * n - len(torus_dominated_mask(n, pts))
        raise TorusConstructionError(
            f"{what} failed verification on T_{n}: {missing} points uncovered"
        )
    return pts


# ----- Blow-up constructions -----


@dataclass(frozen=True)
class BlowupSpec:
    """Parameters of a componentwise blow-up from T_p to T_{p*q}."""

    p: int
    q: int
    base_set: frozenset[TorusPoint]
    fixed: TorusPoint

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2:
            raise ValueError("need p >= 2 and q >= 2")
        base = frozenset(_as_point(self.p, z) for z in self.base_set)
        object.__setattr__(self, "base_set", base)
        object.__setattr__(self, "fixed", _as_point(self.p, self.fixed))
        if self.fixed not in base:
            raise ValueError(f"fixed point {self.fixed} not in the base set")

    @property
    def n(self) -> int:
        return self.p * self.q


def blow_up(spec: BlowupSpec) -> frozenset[TorusPoint]:
    """Scale a T_p set into T_{pq}, keeping spec.fixed in place.

    Every point y != fixed moves to fixed + q * (y - fixed), computed
    componentwise mod pq.  Domination of the image is the caller's
    concern; the named constructions below add their own verification.
    """
    n = spec.n
    fx = spec.fixed
    out = {TorusPoint(fx.x, fx.y)}
    for y in spec.base_set:
        if y == fx:
            continue
        out.add(
            TorusPoint(
                (fx.x + spec.q * (y.x - fx.x)) % n,
                (fx.y + spec.q * (y.y - fx.y)) % n,
            )
        )
    return frozenset(out)


def construct_even(n: int) -> TorusSolution:
    """{(0,0), (0,n/2), (n/2,0), (n/2,n/2)} dominates T_n for even n."""
    if n < 2 or n % 2:
        raise ValueError(f"need even n >= 2, got {n}")
    q = n // 2
    pts = [TorusPoint(0, 0), TorusPoint(0, q), TorusPoint(q, 0), TorusPoint(q, q)]
    return TorusSolution(
        n, _verify(n, pts, "even-side construction"), "construction"
    )


def construct_3q(n: int) -> TorusSolution:
    """Four points dominating T_n for any n divisible by 3.

    Writes n = 3^j * n0 with n0 = 3 * q0 and gcd(3, q0) = 1, blows the
    T_3 square {(0,0),(0,t),(t,0),(t,t)} with t = q0 mod 3 up to T_{n0},
    then scales coordinates by 3^j.
    """
    if n < 3 or n % 3:
        raise ValueError(f"need n divisible by 3, got {n}")
    j = 0
    n0 = n
    while n0 % 9 == 0:
        n0 //= 3
        j += 1
    q0 = n0 // 3
    t = q0 % 3
    base = [TorusPoint(0, 0), TorusPoint(0, t), TorusPoint(t, 0), TorusPoint(t, t)]
    if q0 == 1:
        scaled: Iterable[TorusPoint] = base
    else:
        scaled = blow_up(BlowupSpec(3, q0, frozenset(base), TorusPoint(0, 0)))
    factor = 3**j
    pts = sorted({TorusPoint(p.x * factor % n, p.y * factor % n) for p in scaled})
    return TorusSolution(
        n, _verify(n, pts, "multiple-of-3 construction"), "construction"
    )


def construct_2p(n: int, p: int | None = None) -> TorusSolution:
    """Two blown-up columns of height p dominating T_n = T_{p*q}.

    When p and q share a factor the two size-p columns leave residue
    classes exposed and two extra points (0, q), (0, 1 + q) repair them.
    """
    if p is None:
        p = next((f for f in range(2, n + 1) if n % f == 0 and is_prime(f)), None)
        if p is None:
            raise ValueError(f"no prime factor found for {n}")
    if n % p or not is_prime(p):
        raise ValueError(f"need prime p dividing n, got p={p}, n={n}")
    q = n // p
    pts = {TorusPoint(0, a) for a in range(p)} | {
        TorusPoint(q % n, a) for a in range(p)
    }
    if math.gcd(p, q) > 1:
        pts |= {TorusPoint(0, q % n), TorusPoint(0, (1 + q) % n)}
    return TorusSolution(
        n, _verify(n, sorted(pts), "two-column construction"), "construction"
    )


def has_apex(p: int, s: Iterable[Pointish]) -> TorusPoint | None:
    """A member x of s whose lines to the rest of s cover all of T_p."""
    if not is_prime(p):
        raise ValueError(f"apex test defined for prime p, got {p}")
    pts = _as_points(p, s)
    full = p * p
    for x in pts:
        covered = {x}
        for line in torus_lines_through(p, x):
            if any(y != x and y in line for y in pts):
                covered.update(line.points)
        if len(covered) == full:
            return x
    return None


def apex_base(p: int) -> tuple[TorusPoint, ...]:
    """The origin plus one point per direction of T_p: an apexed set of p+2."""
    if not is_prime(p):
        raise ValueError(f"need prime p, got {p}")
    pts = [TorusPoint(0, 0)] + [TorusPoint(d.a, d.b) for d in torus_directions(p)]
    return tuple(sorted(set(pts)))


def blow_up_exact(
    p: int, n: int, s: Iterable[Pointish], apex: Pointish | None = None
) -> TorusSolution:
    """Scale an apexed dominating set of T_p to T_n = T_{p*q}.

    The set is translated so the apex sits at the origin and multiplied
    by q.  When n is a power of p the image already dominates; otherwise
    the two extra points (0, 1) and (0, q + 1) complete it.
    """
    if not is_prime(p):
        raise ValueError(f"need prime p, got {p}")
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    q = n // p
    pts = _as_points(p, s)
    ax = _as_point(p, apex) if apex is not None else has_apex(p, pts)
    if ax is None:
        raise TorusConstructionError(f"no apex point in the base set on T_{p}")
    if ax not in pts:
        raise ValueError(f"apex {ax} not in the base set")
    translated = [TorusPoint((z.x - ax.x) % p, (z.y - ax.y) % p) for z in pts]
    scaled = {TorusPoint(q * z.x % n, q * z.y % n) for z in translated}
    m = n
    while m % p == 0:
        m //= p
    if m != 1:
        scaled |= {TorusPoint(0, 1 % n), TorusPoint(0, (q + 1) % n)}
    return TorusSolution(n, _verify(n, sorted(scaled), "apex blow-up"), "construction")


def construct_apex(n: int, p: int | None = None) -> TorusSolution:
    """Apex blow-up of the canonical p+2 apexed base into T_n."""
    if p is None:
        p = next((f for f in range(2, n + 1) if n % f == 0 and is_prime(f)), None)
        if p is None:
            raise ValueError(f"no prime factor found for {n}")
    return blow_up_exact(p, n, apex_base(p), TorusPoint(0, 0))


# ----- Monte Carlo domination frequency -----


def monte_carlo_domination(n: int, m: int, trials: int, seed: int = 0) -> float:
    """Fraction of uniform m-subsets of T_n that dominate it.

    Each trial uses an independent generator seeded with seed XOR the
    trial index, so results are reproducible and insensitive to trial
    order or parallel scheduling.
    """
    if not 0 <= m <= n * n:
        raise ValueError(f"m must be in [0, n^2], got {m}")
    if trials < 1:
        raise ValueError("need at least one trial")
    tab = _tables(n)
    successes = 0
    for trial in range(trials):
        rng = np.random.default_rng(seed ^ trial)
        chosen = rng.choice(tab.ncells, size=m, replace=False)
        member = np.zeros(tab.ncells, dtype=bool)
        member[chosen] = True
        if n == 1:
            dominated = member
        else:
            counts = member[tab.lines_arr].sum(axis=1)
            dominated = member.copy()
            hot = tab.lines_arr[counts >= 2]
            if hot.size:
                dominated[hot.ravel()] = True
        if dominated.all():
            successes += 1
    return successes / trials


# ----- Exact minimum search -----


@dataclass(frozen=True)
class TorusSearchOutcome:
    """Result of an exact torus search.

    distinct_count and symmetry_class_count cover the witnesses that
    were actually enumerated; they are exact population counts only
    when the search ran with enumerate_all=True and exhausted=True.
    """

    n: int
    minimum_size: int
    witnesses: tuple[TorusSolution, ...]
    distinct_count: int
    symmetry_class_count: int
    nodes_explored: int
    exhausted: bool


def _dihedral_images(n: int, pts: Sequence[TorusPoint]):
    coords = [(p.x, p.y) for p in pts]
    yield coords
    yield [((-y) % n, x % n) for x, y in coords]          # rot90
    yield [((-x) % n, (-y) % n) for x, y in coords]       # rot180
    yield [(y % n, (-x) % n) for x, y in coords]          # rot270
    yield [((-x) % n, y % n) for x, y in coords]          # flip x
    yield [(x % n, (-y) % n) for x, y in coords]          # flip y
    yield [(y % n, x % n) for x, y in coords]             # transpose
    yield [((-y) % n, (-x) % n) for x, y in coords]       # antitranspose


def torus_canonical_key(n: int, s: Iterable[Pointish]) -> tuple[int, ...]:
    """Lex-least index tuple over translations and dihedral maps."""
    pts = _as_points(n, s)
    best = None
    for image in _dihedral_images(n, pts):
        for tx, ty in image:
            cand = tuple(
                sorted(((y - ty) % n) * n + ((x - tx) % n) for x, y in image)
            )
            if best is None or cand < best:
                best = cand
    return best


def _torus_orbit_len(n: int, pts: Sequence[TorusPoint]) -> int:
    images = set()
    for image in _dihedral_images(n, pts):
        for tx in range(n):
            for ty in range(n):
                images.add(
                    tuple(
                        sorted(((y + ty) % n) * n + ((x + tx) % n) for x, y in image)
                    )
                )
    return len(images)


def _torus_kernel_tables(n: int):
    tab = _tables(n)
    C = tab.ncells
    W = tab.words
    pair_cov = np.zeros((C, C, W), dtype=np.uint64)
    forb = np.zeros((1, 1, W), dtype=np.uint64)  # independent mode unused
    own = np.zeros((C, W), dtype=np.uint64)
    target = np.zeros(W, dtype=np.uint64)
    for i in range(C):
        own[i, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        target[i >> 6] |= np.uint64(1) << np.uint64(i & 63)
    for row, mask in zip(tab.lines_arr, tab.line_masks):
        cells = [int(c) for c in row]
        for ai, a in enumerate(cells):
            for b in cells[ai + 1 :]:
                pair_cov[a, b] |= mask
                pair_cov[b, a] |= mask
    perms = np.arange(C, dtype=np.int64).reshape(1, C)
    cap = 0
    for i in range(C):
        for j in range(i + 1, C):
            pc = 0
            for w in range(W):
                pc += int(pair_cov[i, j, w]).bit_count()
            cap = max(cap, pc - 2)
    return tab, pair_cov, forb, own, target, perms, cap


def torus_min_dominating(
    n: int, budget: int | None = None, *, enumerate_all: bool = False
) -> TorusSearchOutcome:
    """Exact minimum dominating set of T_n by pinned-translation search.

    Every nonempty set has a translate through the origin, so the first
    chosen cell is fixed there; witness classes are reduced under the
    full translation-dihedral group.  Practical for n up to about 10.
    On budget exhaustion returns the best known construction with
    exhausted=False.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        sol = TorusSolution.verified(1, [TorusPoint(0, 0)])
        return TorusSearchOutcome(1, 1, (sol,), 1, 1, 0, True)
    tab, pair_cov, forb, own, target, perms, cap = _torus_kernel_tables(n)
    budget_left = -1 if budget is None else int(budget)
    total_nodes = 0
    for k in range(1, n * n + 1):
        cap_rem = np.zeros(k + 1, dtype=np.int64)
        for c in range(k + 1):
            cap_rem[c] = sum((c + j - 1) * cap + 1 for j in range(1, k - c + 1))
        out = np.empty((4096, k), dtype=np.int32)
        found, nodes, aborted = _kernels.search_phase(
            np.int64(k),
            np.int64(tab.ncells),
            np.int64(tab.words),
            pair_cov,
            forb,
            own,
            target,
            perms,
            False,
            np.int64(0),
            cap_rem,
            np.int64(0),
            np.int64(1),  # first point pinned to the origin cell
            not enumerate_all,
            np.int64(budget_left),
            out,
        )
        found = int(found)
        total_nodes += int(nodes)
        if budget_left >= 0:
            budget_left = max(budget_left - int(nodes), 0)
        if aborted:
            fallback = _best_construction(n)
            return TorusSearchOutcome(
                n, fallback.size, (fallback,), 1, 1, total_nodes, False
            )
        if found:
            while found > out.shape[0]:
                out = np.empty((found + 16, k), dtype=np.int32)
                found, nodes, _ = _kernels.search_phase(
                    np.int64(k), np.int64(tab.ncells), np.int64(tab.words),
                    pair_cov, forb, own, target, perms, False, np.int64(0),
                    cap_rem, np.int64(0), np.int64(1), not enumerate_all,
                    np.int64(-1), out,
                )
                found = int(found)
                total_nodes += int(nodes)
            classes: dict[tuple[int, ...], int] = {}
            for row in out[:found]:
                pts = [tab.point(int(c)) for c in row]
                key = torus_canonical_key(n, pts)
                if key not in classes:
                    classes[key] = _torus_orbit_len(n, pts)
            ordered = sorted(classes)
            witnesses = tuple(
                TorusSolution.verified(n, [tab.point(i) for i in key])
                for key in ordered
            )
            return TorusSearchOutcome(
                n,
                k,
                witnesses,
                sum(classes[key] for key in ordered),
                len(ordered),
                total_nodes,
                True,
            )
    raise AssertionError("the full torus always dominates itself")


def _best_construction(n: int) -> TorusSolution:
    candidates: list[TorusSolution] = []
    for builder in (construct_even, construct_3q, construct_2p, construct_apex):
        try:
            candidates.append(builder(n))
        except (ValueError, TorusConstructionError):
            continue
    if not candidates:
        full = [TorusPoint(x, y) for x in range(n) for y in range(n)]
        return TorusSolution.verified(n, full, provenance="fallback")
    best = min(candidates, key=lambda s: s.size)
    return TorusSolution(best.n, best.points, "fallback")
