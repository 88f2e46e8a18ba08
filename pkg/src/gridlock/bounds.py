"""Counting bounds for minimum dominating sets on the n x n board.

Everything here is exact integer or rational arithmetic except the final
exponential in the second-moment failure bound, which is evaluated in
floating point at the end.  The central quantity is the number of lines
through a fixed point, grouped by the "class" j of their primitive
direction: class j contributes 4 * phi(j) lines and each of them meets
at most 2 * floor(n / j) further board cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator


def euler_phi(k: int) -> int:
    """Euler's totient via trial factorization."""
    if k < 1:
        raise ValueError(f"phi undefined for {k}")
    result = k
    m = k
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def phi_sieve(limit: int) -> list[int]:
    """phi(0..limit) by a sieve; index 0 is unused and set to 0."""
    if limit < 0:
        raise ValueError("negative sieve limit")
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for multiple in range(p, limit + 1, p):
                phi[multiple] -= phi[multiple] // p
    if limit >= 0:
        phi[0] = 0
    return phi


def phi_sum(k: int) -> int:
    """Sum of phi(i) for 1 <= i <= k."""
    if k < 0:
        raise ValueError("negative bound")
    return sum(phi_sieve(k)[1:]) if k else 0


def phi_ratio_sum(m: int) -> Fraction:
    """Sum of phi(i) / i for 1 <= i <= m, exactly."""
    if m < 0:
        raise ValueError("negative bound")
    total = Fraction(0)
    sieve = phi_sieve(m)
    for i in range(1, m + 1):
        total += Fraction(sieve[i], i)
    return total


def coverage_bound(n: int, m: int) -> int:
    """Upper bound on cells reachable from one point by lines of class <= m.

    1 + 8 * sum_{i<=m} floor(n/i) * phi(i): the point itself plus, for
    each of the 8 * phi(i) directed class-i rays, at most floor(n/i)
    cells.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    sieve = phi_sieve(m)
    return 1 + 8 * sum((n // i) * sieve[i] for i in range(1, m + 1))


def _line_weights(n: int) -> Iterator[tuple[int, int]]:
    """(count, per-line coverage) per direction class, heaviest first.

    Class j holds 4 * phi(j) lines through a fixed point, each covering
    at most 2 * floor(n / j) cells beyond that point.  Weights are
    nonincreasing in j, so increasing j enumerates heaviest first.
    """
    sieve_block = 256
    j = 1
    sieve: list[int] = []
    while True:
        if j >= len(sieve):
            sieve = phi_sieve(len(sieve) + sieve_block)
        weight = 2 * (n // j)
        if weight == 0:
            return
        yield 4 * sieve[j], weight
        j += 1


def greedy_coverage_bound(n: int, s: int) -> int:
    """Upper bound on cells dominated via lines through one fixed point.

    A set of s points containing the fixed point spans s - 1 lines
    through it; the bound takes the s - 1 heaviest line classes.
    """
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    remaining = s - 1
    total = 1
    for count, weight in _line_weights(n):
        if remaining <= 0:
            break
        take = min(count, remaining)
        total += take * weight
        remaining -= take
    return total


def trivial_lower_bound(n: int) -> int:
    """Smallest s with C(s, 2) * (n - 2) + s >= n * n.

    Each of the C(s, 2) spanned lines covers at most n - 2 cells beyond
    its two spanning points.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 1
    target = n * n
    s = 1
    while s * (s - 1) // 2 * (n - 2) + s < target:
        s += 1
    return s


def phi_lower_bound(n: int) -> int:
    """Smallest s with s * greedy_coverage_bound(n, s) >= n * n.

    Any dominating set of size s leaves some member covering at least
    n^2 / s cells through its own lines, and the greedy bound caps that.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    target = n * n
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if mid * greedy_coverage_bound(n, mid) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class JansonEstimate:
    """Second-moment certificate for random m-subsets of the prime torus."""

    n: int
    m: int
    mu: Fraction
    delta: Fraction
    failure_bound: float

    def certifies_existence(self, slack: float = 1e-9) -> bool:
        return self.failure_bound < 1.0 - slack


def janson_estimate(n: int, m: int) -> JansonEstimate:
    """Exact mu and delta for the torus T_n (n prime), plus the bound.

    mu   = m/n^2 + ((n+1)(n-1)(n-2)/2)   * (m/n^2)^2
    delta = ((n+1)(n-1)(n-2)(n-3)/12) * (m/n^2)^3
    failure_bound = 2 n^2 exp(-mu + delta), an upper bound on the
    probability that a uniform m-subset fails to dominate T_n.
    """
    if not is_prime(n):
        raise ValueError(f"torus second-moment bound needs prime n, got {n}")
    if not 0 <= m <= n * n:
        raise ValueError(f"m must be in [0, n^2], got {m}")
    p = Fraction(m, n * n)
    mu = p + Fraction((n + 1) * (n - 1) * (n - 2), 2) * p * p
    delta = Fraction((n + 1) * (n - 1) * (n - 2) * (n - 3), 12) * p * p * p
    bound = 2 * n * n * math.exp(float(delta - mu))
    return JansonEstimate(n, m, mu, delta, bound)


def janson_failure_bound(n: int, m: int) -> float:
    return janson_estimate(n, m).failure_bound


@dataclass(frozen=True)
class BoundReport:
    """All analytic bounds for one board side, ready for serialization."""

    n: int
    trivial_lower: int
    phi_lower: int
    construction_upper: int
    notes: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "trivialLower": self.trivial_lower,
            "phiLower": self.phi_lower,
            "constructionUpper": self.construction_upper,
            "notes": self.notes,
        }


def bound_report(n: int) -> BoundReport:
    if n < 1:
        raise ValueError("need n >= 1")
    upper = 2 * ((n + 1) // 2) if n >= 3 else (1 if n == 1 else 4)
    notes = {}
    if n >= 3:
        notes["construction"] = "two central columns, size 2*ceil(n/2)"
    return BoundReport(
        n=n,
        trivial_lower=trivial_lower_bound(n),
        phi_lower=phi_lower_bound(n),
        construction_upper=upper,
        notes=notes,
    )
