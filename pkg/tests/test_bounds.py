import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridlock.bounds import (
    JansonEstimate,
    bound_report,
    coverage_bound,
    euler_phi,
    greedy_coverage_bound,
    is_prime,
    janson_estimate,
    janson_failure_bound,
    phi_lower_bound,
    phi_ratio_sum,
    phi_sieve,
    phi_sum,
    trivial_lower_bound,
)

PHI_SMALL = [0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]  # phi(0..12), phi(0) unused


def test_euler_phi_small_values():
    for k in range(1, 13):
        assert euler_phi(k) == PHI_SMALL[k]
    assert euler_phi(1) == 1
    with pytest.raises(ValueError):
        euler_phi(0)


@given(st.integers(min_value=1, max_value=2000))
def test_sieve_agrees_with_direct_phi(k):
    assert phi_sieve(k)[k] == euler_phi(k)


@given(st.integers(min_value=2, max_value=500))
def test_phi_multiplicative_on_coprime_split(k):
    # phi(ab) = phi(a) phi(b) for coprime a, b
    for a in range(2, k):
        if k % a == 0 and math.gcd(a, k // a) == 1:
            assert euler_phi(k) == euler_phi(a) * euler_phi(k // a)
            break


def test_phi_sum_matches_known_prefix():
    assert [phi_sum(k) for k in range(1, 11)] == [1, 2, 4, 6, 10, 12, 18, 22, 28, 32]
    assert phi_sum(0) == 0


def test_phi_ratio_sum_exact_values():
    assert phi_ratio_sum(1) == 1
    assert phi_ratio_sum(2) == Fraction(3, 2)
    assert phi_ratio_sum(4) == Fraction(1) + Fraction(1, 2) + Fraction(2, 3) + Fraction(1, 2)
    # asymptotically (6/pi^2) m; check the constant is in the right zone
    approx = phi_ratio_sum(500) / 500
    assert abs(float(approx) - 6 / math.pi**2) < 0.01


def test_coverage_bound_formula():
    # 1 + 8 * sum floor(n/i) phi(i): n=5, m=2 -> 1 + 8*(5*1 + 2*1) = 57
    assert coverage_bound(5, 2) == 57
    assert coverage_bound(5, 0) == 1
    with pytest.raises(ValueError):
        coverage_bound(0, 1)


def test_greedy_coverage_bound_monotone_in_s():
    for n in (5, 9, 30):
        values = [greedy_coverage_bound(n, s) for s in range(1, 12)]
        assert values == sorted(values)
        assert values[0] == 1  # a single point spans no line


def test_greedy_coverage_bound_single_line_weight():
    # s=2: one line, heaviest class is axis-parallel: 2n cells beyond the point
    assert greedy_coverage_bound(7, 2) == 1 + 2 * 7


def test_greedy_coverage_exhausts_classes():
    # s large enough to take all classes: bound stops growing
    n = 4
    v1 = greedy_coverage_bound(n, 400)
    v2 = greedy_coverage_bound(n, 500)
    assert v1 == v2


def test_trivial_lower_bound_small_boards():
    # smallest s with C(s,2)(n-2) + s >= n^2
    assert trivial_lower_bound(1) == 1
    assert trivial_lower_bound(2) == 4  # lines cover nothing extra when n = 2
    assert trivial_lower_bound(3) == 4  # s=3 gives 3+3=6 < 9; s=4 gives 6+4=10
    assert trivial_lower_bound(8) == 5  # s=4: 36+4 < 64; s=5: 60+5 >= 64


def test_trivial_lower_bound_is_a_threshold():
    for n in range(2, 60):
        s = trivial_lower_bound(n)
        cover = lambda t: t * (t - 1) // 2 * (n - 2) + t
        assert cover(s) >= n * n
        if s > 1:
            assert cover(s - 1) < n * n


def test_phi_lower_bound_is_a_threshold():
    for n in range(1, 120):
        s = phi_lower_bound(n)
        assert s * greedy_coverage_bound(n, s) >= n * n
        if s > 1:
            assert (s - 1) * greedy_coverage_bound(n, s - 1) < n * n


def test_phi_lower_bound_beats_trivial_for_large_n():
    # Theta(n^(2/3)) eventually dominates the Theta(sqrt(n)) pair count;
    # the crossover sits near n = 2800, far above every exactly solved board
    assert phi_lower_bound(5000) > trivial_lower_bound(5000)
    assert phi_lower_bound(100000) > trivial_lower_bound(100000)


def test_bound_ordering_up_to_200():
    # through n = 200 the pair-counting bound is the stronger of the two;
    # both stay below the constructive upper bound, so the usable lower
    # bound is the max of the pair
    for n in range(3, 201):
        upper = 2 * ((n + 1) // 2)
        assert phi_lower_bound(n) < trivial_lower_bound(n)
        assert trivial_lower_bound(n) <= upper
        assert phi_lower_bound(n) <= upper


def test_greedy_coverage_bound_is_sound_at_the_center(rng):
    # 200 random sets through the center of an odd board: the cells their
    # lines through the center dominate never exceed the analytic cap
    from gridlock.geometry import BoardSize, GridPoint, line_through

    for _ in range(200):
        n = rng.choice([5, 7, 9])
        board = BoardSize(n)
        center = GridPoint((n + 1) // 2, (n + 1) // 2)
        s = rng.randint(1, 10)
        others = [p for p in board.all_points() if p != center]
        chosen = rng.sample(others, min(s - 1, len(others))) if s > 1 else []
        covered = {center}
        for b in chosen:
            covered.update(line_through(board, center, b))
        assert len(covered) <= greedy_coverage_bound(n, s)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for k in range(-3, 25):
        assert is_prime(k) == (k in primes)


class TestJanson:
    def test_rejects_composite_and_bad_m(self):
        with pytest.raises(ValueError):
            janson_estimate(10, 5)
        with pytest.raises(ValueError):
            janson_estimate(7, 50)
        with pytest.raises(ValueError):
            janson_estimate(7, -1)

    def test_formula_by_hand_for_tiny_prime(self):
        est = janson_estimate(5, 10)
        p = Fraction(10, 25)
        assert est.mu == p + Fraction(6 * 4 * 3, 2) * p * p
        assert est.delta == Fraction(6 * 4 * 3 * 2, 12) * p * p * p
        expected = 2 * 25 * math.exp(float(est.delta - est.mu))
        assert est.failure_bound == pytest.approx(expected)

    def test_failure_bound_decreases_in_m(self):
        values = [janson_failure_bound(101, m) for m in (20, 40, 60, 80)]
        assert values == sorted(values, reverse=True)

    def test_certifies_existence_threshold(self):
        good = janson_estimate(101, 60)
        assert good.certifies_existence()
        bad = janson_estimate(101, 5)
        assert not bad.certifies_existence()


def test_bound_report_shapes():
    rep = bound_report(8)
    assert rep.trivial_lower == 5
    assert rep.construction_upper == 8
    d = rep.to_json_dict()
    assert set(d) == {"n", "trivialLower", "phiLower", "constructionUpper", "notes"}
    tiny = bound_report(1)
    assert tiny.construction_upper == 1
    assert bound_report(2).construction_upper == 4
    with pytest.raises(ValueError):
        bound_report(0)
