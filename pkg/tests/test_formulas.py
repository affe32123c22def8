"""Closed forms: pinned values, domains, and arithmetic identities."""

import random

import pytest

from rschur import (
    ComputedNumber,
    DomainError,
    Method,
    OutsideTheoremDomain,
    ProblemParams,
    UnsupportedM,
    compute_by_formula,
    formula_value,
    min_n_rainbow,
    min_n_weak,
    rs3_formula,
    rs_formula,
    rs_weak_formula,
)


class TestMinN:
    @pytest.mark.parametrize("m,expected", [(3, 3), (4, 6), (8, 28)])
    def test_rainbow_threshold(self, m, expected):
        assert min_n_rainbow(m) == expected

    def test_rainbow_rejects_small_m(self):
        with pytest.raises(DomainError):
            min_n_rainbow(2)

    @pytest.mark.parametrize("t,m,expected", [(3, 4, 4), (2, 6, 5), (2, 3, 2)])
    def test_weak_threshold(self, t, m, expected):
        assert min_n_weak(t, m) == expected

    @pytest.mark.parametrize("m", range(3, 12))
    def test_weak_matches_rainbow_at_t_equal_m(self, m):
        assert min_n_weak(m, m) == min_n_rainbow(m)

    def test_weak_rejects_bad_t(self):
        with pytest.raises(DomainError):
            min_n_weak(1, 5)
        with pytest.raises(DomainError):
            min_n_weak(6, 5)


class TestRs3:
    @pytest.mark.parametrize("n,expected", [(3, 3), (4, 4), (7, 4), (8, 5), (1024, 12)])
    def test_values(self, n, expected):
        assert rs3_formula(n) == expected

    def test_below_domain(self):
        with pytest.raises(DomainError):
            rs3_formula(2)

    @pytest.mark.parametrize("k", range(2, 61))
    def test_exact_at_powers_of_two(self, k):
        # bit-length arithmetic must not wobble where floats would round
        assert rs3_formula(2**k - 1) == k + 1
        assert rs3_formula(2**k) == k + 2
        assert rs3_formula(2**k + 1) == k + 2


class TestRsFormula:
    @pytest.mark.parametrize(
        "m,n,expected", [(4, 6, 6), (4, 100, 53), (5, 13, 12), (7, 21, 21)]
    )
    def test_values(self, m, n, expected):
        assert rs_formula(m, n) == expected

    def test_m3_needs_its_own_law(self):
        with pytest.raises(UnsupportedM):
            rs_formula(3, 10)

    def test_below_domain(self):
        with pytest.raises(DomainError):
            rs_formula(4, 5)
        with pytest.raises(DomainError):
            rs_formula(2, 10)

    @pytest.mark.parametrize("n", range(6, 200))
    def test_four_variable_specialization(self, n):
        # the general law collapses to ceil((n + 6) / 2) at m = 4
        assert rs_formula(4, n) == (n + 6 + 1) // 2

    @pytest.mark.parametrize("m", range(4, 13))
    def test_initial_plateau(self, m):
        # for the first m - 3 values of n the answer equals n itself
        base = min_n_rainbow(m)
        for i in range(m - 3):
            assert rs_formula(m, base + i) == base + i

    @pytest.mark.parametrize("m", range(4, 10))
    def test_steps_are_zero_or_one(self, m):
        prev = rs_formula(m, min_n_rainbow(m))
        for n in range(min_n_rainbow(m) + 1, min_n_rainbow(m) + 120):
            cur = rs_formula(m, n)
            assert cur - prev in (0, 1)
            prev = cur


class TestWeakFormula:
    @pytest.mark.parametrize(
        "t,m,n,expected",
        [(2, 5, 6, 2), (3, 4, 10, 4), (4, 5, 10, 9), (5, 5, 12, 12)],
    )
    def test_values(self, t, m, n, expected):
        assert rs_weak_formula(t, m, n) == expected

    def test_constant_band_boundary(self):
        assert rs_weak_formula(2, 6, 8) == 2
        with pytest.raises(OutsideTheoremDomain):
            rs_weak_formula(2, 6, 7)

    def test_below_weak_threshold(self):
        with pytest.raises(DomainError):
            rs_weak_formula(4, 5, 6)  # needs n >= 7

    def test_t_equal_m_equal_3_deferred(self):
        with pytest.raises(UnsupportedM):
            rs_weak_formula(3, 3, 10)

    @pytest.mark.parametrize("m", range(4, 10))
    def test_matches_rainbow_at_t_equal_m(self, m):
        for n in range(min_n_rainbow(m), min_n_rainbow(m) + 40):
            assert rs_weak_formula(m, m, n) == rs_formula(m, n)

    @pytest.mark.parametrize("m", range(4, 10))
    def test_t3_is_m_for_every_n(self, m):
        for n in range(min_n_weak(3, m), min_n_weak(3, m) + 50):
            assert rs_weak_formula(3, m, n) == m

    def test_monotone_in_t(self):
        rng = random.Random(7)
        for _ in range(200):
            m = rng.randint(4, 12)
            n = rng.randint(min_n_rainbow(m), 4 * min_n_rainbow(m))
            values = [rs_weak_formula(t, m, n) for t in range(3, m + 1)]
            assert values == sorted(values)


class TestFrontDoor:
    def test_dispatch(self):
        assert formula_value(3, 8) == 5
        assert formula_value(4, 100) == 53
        assert formula_value(5, 10, t=2) == 2
        assert formula_value(5, 10, t=4) == 9
        assert formula_value(4, 50, t=4) == rs_formula(4, 50)

    def test_computed_number_tagging(self):
        number = compute_by_formula(4, 100)
        assert isinstance(number, ComputedNumber)
        assert number.value == 53
        assert number.method is Method.FORMULA
        assert number.witness is None


class TestProblemParams:
    def test_valid(self):
        p = ProblemParams(m=5, t=5, n=12)
        assert p.rainbow
        assert p.in_rainbow_domain()
        assert not p.in_weak_domain()

    def test_weak_domain(self):
        p = ProblemParams(m=6, t=2, n=5)
        assert not p.rainbow
        assert p.in_weak_domain()
        assert not ProblemParams(m=6, t=2, n=4).in_weak_domain()

    @pytest.mark.parametrize("m,t,n", [(2, 2, 5), (4, 1, 5), (4, 5, 5), (4, 4, 0)])
    def test_invalid(self, m, t, n):
        with pytest.raises(DomainError):
            ProblemParams(m=m, t=t, n=n)
