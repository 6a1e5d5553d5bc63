from fractions import Fraction

import pytest

from shellbound.exactpoly import (
    Poly,
    binom,
    cumulative_gegenbauer,
    cumulative_gegenbauer_closed,
    fisher_bound,
    gegenbauer,
    harmonic_dim,
    shell_bound,
)

HALF = Fraction(1, 2)


class TestBinom:
    def test_values(self):
        assert binom(10, 3) == 120
        assert binom(30, 7) == 2035800
        assert binom(5, 0) == 1
        assert binom(5, 5) == 1

    def test_zero_above_diagonal(self):
        assert binom(3, 5) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 2)
        with pytest.raises(ValueError):
            binom(4, -2)


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))
        assert Poly((0,)).degree is None
        assert Poly((0, 0, 3)).degree == 2

    def test_evaluation_is_exact(self):
        p = Poly((1, -2, 3))
        assert p(HALF) == 1 - 2 * HALF + 3 * HALF**2 == Fraction(3, 4)
        assert p(0) == 1

    def test_ring_operations(self):
        p = Poly((1, 1))
        q = Poly((-1, 1))
        assert p * q == Poly((-1, 0, 1))
        assert p + q == Poly((0, 2))
        assert p - p == Poly(())
        assert 3 * p == Poly((3, 3)) == p * 3
        assert -p == Poly((-1, -1))

    def test_reflection(self):
        p = Poly((1, 2, 3, 4))
        r = p.reflected()
        assert r(HALF) == p(-HALF)
        assert r.reflected() == p

    def test_coefficients_become_fractions(self):
        p = Poly((1, 2))
        assert all(isinstance(c, Fraction) for c in p.coeffs)

    def test_hash_consistent_with_eq(self):
        assert hash(Poly((0, 1, 0))) == hash(Poly((0, 1)))


class TestHarmonicDim:
    def test_values(self):
        assert harmonic_dim(8, 3) == 112
        assert harmonic_dim(3, 2) == 5
        assert harmonic_dim(24, 2) == 299

    @pytest.mark.parametrize("n", range(2, 12))
    def test_low_degrees(self, n):
        assert harmonic_dim(n, 0) == 1
        assert harmonic_dim(n, 1) == n

    @pytest.mark.parametrize("i", range(1, 9))
    def test_circle_harmonics_all_dimension_two(self, i):
        assert harmonic_dim(2, i) == 2

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            harmonic_dim(1, 2)
        with pytest.raises(ValueError):
            harmonic_dim(4, -1)


class TestGegenbauer:
    def test_degree_zero_and_one(self):
        for n in (2, 3, 8):
            assert gegenbauer(n, 0) == Poly((1,))
            assert gegenbauer(n, 1) == Poly((0, n))

    def test_degree_three_dimension_eight(self):
        q = gegenbauer(8, 3)
        assert q == Poly((0, -48, 0, 160))
        assert q(HALF) == -4
        assert q(1) == 112

    def test_dimension_three_legendre_multiple(self):
        # degree-2 kernel in dimension 3 is 5 * (3u^2 - 1)/2
        assert gegenbauer(3, 2) == Poly((Fraction(-5, 2), 0, Fraction(15, 2)))

    def test_dimension_two_doubles_chebyshev(self):
        assert gegenbauer(2, 3) == Poly((0, -6, 0, 8))
        assert gegenbauer(2, 5)(1) == 2

    @pytest.mark.parametrize("n", range(2, 13))
    @pytest.mark.parametrize("i", range(0, 11))
    def test_normalized_at_one(self, n, i):
        assert gegenbauer(n, i)(1) == harmonic_dim(n, i)

    @pytest.mark.parametrize("n", range(2, 10))
    @pytest.mark.parametrize("i", range(0, 9))
    def test_parity(self, n, i):
        q = gegenbauer(n, i)
        assert all(c == 0 for j, c in enumerate(q.coeffs) if (j - i) % 2)

    @pytest.mark.parametrize("n", (2, 3, 5, 8, 24))
    @pytest.mark.parametrize("i", range(0, 9))
    def test_bounded_by_value_at_one(self, n, i):
        q = gegenbauer(n, i)
        peak = q(1)
        for j in range(-4, 5):
            assert abs(q(Fraction(j, 4))) <= peak


class TestCumulative:
    def test_degree_three_dimension_eight(self):
        c = cumulative_gegenbauer(8, 3)
        assert c == Poly((0, -40, 0, 160))
        assert c(1) == 120

    @pytest.mark.parametrize("n", range(2, 17))
    @pytest.mark.parametrize("m", (1, 3, 5))
    def test_closed_form_agrees(self, n, m):
        assert cumulative_gegenbauer_closed(n, m) == cumulative_gegenbauer(n, m)

    @pytest.mark.parametrize("n", range(2, 17))
    @pytest.mark.parametrize("m", range(0, 13))
    def test_value_at_one(self, n, m):
        assert cumulative_gegenbauer(n, m)(1) == binom(n + m - 1, m)

    @pytest.mark.parametrize("n", (2, 4, 9))
    @pytest.mark.parametrize("m", range(2, 9))
    def test_recurrence_step(self, n, m):
        assert cumulative_gegenbauer(n, m) == cumulative_gegenbauer(n, m - 2) + gegenbauer(n, m)

    def test_closed_form_only_small_odd(self):
        with pytest.raises(ValueError):
            cumulative_gegenbauer_closed(4, 7)
        with pytest.raises(ValueError):
            cumulative_gegenbauer_closed(4, 2)


class TestFisherBound:
    def test_values(self):
        assert fisher_bound(8, 7) == 240
        assert fisher_bound(24, 11) == 196560
        assert fisher_bound(2, 3) == 4
        assert fisher_bound(2, 5) == 6
        assert fisher_bound(4, 5) == 20
        assert fisher_bound(3, 2) == 4

    @pytest.mark.parametrize("n", range(2, 26))
    @pytest.mark.parametrize("k", range(1, 7))
    def test_odd_case_matches_shell_bound(self, n, k):
        assert fisher_bound(n, 4 * k - 1) == shell_bound(n, k)


class TestShellBound:
    def test_values(self):
        assert shell_bound(8, 2) == 240
        assert shell_bound(24, 4) == 4071600
        assert shell_bound(2, 3) == 12
        assert shell_bound(4, 2) == 40

    @pytest.mark.parametrize("k", range(1, 11))
    def test_rank_one_always_two(self, k):
        assert shell_bound(1, k) == 2

    def test_monotone(self):
        for n in range(1, 20):
            assert shell_bound(n, 3) <= shell_bound(n + 1, 3)
        for k in range(1, 10):
            assert shell_bound(5, k) <= shell_bound(5, k + 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            shell_bound(0, 1)
        with pytest.raises(ValueError):
            shell_bound(3, 0)
