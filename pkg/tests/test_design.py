from fractions import Fraction

import pytest

from shellbound.design import (
    annihilator,
    annihilator_identity_holds,
    antipodal_bound,
    design_strength,
    moment_sum,
    pair_distribution,
    spectrum,
)
from shellbound.exactpoly import Poly, gegenbauer, shell_bound
from shellbound.lattice import builtin, enumerate_shell, inner

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def e8_shell():
    return enumerate_shell(builtin("e8"), 2)


class TestPairDistribution:
    def test_square(self):
        S = enumerate_shell(builtin("zn:2"), 1)
        dist = pair_distribution(S)
        assert dist.counts == {Fraction(-1): 4, Fraction(0): 8}
        assert dist.size == 4

    def test_e8_known_shell_structure(self, e8_shell):
        dist = pair_distribution(e8_shell)
        assert dist.counts == {
            Fraction(-1): 240,
            -HALF: 240 * 56,
            Fraction(0): 240 * 126,
            HALF: 240 * 56,
        }

    def test_total_is_ordered_pairs(self):
        for name, k in (("dn:4", 2), ("an:2", 2), ("zn:3", 2)):
            S = enumerate_shell(builtin(name), k)
            dist = pair_distribution(S)
            n_vec = len(S.vectors)
            assert sum(dist.counts.values()) == n_vec * (n_vec - 1)

    def test_threads_do_not_change_counts(self):
        S = enumerate_shell(builtin("zn:4"), 2)
        assert pair_distribution(S).counts == pair_distribution(S, threads=2).counts

    def test_empty_shell_rejected(self):
        S = enumerate_shell(builtin("zn:2"), 3)
        with pytest.raises(ValueError):
            pair_distribution(S)

    def test_matches_naive_count(self):
        S = enumerate_shell(builtin("an:3"), 2)
        L = S.lattice
        naive = {}
        for y in S.vectors:
            for z in S.vectors:
                if y == z:
                    continue
                u = Fraction(inner(L, y, z), S.k)
                naive[u] = naive.get(u, 0) + 1
        assert pair_distribution(S).counts == naive


class TestSpectrum:
    def test_cubic(self):
        S = enumerate_shell(builtin("zn:4"), 1)
        assert spectrum(S).values == (Fraction(-1), Fraction(0))

    def test_e8(self, e8_shell):
        assert spectrum(e8_shell).values == (Fraction(-1), -HALF, Fraction(0), HALF)

    def test_values_sorted(self):
        S = enumerate_shell(builtin("dn:4"), 2)
        vals = spectrum(S).values
        assert vals == tuple(sorted(vals))


class TestMomentSum:
    def test_never_negative(self, e8_shell):
        dist = pair_distribution(e8_shell)
        for i in range(1, 13):
            assert moment_sum(8, i, dist) >= 0

    def test_e8_vanishing_pattern(self, e8_shell):
        # harmonic moments vanish through degree 7 and not at degree 8
        dist = pair_distribution(e8_shell)
        for i in range(1, 8):
            assert moment_sum(8, i, dist) == 0
        assert moment_sum(8, 8, dist) > 0

    def test_odd_degrees_vanish_by_antipodality(self):
        S = enumerate_shell(builtin("dn:4"), 2)
        dist = pair_distribution(S)
        for i in (1, 3, 5, 7, 9):
            assert moment_sum(4, i, dist) == 0

    def test_matches_direct_double_sum(self):
        S = enumerate_shell(builtin("zn:3"), 2)
        L = S.lattice
        dist = pair_distribution(S)
        for i in range(1, 6):
            q = gegenbauer(3, i)
            direct = sum(
                q(Fraction(inner(L, y, z), S.k)) for y in S.vectors for z in S.vectors
            )
            assert moment_sum(3, i, dist) == direct

    def test_rejects_bad_arguments(self):
        S = enumerate_shell(builtin("zn:2"), 1)
        dist = pair_distribution(S)
        with pytest.raises(ValueError):
            moment_sum(1, 2, dist)
        with pytest.raises(ValueError):
            moment_sum(2, 0, dist)


class TestDesignStrength:
    def test_e8_tight_seven(self, e8_shell):
        report = design_strength(e8_shell)
        assert report.strength == 7
        assert report.tight
        assert not report.capped
        assert report.fisher == 240
        assert report.size == 240

    def test_square_is_tight_three(self):
        S = enumerate_shell(builtin("zn:2"), 1)
        report = design_strength(S)
        assert report.strength == 3
        assert report.tight

    def test_hexagon_is_tight_five(self):
        S = enumerate_shell(builtin("an:2"), 2)
        report = design_strength(S)
        assert report.strength == 5
        assert report.tight

    def test_d4_roots_are_five_design_not_tight(self):
        # frozen against a direct sphere-average moment check
        S = enumerate_shell(builtin("dn:4"), 2)
        report = design_strength(S)
        assert report.strength == 5
        assert not report.tight
        assert report.fisher == 20

    def test_capped_at_t_max(self):
        S = enumerate_shell(builtin("zn:2"), 1)
        report = design_strength(S, t_max=1)
        assert report.strength == 1
        assert report.capped

    def test_precomputed_distribution_matches(self, e8_shell):
        dist = pair_distribution(e8_shell)
        assert design_strength(e8_shell, distribution=dist) == design_strength(e8_shell)


class TestAntipodalBound:
    def test_e8_chain(self, e8_shell):
        # count <= antipodal bound at s distinct values <= shell bound at s = 2k
        s = len(spectrum(e8_shell).values)
        assert s == 4
        assert len(e8_shell.vectors) <= antipodal_bound(8, s) <= shell_bound(8, 2)
        assert antipodal_bound(8, 4) == 240

    @pytest.mark.parametrize("name,k", [("zn:4", 1), ("dn:4", 2), ("an:3", 2), ("zn:3", 3)])
    def test_chain_on_catalog(self, name, k):
        S = enumerate_shell(builtin(name), k)
        if not S.vectors:
            return
        s = len(spectrum(S).values)
        n = S.lattice.n
        assert s <= 2 * k
        assert len(S.vectors) <= antipodal_bound(n, s) <= shell_bound(n, k)


class TestAnnihilator:
    def test_e8(self, e8_shell):
        sp = spectrum(e8_shell)
        F = annihilator(sp)
        assert F(1) == 1
        for a in sp.values:
            assert F(a) == 0
        assert F.degree == 4

    def test_rejects_value_one(self):
        from shellbound.design import Spectrum

        with pytest.raises(ValueError):
            annihilator(Spectrum(k=2, values=(Fraction(0), Fraction(1))))

    def test_identity_cubic(self):
        L = builtin("zn:3")
        assert annihilator_identity_holds(L, 1)

    def test_identity_e8(self, e8_shell):
        assert annihilator_identity_holds(builtin("e8"), 2, shell=e8_shell)

    def test_identity_fails_off_equality(self):
        # hand check: left side has leading coefficient 80/3, right side 32
        assert not annihilator_identity_holds(builtin("dn:4"), 2)

    def test_identity_rejects_empty_shell(self):
        with pytest.raises(ValueError):
            annihilator_identity_holds(builtin("zn:2"), 3)
