"""
Unit tests for factorizations, braid words and the Hurwitz action.
"""

import numpy as np
import pytest

from core.reflections import enumerate_reflections, subgroup_closure
from core.standard_types import standard_system
from hurwitz.factorization import (
    BraidWord,
    Factorization,
    InsertionPermutation,
    apply_braid,
    apply_sigma,
    hurwitz_orbit,
    sigma_power_chain,
    sorted_orbit,
)
from utils.error_handler import ContractError, DomainError, PartialOrbitError


def _factorization(system, *words):
    return Factorization([system.element_from_word(w) for w in words], system)


class TestFactorization:
    """Test the factorization container."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = standard_system("A2")

    def test_product(self):
        f = _factorization(self.a2, (1, 2, 1), (1,))
        assert f.product == self.a2.element_from_word([1, 2])
        assert f.labels() == ["s1s2s1", "s1"]
        assert f.words() == [(1, 2, 1), (1,)]

    def test_entries_must_be_reflections(self):
        with pytest.raises(DomainError):
            _factorization(self.a2, (1, 2))

    def test_empty_needs_system(self):
        assert Factorization((), self.a2).product.is_identity
        with pytest.raises(ContractError):
            Factorization(())

    def test_equality_and_hash(self):
        f = _factorization(self.a2, (1,), (2,))
        g = _factorization(self.a2, (1,), (2,))
        assert f == g
        assert len({f, g}) == 1
        assert f != _factorization(self.a2, (2,), (1,))


class TestBraidWord:
    """Test braid words and their orders."""

    def test_application_order(self):
        """Written sigma_1 sigma_2 is applied as sigma_2 then sigma_1."""
        braid = BraidWord.from_written([(1, 1), (2, 1)])
        assert braid.to_string() == "2 1"
        assert braid.to_list() == [2, 1]
        assert braid.to_sigma_notation() == "s1 s2"

    def test_parse(self):
        assert BraidWord.parse("2 -1") == BraidWord.from_signed_ints([2, -1])
        assert BraidWord.parse("e") == BraidWord()
        assert BraidWord().to_string() == "e"

    def test_parse_errors(self):
        with pytest.raises(ContractError):
            BraidWord.parse("a b")
        with pytest.raises(ContractError):
            BraidWord.parse("0")

    def test_inverse_and_cancel(self):
        braid = BraidWord.parse("1 -2 3")
        assert braid.compose(braid.inverse()).cancel_adjacent() == BraidWord()

    def test_compose_order(self):
        """In a.compose(b), b acts first."""
        a = BraidWord.parse("1")
        b = BraidWord.parse("2")
        assert a.compose(b).to_list() == [2, 1]


class TestInsertionPermutation:
    """Test permutation validation."""

    def test_valid(self):
        pi = InsertionPermutation((2, 5, 3, 1, 4))
        assert str(pi) == "[2,5,3,1,4]"
        assert not pi.is_identity
        assert InsertionPermutation((1, 2, 3)).is_identity

    def test_not_a_bijection(self):
        with pytest.raises(ContractError):
            InsertionPermutation((1, 1, 3))


class TestHurwitzAction:
    """Test sigma_i on tuples of reflections."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = standard_system("A2")
        self.f = _factorization(self.a2, (1,), (2,))

    def test_sigma(self):
        """sigma_1 (s1, s2) = (s1s2s1, s1)."""
        assert apply_sigma(self.f, 1) == _factorization(self.a2, (1, 2, 1), (1,))
        assert apply_sigma(self.f, 1, -1) == _factorization(self.a2, (2,), (2, 1, 2))

    def test_sigma_inverse(self):
        assert apply_sigma(apply_sigma(self.f, 1), 1, -1) == self.f

    def test_product_is_invariant(self):
        g = apply_sigma(self.f, 1)
        assert g.product == self.f.product

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            apply_sigma(self.f, 2)

    def test_empty_braid(self):
        assert apply_braid(self.f, BraidWord()) == self.f

    def test_a5_braid(self):
        """sigma1 sigma2 sigma4 sigma3 sigma2 sorts a directed-path factorization."""
        a5 = standard_system("A5")
        f = _factorization(a5, (2,), (5,), (5, 3, 5), (5, 3, 2, 1, 2, 3, 5), (5, 4, 5))
        braid = BraidWord.from_written([(1, 1), (2, 1), (4, 1), (3, 1), (2, 1)])
        assert apply_braid(f, braid) == Factorization(a5.generators, a5)

    def test_braid_relation(self):
        """sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 on triples."""
        a3 = standard_system("A3")
        f = Factorization(a3.generators, a3)
        left = apply_braid(f, BraidWord.parse("1 2 1"))
        right = apply_braid(f, BraidWord.parse("2 1 2"))
        assert left == right


class TestHurwitzOrbit:
    """Test orbit enumeration."""

    def test_a2_orbit(self):
        """Three factorizations of s1 s2."""
        a2 = standard_system("A2")
        orbit = hurwitz_orbit(_factorization(a2, (1,), (2,)))
        assert orbit == {
            _factorization(a2, (1,), (2,)),
            _factorization(a2, (2,), (2, 1, 2)),
            _factorization(a2, (1, 2, 1), (1,)),
        }

    def test_single_reflection(self):
        """B_1 is trivial."""
        a2 = standard_system("A2")
        f = _factorization(a2, (1, 2, 1))
        assert hurwitz_orbit(f) == {f}

    def test_i2_5_orbit(self):
        """All five pairs of reflections with product s1 s2."""
        system = standard_system("I2(5)")
        f = Factorization(system.generators, system)
        orbit = hurwitz_orbit(f)
        reflections = enumerate_reflections(system).reflections
        pairs = {
            Factorization((a, b), system)
            for a in reflections for b in reflections if a * b == f.product
        }
        assert len(orbit) == 5
        assert orbit == pairs

    def test_budget(self):
        """The infinite dihedral orbit is cut off with the partial set."""
        system = standard_system("I2(inf)")
        f = Factorization(system.generators, system)
        with pytest.raises(PartialOrbitError) as info:
            hurwitz_orbit(f, budget=15)
        assert len(info.value.partial) == 16
        assert all(g.product == f.product for g in info.value.partial)

    def test_sorted_orbit(self):
        a2 = standard_system("A2")
        ordered = sorted_orbit(hurwitz_orbit(_factorization(a2, (1,), (2,))))
        assert [g.labels() for g in ordered] == [
            ["s1", "s2"], ["s2", "s1s2s1"], ["s1s2s1", "s1"]
        ]

    def test_sigma_power_chain(self):
        """sigma_1 cycles through the A2 orbit with period 3."""
        a2 = standard_system("A2")
        f = _factorization(a2, (1,), (2,))
        chain = sigma_power_chain(f, range(0, 4))
        assert chain[0] == f
        assert chain[3] == f
        assert len({chain[0], chain[1], chain[2]}) == 3


def _random_tuple(system, rng, reflections, n):
    return Factorization([reflections[int(k)] for k in rng.integers(0, len(reflections), size=n)], system)


class TestBraidRelations:
    """Braid group relations on random reflection tuples."""

    def setup_method(self):
        """Set up test fixtures."""
        self.h3 = standard_system("H3")
        self.reflections = enumerate_reflections(self.h3).reflections
        self.rng = np.random.default_rng(23)

    def samples(self, n=4, count=15):
        return [_random_tuple(self.h3, self.rng, self.reflections, n) for _ in range(count)]

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_adjacent_generators(self, i):
        """sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}."""
        left = BraidWord.from_written([(i, 1), (i + 1, 1), (i, 1)])
        right = BraidWord.from_written([(i + 1, 1), (i, 1), (i + 1, 1)])
        for f in self.samples(n=5):
            assert apply_braid(f, left) == apply_braid(f, right)

    def test_far_generators_commute(self):
        """sigma_1 sigma_3 = sigma_3 sigma_1."""
        left = BraidWord.from_written([(1, 1), (3, 1)])
        right = BraidWord.from_written([(3, 1), (1, 1)])
        for f in self.samples():
            assert apply_braid(f, left) == apply_braid(f, right)

    def test_inverse_letters_cancel(self):
        for f in self.samples():
            for i in (1, 2, 3):
                assert apply_sigma(apply_sigma(f, i), i, -1) == f
                assert apply_sigma(apply_sigma(f, i, -1), i) == f

    def test_mixed_sign_relation(self):
        """sigma_1^-1 sigma_2^-1 sigma_1^-1 = sigma_2^-1 sigma_1^-1 sigma_2^-1."""
        left = BraidWord.from_written([(1, -1), (2, -1), (1, -1)])
        right = BraidWord.from_written([(2, -1), (1, -1), (2, -1)])
        for f in self.samples(n=3):
            assert apply_braid(f, left) == apply_braid(f, right)

    def test_product_is_invariant(self):
        for f in self.samples():
            for i in (1, 2, 3):
                assert apply_sigma(f, i).product == f.product
                assert apply_sigma(f, i, -1).product == f.product


class TestGeneratedSubgroup:
    """The Hurwitz action keeps the subgroup generated by the entries."""

    def test_subgroup_is_invariant(self):
        b3 = standard_system("B3")
        reflections = enumerate_reflections(b3).reflections
        rng = np.random.default_rng(29)
        for _ in range(10):
            f = _random_tuple(b3, rng, reflections, 3)
            keys = subgroup_closure(f.reflections).element_keys()
            for i in (1, 2):
                for sign in (1, -1):
                    g = apply_sigma(f, i, sign)
                    assert subgroup_closure(g.reflections).element_keys() == keys


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
