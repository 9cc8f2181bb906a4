"""
Unit tests for Coxeter systems and elements.

Tests matrix validation, words, lengths, reflections and finiteness.
"""

from fractions import Fraction

import numpy as np
import pytest

from core.coxeter_system import Root, system_from_matrix
from core.scalar import INF
from core.standard_types import coxeter_matrix, standard_system
from utils.config_manager import ConfigManager, set_config
from utils.error_handler import (
    BudgetError,
    DomainError,
    SystemMismatchError,
    UnsupportedError,
    ValidationError,
)


class TestSystemFromMatrix:
    """Test construction and validation."""

    def test_a2_bilinear_form(self):
        """B(alpha1, alpha2) = -1/2 in A2."""
        system = system_from_matrix([[1, 3], [3, 1]])
        assert system.bilinear_form[0, 1] == Fraction(-1, 2)
        assert system.bilinear_form[0, 0] == 1

    def test_i2_5_field(self):
        """I2(5) needs the field with L = 5."""
        system = system_from_matrix([[1, 5], [5, 1]])
        assert system.field.L == 5

    def test_a3_is_integral(self):
        """Simply laced systems stay on the rational fast path."""
        system = standard_system("A3")
        assert system.field.is_rational
        for matrix in system.simple_reflection_matrices:
            for value in matrix.flat:
                assert value.coefficients[0].denominator == 1

    def test_asymmetric_matrix(self):
        """Asymmetric matrices are rejected."""
        with pytest.raises(ValidationError):
            system_from_matrix([[1, 3], [4, 1]])

    def test_small_off_diagonal_entry(self):
        """Off-diagonal entries must be at least 2."""
        with pytest.raises(ValidationError):
            system_from_matrix([[1, 1], [1, 1]])

    def test_bad_diagonal(self):
        """Diagonal entries must be 1."""
        with pytest.raises(ValidationError):
            system_from_matrix([[2, 3], [3, 1]])

    def test_non_integer_entry(self):
        """Entries are integers or inf."""
        with pytest.raises(ValidationError):
            system_from_matrix([[1, 2.5], [2.5, 1]])

    def test_infinite_entry(self):
        """inf is accepted off the diagonal."""
        system = system_from_matrix([[1, INF], [INF, 1]])
        assert system.bilinear_form[0, 1] == -1


class TestStandardTypes:
    """Test named Coxeter matrices."""

    def test_type_names(self):
        """Dynkin diagrams translate to Coxeter matrices."""
        assert coxeter_matrix("A2") == [[1, 3], [3, 1]]
        assert coxeter_matrix("B2") == [[1, 4], [4, 1]]
        assert coxeter_matrix("I2(7)") == [[1, 7], [7, 1]]
        assert coxeter_matrix("H3")[0][1] == 5

    def test_affine_a2(self):
        """A~2 is a triangle of 3s."""
        assert coxeter_matrix("A~2") == [[1, 3, 3], [3, 1, 3], [3, 3, 1]]

    def test_unknown_type(self):
        """Unknown names are a validation error."""
        with pytest.raises(ValidationError):
            coxeter_matrix("Z9")


class TestElements:
    """Test words, multiplication and lengths."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = standard_system("A2")

    def test_empty_word(self):
        """The empty word is the identity."""
        assert self.a2.element_from_word([]).is_identity

    def test_involution(self):
        """s1 s1 = e."""
        assert self.a2.element_from_word([1, 1]).is_identity

    def test_braid_relation(self):
        """s1 s2 s1 = s2 s1 s2 in A2."""
        assert self.a2.element_from_word([1, 2, 1]) == self.a2.element_from_word([2, 1, 2])

    def test_multiply_and_inverse(self):
        """(s1 s2)^-1 = s2 s1 and w w^-1 = e."""
        w = self.a2.element_from_word([1, 2])
        assert w.inverse() == self.a2.element_from_word([2, 1])
        assert (w * w.inverse()).is_identity
        assert self.a2.equals(w * w * w, self.a2.identity)

    def test_length_and_canonical_word(self):
        """Canonical words are ShortLex-minimal reduced words."""
        w = self.a2.element_from_word([2, 1, 2])
        assert w.length() == 3
        assert w.canonical_word() == (1, 2, 1)
        assert self.a2.element_from_word([2, 1, 1, 2]).canonical_word() == ()
        assert self.a2.element_from_word([2, 1]).label() == "s2s1"
        assert self.a2.identity.word_string() == "e"

    def test_reduced_words(self):
        """The longest element of A2 has two reduced words."""
        w = self.a2.element_from_word([1, 2, 1])
        assert self.a2.reduced_words(w) == [(1, 2, 1), (2, 1, 2)]

    def test_descents(self):
        """Right and left descents of s1 s2."""
        w = self.a2.element_from_word([1, 2])
        assert self.a2.right_descents(w) == [2]
        assert self.a2.left_descents(w) == [1]

    def test_matrix_multiplication_matches_words(self):
        """Matrix product equals concatenation of words."""
        b3 = standard_system("B3")
        u = b3.element_from_word([1, 2, 3])
        v = b3.element_from_word([2, 1])
        assert u * v == b3.element_from_word([1, 2, 3, 2, 1])
        assert b3.times_simple(u, 2) == b3.element_from_word([1, 2, 3, 2])
        assert b3.simple_times(2, u) == b3.element_from_word([2, 1, 2, 3])

    def test_index_out_of_range(self):
        """Generator indices are 1..rank."""
        with pytest.raises(DomainError):
            self.a2.element_from_word([3])
        with pytest.raises(DomainError):
            self.a2.generator(0)

    def test_mixed_systems(self):
        """Elements of different systems cannot be multiplied."""
        other = standard_system("A2")
        with pytest.raises(SystemMismatchError):
            self.a2.generator(1) * other.generator(1)

    def test_element_order(self):
        """s1 s2 has order m_12."""
        assert self.a2.element_order(self.a2.element_from_word([1, 2])) == 3
        h3 = standard_system("H3")
        assert h3.element_order(h3.element_from_word([1, 2])) == 5

    def test_element_order_budget(self):
        """Infinite order exhausts the budget."""
        system = standard_system("I2(inf)")
        with pytest.raises(BudgetError):
            system.element_order(system.element_from_word([1, 2]), budget=50)

    def test_power(self):
        """Negative powers invert."""
        w = self.a2.element_from_word([1, 2])
        assert self.a2.power(w, -1) == w.inverse()
        assert self.a2.power(w, 3).is_identity


class TestReflections:
    """Test the reflection test and roots."""

    def setup_method(self):
        """Set up test fixtures."""
        self.a2 = standard_system("A2")
        self.one = self.a2.field.one
        self.zero = self.a2.field.zero

    def test_simple_reflection(self):
        """s1 is a reflection with root alpha1."""
        s1 = self.a2.generator(1)
        assert self.a2.is_reflection(s1)
        assert self.a2.reflection_root(s1) == Root([self.one, self.zero])

    def test_even_length(self):
        """s1 s2 is not a reflection."""
        assert not self.a2.is_reflection(self.a2.element_from_word([1, 2]))

    def test_longest_element_of_a2(self):
        """s1 s2 s1 reflects in alpha1 + alpha2."""
        t = self.a2.element_from_word([1, 2, 1])
        assert self.a2.is_reflection(t)
        assert self.a2.reflection_root(t) == Root([self.one, self.one])

    def test_reflection_root_of_non_reflection(self):
        """reflection_root rejects non-reflections."""
        with pytest.raises(DomainError):
            self.a2.reflection_root(self.a2.identity)

    def test_reflection_acts_as_reflection(self):
        """t sends its root to its negative."""
        h3 = standard_system("H3")
        t = h3.element_from_word([1, 2, 1])
        root = h3.reflection_root(t)
        assert root.is_positive
        assert t.apply(root) == root.negate()

    def test_odd_involution_that_is_not_a_reflection(self):
        """The longest element of B3 is -1, not a reflection."""
        b3 = standard_system("B3")
        w0 = b3.longest_element()
        assert w0.length() == 9
        assert (w0 * w0).is_identity
        assert not b3.is_reflection(w0)


class TestGlobalStructure:
    """Test finiteness, enumeration and longest elements."""

    @pytest.mark.parametrize("name,order", [
        ("A2", 6), ("B2", 8), ("I2(5)", 10), ("A3", 24), ("B3", 48), ("H3", 120),
    ])
    def test_group_order(self, name, order):
        """Orders of small finite groups."""
        assert standard_system(name).group_order() == order

    @pytest.mark.parametrize("name", ["I2(inf)", "A~2"])
    def test_infinite(self, name):
        """Affine and infinite dihedral groups are infinite."""
        system = standard_system(name)
        assert not system.is_finite()
        assert system.group_order() == INF
        with pytest.raises(UnsupportedError):
            system.longest_element()

    def test_enumeration_budget(self):
        """Enumerating an infinite group raises with the partial list."""
        system = standard_system("A~2")
        with pytest.raises(BudgetError) as info:
            system.enumerate_elements(budget=30)
        assert len(info.value.partial) > 30

    def test_enumeration_is_shortlex(self):
        """Elements come sorted by length, then lexicographically."""
        elements = standard_system("A2").enumerate_elements()
        assert [w.canonical_word() for w in elements] == [
            (), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)
        ]

    @pytest.mark.parametrize("name,length", [("A3", 6), ("B3", 9), ("H3", 15), ("I2(7)", 7)])
    def test_longest_element(self, name, length):
        """l(w0) is the number of reflections."""
        assert standard_system(name).longest_element().length() == length

    def test_random_element(self):
        """Random elements have bounded length."""
        system = standard_system("A~2")
        rng = np.random.default_rng(7)
        for _ in range(20):
            assert system.random_element(rng, 5).length() == 5


class TestLengthInvariants:
    """Exchange-type identities over whole groups and random samples."""

    @pytest.mark.parametrize("name", ["B3", "H3"])
    def test_length_changes_by_one(self, name):
        """l(ws) = l(w) - 1 exactly when s is a right descent, else l(w) + 1."""
        system = standard_system(name)
        for w in system.enumerate_elements():
            descents = set(system.right_descents(w))
            for s in range(1, system.rank + 1):
                expected = w.length() - 1 if s in descents else w.length() + 1
                assert system.times_simple(w, s).length() == expected

    def test_left_descents_shorten_from_the_left(self):
        system = standard_system("B3")
        for w in system.enumerate_elements():
            for s in system.left_descents(w):
                assert system.simple_times(s, w).length() == w.length() - 1

    @pytest.mark.parametrize("name", ["H3", "A~2", "I2(inf)"])
    def test_random_conjugates_are_reflections(self, name):
        system = standard_system(name)
        rng = np.random.default_rng(17)
        for _ in range(25):
            u = system.random_element(rng, int(rng.integers(0, 7)))
            s = system.generator(int(rng.integers(1, system.rank + 1)))
            t = system.conjugate(u, s)
            assert system.is_reflection(t)
            assert t.length() % 2 == 1
            assert system.reflection_root(t).is_positive


class TestBoundedCaches:
    """Per-system memo tables respect ``search.cache_size``."""

    def teardown_method(self):
        set_config(None)

    def test_word_cache_is_capped(self):
        config = ConfigManager(use_environment=False)
        config.set("search.cache_size", 5)
        set_config(config)
        system = standard_system("A3")
        words = {w.canonical_word() for w in system.enumerate_elements()}
        assert len(words) == 24
        assert system.derived_cache("reflection_length").maxsize == 5
        assert len(system._word_cache) <= 5
        assert len(system._descent_cache) <= 5
        # Evicted entries are recomputed, not lost.
        assert system.longest_element().canonical_word() == (1, 2, 1, 3, 2, 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
