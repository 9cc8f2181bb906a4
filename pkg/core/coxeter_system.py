"""
Coxeter systems and their elements in the standard geometric representation.

An element is stored as its exact matrix acting on root coordinates (the
basis of simple roots). Lengths, descents and canonical reduced words are
derived from sign tests on images of simple roots and memoized on the
system.
"""

from collections import deque
import logging
import math
from numbers import Integral
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.scalar import INF, Scalar, Sign, field_parameter, get_field, scalar_from_cos
from utils.bounded_cache import BoundedCache
from utils.config_manager import get_config
from utils.error_handler import (
    BudgetError,
    DomainError,
    InternalError,
    SystemMismatchError,
    UnsupportedError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class Root:
    """A vector in the simple-root basis, expected to be a root."""

    __slots__ = ("coordinates",)

    def __init__(self, coordinates: Iterable[Scalar]):
        self.coordinates = tuple(coordinates)

    def sign(self) -> Sign:
        """
        Sign of the root.

        Raises:
            InternalError: If the vector has mixed signs or is zero
        """
        positive = negative = False
        for value in self.coordinates:
            s = value.sign()
            if s is Sign.POSITIVE:
                positive = True
            elif s is Sign.NEGATIVE:
                negative = True
        if positive and negative:
            raise InternalError(f"Mixed-sign vector where a root was expected: {self}")
        if positive:
            return Sign.POSITIVE
        if negative:
            return Sign.NEGATIVE
        raise InternalError("Zero vector where a root was expected")

    @property
    def is_positive(self) -> bool:
        return self.sign() is Sign.POSITIVE

    def negate(self) -> "Root":
        return Root(-c for c in self.coordinates)

    def to_floats(self) -> List[float]:
        return [c.to_float() for c in self.coordinates]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Root):
            return NotImplemented
        return self.coordinates == other.coordinates

    def __hash__(self) -> int:
        return hash(self.coordinates)

    def __repr__(self) -> str:
        return "Root(" + ", ".join(f"{x:.6g}" for x in self.to_floats()) + ")"


class Element:
    """
    A group element given by its exact matrix.

    Elements are immutable; use the owning system for arithmetic
    or the ``*`` operator.
    """

    __slots__ = ("system", "matrix", "_key")

    def __init__(self, system: "CoxeterSystem", matrix: np.ndarray):
        self.system = system
        self.matrix = matrix
        self._key = None

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(value.key for value in self.matrix.flat)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: "Element") -> "Element":
        return self.system.multiply(self, other)

    def __repr__(self) -> str:
        return f"Element({self.label()})"

    @property
    def is_identity(self) -> bool:
        return self == self.system.identity

    def inverse(self) -> "Element":
        return self.system.inverse(self)

    def length(self) -> int:
        return self.system.length(self)

    def canonical_word(self) -> Word:
        return self.system.canonical_word(self)

    def label(self) -> str:
        """Compact label such as ``s1s2s1``; ``e`` for the identity."""
        word = self.canonical_word()
        return "".join(f"s{i}" for i in word) if word else "e"

    def word_string(self) -> str:
        """Space-separated canonical word; ``e`` for the identity."""
        word = self.canonical_word()
        return " ".join(str(i) for i in word) if word else "e"

    def shortlex_key(self) -> Tuple[int, Word]:
        word = self.canonical_word()
        return (len(word), word)

    def apply(self, root: Root) -> Root:
        """Image of a root (or any coordinate vector) under this element."""
        vector = np.empty(len(root.coordinates), dtype=object)
        vector[:] = root.coordinates
        return Root(self.matrix @ vector)

    def simple_root_image(self, i: int) -> Root:
        """w(alpha_i), the i-th column of the matrix (1-based index)."""
        self.system.check_index(i)
        return Root(self.matrix[:, i - 1])


class CoxeterSystem:
    """
    A Coxeter system (W, S) of finite rank with its geometric representation.

    Attributes:
        coxeter_matrix: Validated matrix as a tuple of tuples (INF for infinity)
        rank: Number of simple generators
        field: Cyclotomic field holding the bilinear form
        bilinear_form: Matrix B with B(alpha_s, alpha_t) = -cos(pi/m_st)
        simple_reflection_matrices: Matrices of the simple reflections
    """

    def __init__(self, coxeter_matrix: Sequence[Sequence], name: Optional[str] = None):
        self.coxeter_matrix = _validate_coxeter_matrix(coxeter_matrix)
        self.rank = len(self.coxeter_matrix)
        self.name = name or "W"

        n = self.rank
        entries = [self.coxeter_matrix[i][j] for i in range(n) for j in range(n) if i != j]
        self.field = get_field(field_parameter(entries))

        self.bilinear_form = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                if i == j:
                    self.bilinear_form[i, j] = self.field.one
                else:
                    self.bilinear_form[i, j] = scalar_from_cos(self.field, self.coxeter_matrix[i][j])

        # Row s of the simple reflection s_s reads delta_sj - 2 B_sj.
        self._reflection_coefficients: List[Dict[int, Scalar]] = []
        for s in range(n):
            row = {}
            for j in range(n):
                if j != s and not self.bilinear_form[s, j].is_zero:
                    row[j] = self.bilinear_form[s, j] * -2
            self._reflection_coefficients.append(row)

        self.identity = Element(self, self._identity_matrix())
        self.simple_reflection_matrices = []
        for s in range(n):
            matrix = self._identity_matrix()
            matrix[s, s] = -self.field.one
            for j, coeff in self._reflection_coefficients[s].items():
                matrix[s, j] = coeff
            self.simple_reflection_matrices.append(matrix)
        self.generators = tuple(Element(self, m) for m in self.simple_reflection_matrices)

        self._cache_size = get_config().get_int("search.cache_size")
        self._descent_cache = BoundedCache(self._cache_size)
        self._word_cache = BoundedCache(self._cache_size)
        self._reflection_cache = BoundedCache(self._cache_size)
        self._finite: Optional[bool] = None
        self._elements: Optional[List[Element]] = None
        # Memo tables of higher layers (reflection sets, reflection lengths).
        self._derived_caches: Dict[str, BoundedCache] = {}

        logger.debug(f"Built Coxeter system {self.name} of rank {n} over {self.field}")

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.name}, rank={self.rank})"

    def derived_cache(self, name: str) -> BoundedCache:
        """Named memo table for computations layered on this system."""
        if name not in self._derived_caches:
            self._derived_caches[name] = BoundedCache(self._cache_size)
        return self._derived_caches[name]

    def _identity_matrix(self) -> np.ndarray:
        n = self.rank
        matrix = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                matrix[i, j] = self.field.one if i == j else self.field.zero
        return matrix

    # -- elements -------------------------------------------------------

    def check_index(self, i: int):
        """Raise DomainError unless 1 <= i <= rank."""
        if not isinstance(i, Integral) or not 1 <= i <= self.rank:
            raise DomainError(f"Generator index {i!r} out of range 1..{self.rank}")

    def generator(self, i: int) -> Element:
        """Simple generator s_i (1-based)."""
        self.check_index(i)
        return self.generators[i - 1]

    def element_from_word(self, word: Iterable[int]) -> Element:
        """Product of simple reflections in word order."""
        matrix = self.identity.matrix
        for i in word:
            self.check_index(i)
            matrix = self._right_multiply_simple(matrix, i - 1)
        return Element(self, matrix)

    def _right_multiply_simple(self, matrix: np.ndarray, s: int) -> np.ndarray:
        # Only column s and the columns coupled to s change.
        result = matrix.copy()
        column = matrix[:, s]
        result[:, s] = -column
        for j, coeff in self._reflection_coefficients[s].items():
            result[:, j] = matrix[:, j] + column * coeff
        return result

    def _left_multiply_simple(self, s: int, matrix: np.ndarray) -> np.ndarray:
        result = matrix.copy()
        row = -matrix[s, :]
        for j, coeff in self._reflection_coefficients[s].items():
            row = row + matrix[j, :] * coeff
        result[s, :] = row
        return result

    def times_simple(self, w: Element, i: int) -> Element:
        """w * s_i."""
        self._check_same(w)
        self.check_index(i)
        return Element(self, self._right_multiply_simple(w.matrix, i - 1))

    def simple_times(self, i: int, w: Element) -> Element:
        """s_i * w."""
        self._check_same(w)
        self.check_index(i)
        return Element(self, self._left_multiply_simple(i - 1, w.matrix))

    def _check_same(self, *elements: Element):
        for element in elements:
            if element.system is not self:
                raise SystemMismatchError(
                    f"Element of {element.system.name} used with system {self.name}"
                )

    def multiply(self, a: Element, b: Element) -> Element:
        self._check_same(a, b)
        return Element(self, a.matrix @ b.matrix)

    def conjugate(self, u: Element, w: Element) -> Element:
        """u w u^-1."""
        return self.multiply(self.multiply(u, w), self.inverse(u))

    def equals(self, a: Element, b: Element) -> bool:
        self._check_same(a, b)
        return a.key == b.key

    def inverse(self, w: Element) -> Element:
        """Inverse via the reversed descent word."""
        self._check_same(w)
        matrix = self.identity.matrix
        for s in self._descent_letters(w):
            matrix = self._right_multiply_simple(matrix, s)
        return Element(self, matrix)

    def power(self, w: Element, k: int) -> Element:
        base = w if k >= 0 else self.inverse(w)
        result = self.identity
        for _ in range(abs(k)):
            result = self.multiply(result, base)
        return result

    # -- length and words -----------------------------------------------

    def _first_negative_column(self, matrix: np.ndarray) -> Optional[int]:
        for s in range(self.rank):
            if Root(matrix[:, s]).sign() is Sign.NEGATIVE:
                return s
        return None

    def _descent_letters(self, w: Element) -> Word:
        """
        Greedy right-descent letters (0-based) d_1, ..., d_k with
        w d_1 ... d_k = e, so that w = d_k ... d_1.
        """
        cached = self._descent_cache.get(w.key)
        if cached is not None:
            return cached
        letters = []
        matrix = w.matrix
        while True:
            s = self._first_negative_column(matrix)
            if s is None:
                break
            letters.append(s)
            matrix = self._right_multiply_simple(matrix, s)
        result = tuple(letters)
        self._descent_cache[w.key] = result
        return result

    def length(self, w: Element) -> int:
        """Number of positive roots sent negative."""
        self._check_same(w)
        return len(self._descent_letters(w))

    def canonical_word(self, w: Element) -> Word:
        """
        ShortLex-minimal reduced word of w (1-based letters).

        The descent recursion on w^-1 picks the smallest left descent of w
        at every step, so the emitted letters read w from left to right.
        """
        self._check_same(w)
        cached = self._word_cache.get(w.key)
        if cached is not None:
            return cached
        inverse = self.inverse(w)
        word = tuple(s + 1 for s in self._descent_letters(inverse))
        self._word_cache[w.key] = word
        return word

    def right_descents(self, w: Element) -> List[int]:
        self._check_same(w)
        return [
            s + 1 for s in range(self.rank)
            if Root(w.matrix[:, s]).sign() is Sign.NEGATIVE
        ]

    def left_descents(self, w: Element) -> List[int]:
        return self.right_descents(self.inverse(w))

    def reduced_words(self, w: Element) -> List[Word]:
        """All reduced words of w, sorted lexicographically."""
        self._check_same(w)
        memo: Dict[tuple, List[Word]] = {}

        def words_of(element: Element) -> List[Word]:
            if element.key in memo:
                return memo[element.key]
            descents = self.right_descents(element)
            if not descents:
                result = [()]
            else:
                result = []
                for s in descents:
                    shorter = Element(self, self._right_multiply_simple(element.matrix, s - 1))
                    result.extend(word + (s,) for word in words_of(shorter))
            memo[element.key] = result
            return result

        return sorted(words_of(w))

    def element_order(self, w: Element, budget: Optional[int] = None) -> int:
        """Multiplicative order of w; BudgetError beyond ``budget``."""
        if budget is None:
            budget = get_config().get_int("search.enumeration_budget")
        current = w
        for k in range(1, budget + 1):
            if current.is_identity:
                return k
            current = self.multiply(current, w)
        raise BudgetError(f"Order of {w.label()} exceeds {budget}")

    # -- reflections ----------------------------------------------------

    def _reflection_data(self, w: Element) -> Optional[Root]:
        if w.key in self._reflection_cache:
            return self._reflection_cache[w.key]
        root = self._find_reflection_root(w)
        self._reflection_cache[w.key] = root
        return root

    def _find_reflection_root(self, w: Element) -> Optional[Root]:
        if w.length() % 2 == 0 or not self.multiply(w, w).is_identity:
            return None
        conjugators = []
        current = w
        while current.length() > 1:
            target = current.length() - 2
            for s in range(self.rank):
                matrix = self._left_multiply_simple(s, self._right_multiply_simple(current.matrix, s))
                candidate = Element(self, matrix)
                if candidate.length() == target:
                    conjugators.append(s)
                    current = candidate
                    break
            else:
                return None
        # w = c_1 ... c_k r c_k ... c_1 with r simple
        r = current.canonical_word()[0] - 1
        u = self.identity.matrix
        for s in conjugators:
            u = self._right_multiply_simple(u, s)
        root = Root(u[:, r])
        if root.sign() is Sign.NEGATIVE:
            root = root.negate()
        return root

    def is_reflection(self, w: Element) -> bool:
        """Whether w is conjugate to a simple generator."""
        self._check_same(w)
        return self._reflection_data(w) is not None

    def reflection_root(self, t: Element) -> Root:
        """The positive root alpha with t = s_alpha."""
        self._check_same(t)
        root = self._reflection_data(t)
        if root is None:
            raise DomainError(f"{t.label()} is not a reflection")
        return root

    # -- global structure -----------------------------------------------

    def is_finite(self) -> bool:
        """W is finite iff B is positive definite (exact LDL^T pivots)."""
        if self._finite is None:
            n = self.rank
            work = [[self.bilinear_form[i, j] for j in range(n)] for i in range(n)]
            finite = True
            for k in range(n):
                pivot = work[k][k]
                if pivot.sign() is not Sign.POSITIVE:
                    finite = False
                    break
                for i in range(k + 1, n):
                    factor = work[i][k] / pivot
                    for j in range(k + 1, n):
                        work[i][j] = work[i][j] - factor * work[k][j]
            self._finite = finite
        return self._finite

    def enumerate_elements(self, budget: Optional[int] = None) -> List[Element]:
        """
        All elements of W by BFS from e, sorted ShortLex.

        Raises:
            BudgetError: If more than ``budget`` elements are reached; the
                partial list is attached
        """
        if self._elements is not None:
            return list(self._elements)
        if budget is None:
            budget = get_config().get_int("search.enumeration_budget")

        seen = {self.identity.key: self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for s in range(self.rank):
                v = Element(self, self._right_multiply_simple(w.matrix, s))
                if v.key not in seen:
                    seen[v.key] = v
                    if len(seen) > budget:
                        logger.warning(f"Element enumeration of {self.name} exceeded budget {budget}")
                        raise BudgetError(
                            f"Group {self.name} has more than {budget} elements",
                            partial=list(seen.values())
                        )
                    queue.append(v)

        self._elements = sorted(seen.values(), key=lambda e: e.shortlex_key())
        logger.info(f"Enumerated {len(self._elements)} elements of {self.name}")
        return list(self._elements)

    def group_order(self):
        """|W|, or INF for infinite systems."""
        if not self.is_finite():
            return INF
        return len(self.enumerate_elements())

    def longest_element(self) -> Element:
        if not self.is_finite():
            raise UnsupportedError(f"{self.name} is infinite and has no longest element")
        w = self.identity
        while True:
            ascents = [s for s in range(1, self.rank + 1) if s not in self.right_descents(w)]
            if not ascents:
                return w
            w = Element(self, self._right_multiply_simple(w.matrix, ascents[0] - 1))

    def random_element(self, rng: np.random.Generator, length: int) -> Element:
        """
        Random element of length at most ``length``, grown by random ascents.
        """
        w = self.identity
        for _ in range(length):
            descents = set(self.right_descents(w))
            ascents = [s for s in range(1, self.rank + 1) if s not in descents]
            if not ascents:
                break
            s = ascents[int(rng.integers(len(ascents)))]
            w = Element(self, self._right_multiply_simple(w.matrix, s - 1))
        return w


def _validate_coxeter_matrix(matrix: Sequence[Sequence]) -> Tuple[Tuple, ...]:
    try:
        rows = [list(row) for row in matrix]
    except TypeError as e:
        raise ValidationError(f"Coxeter matrix must be a sequence of rows: {e}")

    n = len(rows)
    if n < 1:
        raise ValidationError("Coxeter matrix must have rank at least 1")

    validated = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValidationError(f"Row {i + 1} has {len(row)} entries, expected {n}")
        clean = []
        for j, value in enumerate(row):
            if isinstance(value, float) and math.isinf(value) and value > 0:
                value = INF
            elif isinstance(value, Integral) and not isinstance(value, bool):
                value = int(value)
            else:
                raise ValidationError(f"Entry ({i + 1},{j + 1}) = {value!r} is not an integer or inf")
            if i == j and value != 1:
                raise ValidationError(f"Diagonal entry ({i + 1},{i + 1}) must be 1, got {value}")
            if i != j and value != INF and value < 2:
                raise ValidationError(f"Off-diagonal entry ({i + 1},{j + 1}) must be >= 2, got {value}")
            clean.append(value)
        validated.append(tuple(clean))

    for i in range(n):
        for j in range(i + 1, n):
            if validated[i][j] != validated[j][i]:
                raise ValidationError(
                    f"Coxeter matrix is not symmetric at ({i + 1},{j + 1}): "
                    f"{validated[i][j]} != {validated[j][i]}"
                )
    return tuple(validated)


def system_from_matrix(coxeter_matrix: Sequence[Sequence], name: Optional[str] = None) -> CoxeterSystem:
    """Build a Coxeter system from its Coxeter matrix."""
    return CoxeterSystem(coxeter_matrix, name=name)


def element_from_word(system: CoxeterSystem, word: Iterable[int]) -> Element:
    return system.element_from_word(word)


def multiply(a: Element, b: Element) -> Element:
    return a.system.multiply(a, b)


def inverse(a: Element) -> Element:
    return a.system.inverse(a)


def equals(a: Element, b: Element) -> bool:
    return a.system.equals(a, b)


def length(w: Element) -> int:
    return w.system.length(w)


def canonical_word(w: Element) -> Word:
    return w.system.canonical_word(w)


def is_reflection(w: Element) -> bool:
    return w.system.is_reflection(w)


def reflection_root(t: Element) -> Root:
    return t.system.reflection_root(t)
