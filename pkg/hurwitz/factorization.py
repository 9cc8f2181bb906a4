"""
Reflection factorizations, braid words and the Hurwitz action.

sigma_i sends (..., t_i, t_{i+1}, ...) to (..., t_i t_{i+1} t_i, t_i, ...)
and its inverse sends it to (..., t_{i+1}, t_{i+1} t_i t_{i+1}, ...). A
braid word is stored in written order and acts rightmost letter first.
"""

from collections import deque
from dataclasses import dataclass
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from core.coxeter_system import CoxeterSystem, Element
from utils.config_manager import get_config
from utils.error_handler import ContractError, DomainError, PartialOrbitError, SystemMismatchError

logger = logging.getLogger(__name__)


class Factorization:
    """
    Ordered tuple of reflections with its cached product.

    Args:
        reflections: The factors t_1, ..., t_n
        system: Owning system (required only for the empty tuple)
        check: Verify that every factor is a reflection
    """

    __slots__ = ("system", "reflections", "_product", "_key")

    def __init__(
        self,
        reflections: Iterable[Element],
        system: Optional[CoxeterSystem] = None,
        check: bool = True,
        product: Optional[Element] = None
    ):
        reflections = tuple(reflections)
        if system is None:
            if not reflections:
                raise ContractError("system is given for an empty factorization")
            system = reflections[0].system
        for t in reflections:
            if t.system is not system:
                raise SystemMismatchError()
            if check and not system.is_reflection(t):
                raise DomainError(f"Factor {t.label()} is not a reflection")
        self.system = system
        self.reflections = reflections
        self._product = product
        self._key = None

    @property
    def product(self) -> Element:
        if self._product is None:
            w = self.system.identity
            for t in self.reflections:
                w = w * t
            self._product = w
        return self._product

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(t.key for t in self.reflections)
        return self._key

    def __len__(self) -> int:
        return len(self.reflections)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.reflections)

    def __getitem__(self, i):
        return self.reflections[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Factorization):
            return NotImplemented
        return self.system is other.system and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return "Factorization(" + ", ".join(self.labels()) + ")"

    def labels(self) -> List[str]:
        return [t.label() for t in self.reflections]

    def words(self) -> List[Tuple[int, ...]]:
        return [t.canonical_word() for t in self.reflections]

    def shortlex_key(self) -> tuple:
        return tuple(t.shortlex_key() for t in self.reflections)

    def replace(self, reflections: Sequence[Element]) -> "Factorization":
        """Same-product factorization with new entries (no reflection check)."""
        return Factorization(reflections, self.system, check=False, product=self._product)


class BraidLetter(NamedTuple):
    """sigma_index ** sign."""

    index: int
    sign: int

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.index, -self.sign)

    def to_int(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    """
    Word in sigma_1, ..., sigma_{n-1} and inverses, in written order.

    ``apply_braid`` applies the rightmost letter first, so the written word
    sigma_1 sigma_2 acts as sigma_2 followed by sigma_1.
    """

    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter.index < 1 or letter.sign not in (1, -1):
                raise ContractError("braid letters are sigma_i^(+-1) with i >= 1", repr(letter))

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def from_written(cls, letters: Iterable[Tuple[int, int]]) -> "BraidWord":
        return cls(tuple(BraidLetter(i, s) for i, s in letters))

    @classmethod
    def from_application_order(cls, letters: Iterable[Tuple[int, int]]) -> "BraidWord":
        return cls(tuple(reversed([BraidLetter(i, s) for i, s in letters])))

    @classmethod
    def from_signed_ints(cls, values: Iterable[int]) -> "BraidWord":
        """Signed integers in application order (``-2`` is sigma_2 inverse)."""
        letters = []
        for v in values:
            if v == 0:
                raise ContractError("braid letters are nonzero integers")
            letters.append((abs(v), 1 if v > 0 else -1))
        return cls.from_application_order(letters)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse application-order signed integers; ``e`` or blank is empty."""
        text = text.strip()
        if text in ("", "e"):
            return cls()
        try:
            values = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise ContractError("braid word is a list of signed integers", text)
        return cls.from_signed_ints(values)

    def application_order(self) -> List[BraidLetter]:
        return list(reversed(self.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def compose(self, other: "BraidWord") -> "BraidWord":
        """The braid ``self * other``: ``other`` acts first."""
        return BraidWord(self.letters + other.letters)

    def cancel_adjacent(self) -> "BraidWord":
        """Remove adjacent sigma_i sigma_i^-1 pairs."""
        stack: List[BraidLetter] = []
        for letter in self.letters:
            if stack and stack[-1] == letter.inverse():
                stack.pop()
            else:
                stack.append(letter)
        return BraidWord(tuple(stack))

    def max_index(self) -> int:
        return max((letter.index for letter in self.letters), default=0)

    def to_string(self) -> str:
        """Application order as signed integers; ``e`` when empty."""
        if not self.letters:
            return "e"
        return " ".join(str(letter.to_int()) for letter in self.application_order())

    def to_sigma_notation(self) -> str:
        """Written order, e.g. ``s1 s2^-1``."""
        if not self.letters:
            return "1"
        return " ".join(
            f"s{letter.index}" + ("" if letter.sign > 0 else "^-1") for letter in self.letters
        )

    def to_list(self) -> List[int]:
        return [letter.to_int() for letter in self.application_order()]


@dataclass(frozen=True)
class InsertionPermutation:
    """Permutation [pi_1, ..., pi_n] of 1..n."""

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ContractError("permutation is a bijection of 1..n", str(list(self.values)))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.values))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.values) + "]"


def apply_sigma(f: Factorization, i: int, sign: int = 1) -> Factorization:
    """
    Apply sigma_i (sign +1) or its inverse (sign -1).

    Raises:
        DomainError: If i is not in 1..n-1
    """
    n = len(f)
    if not 1 <= i <= n - 1:
        raise DomainError(f"Braid index {i} out of range 1..{n - 1}")
    if sign not in (1, -1):
        raise ContractError("sign is +1 or -1", f"got {sign}")

    entries = list(f.reflections)
    a, b = entries[i - 1], entries[i]
    if sign == 1:
        entries[i - 1], entries[i] = a * b * a, a
    else:
        entries[i - 1], entries[i] = b, b * a * b
    return f.replace(entries)


def apply_braid(f: Factorization, braid: BraidWord) -> Factorization:
    """Apply a braid word, rightmost letter first."""
    if braid.max_index() > len(f) - 1 and braid.letters:
        raise DomainError(f"Braid uses sigma_{braid.max_index()} on a tuple of length {len(f)}")
    for letter in braid.application_order():
        f = apply_sigma(f, letter.index, letter.sign)
    return f


def hurwitz_orbit(f: Factorization, budget: Optional[int] = None) -> FrozenSet[Factorization]:
    """
    Orbit of f under all sigma_i and their inverses.

    Raises:
        PartialOrbitError: If the orbit exceeds ``budget``; ``partial``
            holds the tuples found so far
    """
    if budget is None:
        budget = get_config().get_int("search.orbit_budget")
    if budget < 1:
        raise ContractError("budget >= 1", f"got {budget}")

    seen = {f}
    queue = deque([f])
    while queue:
        g = queue.popleft()
        for i in range(1, len(g)):
            for sign in (1, -1):
                h = apply_sigma(g, i, sign)
                if h in seen:
                    continue
                seen.add(h)
                if len(seen) > budget:
                    logger.warning(f"Hurwitz orbit exceeded budget {budget}")
                    raise PartialOrbitError(
                        f"Hurwitz orbit of {f} has more than {budget} elements",
                        partial=frozenset(seen)
                    )
                queue.append(h)

    logger.info(f"Hurwitz orbit of {f}: {len(seen)} factorizations")
    return frozenset(seen)


def sorted_orbit(orbit: Iterable[Factorization]) -> List[Factorization]:
    """Factorizations in ShortLex order of their entries."""
    return sorted(orbit, key=lambda g: g.shortlex_key())


def sigma_power_chain(f: Factorization, k_range: Iterable[int], index: int = 1) -> Dict[int, Factorization]:
    """sigma_index ** k applied to f, for each k in k_range."""
    chain = {}
    for k in k_range:
        g = f
        for _ in range(abs(k)):
            g = apply_sigma(g, index, 1 if k > 0 else -1)
        chain[k] = g
    return chain
