"""
Reflections, reflection length and reflection subgroups.

Reflection length uses the deletion characterization: l_T(w) is the least
number of letters of a reduced word of w whose removal leaves a word for e.
"""

from collections import deque
from dataclasses import dataclass, field
import logging
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from core.coxeter_system import CoxeterSystem, Element, Root
from core.scalar import Sign
from utils.config_manager import get_config
from utils.error_handler import (
    BudgetError,
    ContractError,
    DomainError,
    SystemMismatchError,
    UnsupportedError,
)

logger = logging.getLogger(__name__)

FULL = "full"
DEPTH_BOUNDED = "depth_bounded"


def shortlex_sorted(elements: Iterable[Element]) -> List[Element]:
    return sorted(elements, key=lambda e: e.shortlex_key())


@dataclass(frozen=True)
class ReflectionSet:
    """
    Reflections of a system, sorted ShortLex.

    Attributes:
        reflections: The reflections
        completeness: ``FULL`` for all of T, ``DEPTH_BOUNDED`` otherwise
        depth: Length bound used for a depth-bounded set
    """

    system: CoxeterSystem
    reflections: Tuple[Element, ...]
    completeness: str = FULL
    depth: Optional[int] = None
    _keys: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_keys", frozenset(t.key for t in self.reflections))

    def __len__(self) -> int:
        return len(self.reflections)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.reflections)

    def __contains__(self, w: Element) -> bool:
        return w.key in self._keys

    @property
    def is_full(self) -> bool:
        return self.completeness == FULL


@dataclass(frozen=True)
class ReflectionSubgroup:
    """
    Subgroup W' generated by reflections.

    Attributes:
        generators: Generating reflections
        elements: Enumerated elements (ShortLex), partial if not ``complete``
        reflection_set: T' = T intersected with W'
        canonical_simples: Simple system induced by the ambient positive roots
        complete: Whether the enumeration finished within budget
    """

    system: CoxeterSystem
    generators: Tuple[Element, ...]
    elements: Tuple[Element, ...]
    reflection_set: Tuple[Element, ...]
    canonical_simples: Optional[Tuple[Element, ...]]
    complete: bool = True
    _keys: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_keys", frozenset(w.key for w in self.elements))

    def contains(self, w: Element) -> bool:
        return w.key in self._keys

    __contains__ = contains

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_keys(self) -> frozenset:
        return self._keys

    def rank(self) -> int:
        return len(self.canonical_simples or ())


def enumerate_reflections(system: CoxeterSystem, depth: Optional[int] = None) -> ReflectionSet:
    """
    Close the simple generators under conjugation by simple generators.

    Args:
        system: The Coxeter system
        depth: Keep only reflections of length <= depth (required when W
            is infinite)

    Returns:
        ReflectionSet sorted ShortLex

    Raises:
        BudgetError: If W is infinite and no depth was given, or the
            closure budget is exceeded
    """
    finite = system.is_finite()
    if not finite and depth is None:
        raise BudgetError(f"{system.name} is infinite; a depth bound is required to enumerate reflections")

    cache = system.derived_cache("reflection_sets")
    cache_key = depth
    if cache_key in cache:
        return cache[cache_key]

    budget = get_config().get_int("search.closure_budget")
    seen: Dict[tuple, Element] = {}
    queue = deque()
    for s in system.generators:
        if depth is None or depth >= 1:
            seen[s.key] = s
            queue.append(s)

    while queue:
        t = queue.popleft()
        for i in range(1, system.rank + 1):
            u = system.simple_times(i, system.times_simple(t, i))
            if u.key in seen:
                continue
            if depth is not None and u.length() > depth:
                continue
            seen[u.key] = u
            if len(seen) > budget:
                raise BudgetError(
                    f"More than {budget} reflections in {system.name}",
                    partial=list(seen.values())
                )
            queue.append(u)

    completeness = FULL if finite and (depth is None or not _has_longer(system, seen, depth)) else DEPTH_BOUNDED
    result = ReflectionSet(
        system=system,
        reflections=tuple(shortlex_sorted(seen.values())),
        completeness=completeness,
        depth=depth,
    )
    cache[cache_key] = result
    logger.debug(f"Enumerated {len(result)} reflections of {system.name} ({completeness}, depth={depth})")
    return result


def _has_longer(system: CoxeterSystem, found: Dict[tuple, Element], depth: int) -> bool:
    # A finite closure cut at depth is full iff nothing beyond the cut exists.
    for t in found.values():
        for i in range(1, system.rank + 1):
            u = system.simple_times(i, system.times_simple(t, i))
            if u.key not in found and u.length() > depth:
                return True
    return False


def reflection_length(
    w: Element,
    reduced_word: Optional[Sequence[int]] = None,
    budget: Optional[int] = None
) -> int:
    """
    Reflection length l_T(w) by deletion search.

    Args:
        w: Element
        reduced_word: Reduced word of w to search (canonical word if omitted)
        budget: Maximum word length searched (config ``search.word_length_budget``)

    Returns:
        Minimal number of deletions from the word leaving the identity

    Raises:
        BudgetError: If the word is longer than the budget
        ContractError: If reduced_word is not a reduced word for w
    """
    system = w.system
    if reduced_word is not None:
        word = tuple(reduced_word)
        if len(word) != w.length() or system.element_from_word(word) != w:
            raise ContractError("reduced_word is a reduced word for w", f"{word} for {w.label()}")

    cache = system.derived_cache("reflection_length")
    if w.key in cache:
        return cache[w.key]
    if reduced_word is None:
        word = w.canonical_word()
    if budget is None:
        budget = get_config().get_int("search.word_length_budget")
    if len(word) > budget:
        raise BudgetError(
            f"Reflection length of {w.label()} needs a deletion search on {len(word)} letters "
            f"(budget {budget})"
        )

    n = len(word)
    memo: Dict[tuple, bool] = {}

    def removable(pos: int, deletions: int, partial: Element) -> bool:
        # Can exactly `deletions` of word[pos:] be dropped so that the rest
        # cancels `partial`?
        kept = (n - pos) - deletions
        if kept < 0 or partial.length() > kept:
            return False
        if pos == n:
            return partial.is_identity
        state = (pos, deletions, partial.key)
        if state in memo:
            return memo[state]
        result = removable(pos + 1, deletions, system.times_simple(partial, word[pos]))
        if not result and deletions > 0:
            result = removable(pos + 1, deletions - 1, partial)
        memo[state] = result
        return result

    for d in range(n % 2, n + 1, 2):
        if removable(0, d, system.identity):
            cache[w.key] = d
            return d

    raise ContractError("reduced_word is a word for w", f"no deletion set of {word} yields e")


def reflection_length_table(system: CoxeterSystem) -> Dict[Element, int]:
    """l_T of every element of a finite W by BFS in the Cayley graph on T."""
    reflections = enumerate_reflections(system).reflections
    distances = {system.identity: 0}
    queue = deque([system.identity])
    while queue:
        w = queue.popleft()
        for t in reflections:
            v = w * t
            if v not in distances:
                distances[v] = distances[w] + 1
                queue.append(v)
    return distances


def _check_reflections(gens: Sequence[Element]) -> CoxeterSystem:
    if not gens:
        raise ContractError("generator list is nonempty")
    system = gens[0].system
    for t in gens:
        if t.system is not system:
            raise SystemMismatchError()
        if not system.is_reflection(t):
            raise DomainError(f"{t.label()} is not a reflection")
    return system


def subgroup_closure(gens: Sequence[Element], budget: Optional[int] = None) -> ReflectionSubgroup:
    """
    Reflection subgroup generated by ``gens``.

    Elements are found by BFS under right multiplication by the generators.
    If the budget is exceeded the result is flagged incomplete and has no
    canonical simple system.
    """
    system = _check_reflections(gens)
    if budget is None:
        budget = get_config().get_int("search.closure_budget")

    seen = {system.identity.key: system.identity}
    queue = deque([system.identity])
    complete = True
    while queue and complete:
        w = queue.popleft()
        for t in gens:
            v = w * t
            if v.key not in seen:
                seen[v.key] = v
                if len(seen) > budget:
                    logger.warning(
                        f"Subgroup closure stopped at {len(seen)} elements (budget {budget}); result is partial"
                    )
                    complete = False
                    break
                queue.append(v)

    elements = tuple(shortlex_sorted(seen.values()))
    reflection_set = tuple(w for w in elements if system.is_reflection(w))
    subgroup = ReflectionSubgroup(
        system=system,
        generators=tuple(gens),
        elements=elements,
        reflection_set=reflection_set,
        canonical_simples=None,
        complete=complete,
    )
    if complete:
        object.__setattr__(subgroup, "canonical_simples", tuple(canonical_simple_system(subgroup)))
    logger.debug(
        f"Closure of {[t.label() for t in gens]}: {len(elements)} elements, "
        f"{len(reflection_set)} reflections"
    )
    return subgroup


def canonical_simple_system(subgroup: ReflectionSubgroup) -> List[Element]:
    """
    Simple reflections of W' induced by the ambient positive roots.

    t in T' is simple iff s_alpha_t keeps every other positive root of W'
    positive.
    """
    if not subgroup.complete:
        raise UnsupportedError("Canonical simple system requires a fully enumerated subgroup")
    system = subgroup.system
    roots: List[Tuple[Element, Root]] = [(t, system.reflection_root(t)) for t in subgroup.reflection_set]

    simples = []
    for t, _ in roots:
        if all(
            t.apply(beta).sign() is Sign.POSITIVE
            for u, beta in roots if u != t
        ):
            simples.append(t)
    return shortlex_sorted(simples)


def dihedral_reflection_line(t1: Element, t2: Element, k_range: Iterable[int]) -> Dict[int, Element]:
    """
    Reflections rho^k t1 rho^-k of <t1, t2>, rho = t1 t2, indexed by k.

    In a finite dihedral subgroup the family is periodic in k with the
    order of rho as period.
    """
    _check_reflections([t1, t2])
    if t1 == t2:
        raise ContractError("t1 != t2")
    system = t1.system
    rho = t1 * t2
    line = {}
    for k in k_range:
        line[k] = system.conjugate(system.power(rho, k), t1)
    return line
