"""
Parabolic Coxeter elements, simple systems and reduced factorization sets.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from core.coxeter_system import CoxeterSystem, Element, Word
from core.reflections import (
    ReflectionSubgroup,
    enumerate_reflections,
    reflection_length,
    shortlex_sorted,
    subgroup_closure,
)
from hurwitz.factorization import Factorization
from bruhat.bruhat_graph import is_reduced_factorization
from utils.error_handler import ContractError, DomainError, UnsupportedError

logger = logging.getLogger(__name__)


def is_standard_parabolic_coxeter_element(w: Element) -> bool:
    """Whether l_T(w) = l(w)."""
    return reflection_length(w) == w.length()


def distinct_letter_reduced_word(w: Element) -> Optional[Word]:
    """A reduced word of w using no letter twice, or None."""
    system = w.system

    def search(v: Element, used: Tuple[int, ...]) -> Optional[Word]:
        if v.is_identity:
            return used
        for s in system.left_descents(v):
            if s not in used:
                found = search(system.simple_times(s, v), used + (s,))
                if found is not None:
                    return found
        return None

    return search(w, ())


@dataclass(frozen=True)
class SimpleSystemCandidate:
    """A rank-sized list of reflections proposed as a simple system."""

    reflections: Tuple[Element, ...]

    @property
    def system(self) -> CoxeterSystem:
        return self.reflections[0].system

    def key_set(self) -> FrozenSet[tuple]:
        return frozenset(t.key for t in self.reflections)

    def labels(self) -> List[str]:
        return [t.label() for t in self.reflections]


def _require_finite(system: CoxeterSystem, what: str):
    if not system.is_finite():
        raise UnsupportedError(f"{what} needs a finite group; {system.name} is infinite")


def _conjugation_closure(generators: Sequence[Element]) -> Dict[tuple, Element]:
    found = {t.key: t for t in generators}
    frontier = list(generators)
    while frontier:
        new = []
        for t in frontier:
            for s in generators:
                u = s * t * s
                if u.key not in found:
                    found[u.key] = u
                    new.append(u)
        frontier = new
    return found


def validate_simple_system(candidate: SimpleSystemCandidate) -> bool:
    """
    Whether the candidate is a simple system for (W, T).

    The candidate must consist of rank-many reflections, generate W, have
    T as its conjugation closure, and the Coxeter group presented by the
    orders of its pairwise products must have the same order as W.
    """
    if not candidate.reflections:
        return False
    system = candidate.system
    _require_finite(system, "Simple system validation")
    reflections = enumerate_reflections(system)
    gens = candidate.reflections

    if len(gens) != system.rank or len(candidate.key_set()) != len(gens):
        return False
    if any(t not in reflections for t in gens):
        return False

    order = system.group_order()
    if subgroup_closure(list(gens)).order != order:
        return False
    if set(_conjugation_closure(gens)) != {t.key for t in reflections}:
        return False

    matrix = [[1] * len(gens) for _ in gens]
    for i, j in combinations(range(len(gens)), 2):
        m = system.element_order(gens[i] * gens[j])
        matrix[i][j] = matrix[j][i] = m
    presented = CoxeterSystem(matrix, name=f"{system.name}-candidate")
    return presented.is_finite() and presented.group_order() == order


def are_conjugate_systems(first: SimpleSystemCandidate, second: SimpleSystemCandidate) -> bool:
    """Whether w S1 w^-1 = S2 as sets for some w in W (exhaustive)."""
    system = first.system
    _require_finite(system, "Conjugacy search")
    target = second.key_set()
    for w in system.enumerate_elements():
        conjugated = frozenset(system.conjugate(w, t).key for t in first.reflections)
        if conjugated == target:
            return True
    return False


def enumerate_simple_systems(system: CoxeterSystem) -> List[SimpleSystemCandidate]:
    """All simple systems of (W, T) among rank-sized subsets of T."""
    _require_finite(system, "Simple system enumeration")
    cache = system.derived_cache("simple_systems")
    if "all" not in cache:
        reflections = enumerate_reflections(system).reflections
        cache["all"] = [
            SimpleSystemCandidate(subset)
            for subset in combinations(reflections, system.rank)
            if validate_simple_system(SimpleSystemCandidate(subset))
        ]
        logger.info(f"{system.name} has {len(cache['all'])} simple systems")
    return list(cache["all"])


def is_parabolic_coxeter_element(w: Element) -> bool:
    """
    Whether w = s_1 ... s_n for distinct s_i of some simple system.

    Decided by search over all simple systems (finite groups only).
    """
    system = w.system
    _require_finite(system, "Parabolic Coxeter element test")
    if w.is_identity:
        return True
    n = reflection_length(w)
    for candidate in enumerate_simple_systems(system):
        for subset in combinations(candidate.reflections, n):
            for order in permutations(subset):
                product = system.identity
                for s in order:
                    product = product * s
                if product == w:
                    return True
    return False


def red_enumerate(w: Element, scope: Optional[ReflectionSubgroup] = None) -> FrozenSet[Factorization]:
    """
    Reduced reflection factorizations of w with entries in the scope.

    Args:
        w: Element
        scope: None for all of T, or a reflection subgroup for T'

    Returns:
        All tuples of length l_T(w) with product w
    """
    system = w.system
    if scope is None:
        _require_finite(system, "Red_T enumeration")
        reflections = enumerate_reflections(system).reflections
    else:
        if not scope.complete:
            raise UnsupportedError("Red_T' enumeration needs a fully enumerated subgroup")
        reflections = scope.reflection_set

    memo: Dict[tuple, List[Tuple[Element, ...]]] = {}

    def factor(v: Element, n: int) -> List[Tuple[Element, ...]]:
        if n == 0:
            return [()] if v.is_identity else []
        if v.key in memo:
            return memo[v.key]
        result = []
        for t in reflections:
            rest = t * v
            if reflection_length(rest) == n - 1:
                result.extend((t,) + tail for tail in factor(rest, n - 1))
        memo[v.key] = result
        return result

    n = reflection_length(w)
    tuples = factor(w, n)
    return frozenset(Factorization(entries, system, check=False, product=w) for entries in tuples)


def theorem2_check(subgroup: ReflectionSubgroup, w: Element) -> bool:
    """
    Whether every reduced factorization of w uses only reflections of W'.

    Raises:
        ContractError: If w is not in W'
    """
    if not subgroup.contains(w):
        raise ContractError("w lies in W'", w.label())
    return red_enumerate(w) == red_enumerate(w, subgroup)


def parabolic_closure_of_factorization(f: Factorization) -> ReflectionSubgroup:
    """The subgroup generated by the entries of a reduced factorization."""
    if not is_reduced_factorization(f.reflections):
        raise ContractError("f is a reduced factorization", repr(f))
    if not len(f):
        e = f.system.identity
        return ReflectionSubgroup(f.system, (), (e,), (), (), True)
    return subgroup_closure(list(f.reflections))


def standard_parabolic_subgroups(system: CoxeterSystem) -> List[Tuple[Tuple[int, ...], ReflectionSubgroup]]:
    """Subgroups W_J for every nonempty J of generator indices."""
    result = []
    for size in range(1, system.rank + 1):
        for J in combinations(range(1, system.rank + 1), size):
            result.append((J, subgroup_closure([system.generator(i) for i in J])))
    return result


def simple_system_from_words(system: CoxeterSystem, words: Sequence[Sequence[int]]) -> SimpleSystemCandidate:
    """Candidate from reflection words."""
    reflections = []
    for word in words:
        t = system.element_from_word(word)
        if not system.is_reflection(t):
            raise DomainError(f"{t.label()} is not a reflection")
        reflections.append(t)
    return SimpleSystemCandidate(tuple(reflections))


def reflections_of(candidate: SimpleSystemCandidate) -> List[Element]:
    """Reflection set generated by a candidate, ShortLex."""
    return shortlex_sorted(_conjugation_closure(candidate.reflections).values())
