"""
Braids carrying a reduced factorization of a Coxeter element to its simple one.

A directed path e -> c in the Bruhat graph, c = s_1 ... s_n with distinct
letters, passes through the subwords of s_1 ... s_n and so records the
order pi in which the letters are inserted. Sorting pi by adjacent
transpositions gives the braid.
"""

from itertools import permutations
import logging
from typing import List, Sequence

from bruhat.bruhat_graph import Direction, path_of_factorization
from core.coxeter_system import CoxeterSystem, Element
from hurwitz.factorization import BraidWord, Factorization, InsertionPermutation, apply_braid
from hurwitz.straightening import straighten
from utils.error_handler import ContractError, InternalError

logger = logging.getLogger(__name__)


def _check_distinct(c_word: Sequence[int]):
    if len(set(c_word)) != len(c_word):
        raise ContractError("c_word has pairwise distinct letters", str(list(c_word)))


def _subword(system: CoxeterSystem, c_word: Sequence[int], positions) -> Element:
    return system.element_from_word(c_word[p] for p in sorted(positions))


def extract_insertion_permutation(f: Factorization, c_word: Sequence[int]) -> InsertionPermutation:
    """
    Insertion order of the letters of ``c_word`` along the path of f from e.

    pi_i is the position (1-based) in ``c_word`` of the letter whose
    insertion turns the (i-1)-th prefix of f into the i-th.

    Raises:
        ContractError: If f is not a directed-path factorization of c
    """
    system = f.system
    c_word = tuple(c_word)
    _check_distinct(c_word)
    n = len(c_word)
    if len(f) != n:
        raise ContractError("f has one factor per letter of c_word", f"{len(f)} != {n}")
    if f.product != system.element_from_word(c_word):
        raise ContractError("product(f) = c", f"{f.product.label()}")
    path = path_of_factorization(system.identity, f.reflections)
    if any(d is Direction.DOWN for d in path.direction_pattern):
        raise ContractError("path of f from e is directed (straighten first)")

    used: List[int] = []
    for i in range(1, n + 1):
        prefix = path.vertices[i]
        matches = [
            p for p in range(n)
            if p not in used and _subword(system, c_word, used + [p]) == prefix
        ]
        if len(matches) != 1:
            raise ContractError(
                "each prefix is a subword of c_word",
                f"step {i}: {len(matches)} candidate letters for {prefix.label()}"
            )
        used.append(matches[0])

    return InsertionPermutation(tuple(p + 1 for p in used))


def permutation_to_braid(pi: InsertionPermutation) -> BraidWord:
    """
    Sort pi by swapping the leftmost descent, emitting sigma_i each time.

    The first emitted letter is applied first.
    """
    values = list(pi.values)
    emitted = []
    while True:
        descent = next((i for i in range(len(values) - 1) if values[i] > values[i + 1]), None)
        if descent is None:
            break
        emitted.append((descent + 1, 1))
        values[descent], values[descent + 1] = values[descent + 1], values[descent]
    return BraidWord.from_application_order(emitted)


def transitivity_braid(f: Factorization, c_word: Sequence[int]) -> BraidWord:
    """
    Braid b with b(f) = (s_1, ..., s_n) for c = s_1 ... s_n.

    Straightening from e makes the path of f directed; the insertion
    permutation of that path is then sorted.

    Raises:
        ContractError: If c_word repeats a letter, f is not reduced, or the
            product of f is not c
        InternalError: If the braid fails verification
    """
    system = f.system
    c_word = tuple(c_word)
    _check_distinct(c_word)
    if f.product != system.element_from_word(c_word):
        raise ContractError("product(f) = c", f"{f.product.label()}")

    straightened = straighten(f)
    pi = extract_insertion_permutation(straightened.factorization, c_word)
    braid = permutation_to_braid(pi).compose(straightened.witness)

    target = Factorization([system.generator(s) for s in c_word], system)
    if apply_braid(f, braid) != target:
        raise InternalError(f"Braid {braid.to_string()} does not carry {f} to {target}")

    logger.debug(f"Transitivity braid for {f}: pi = {pi}, braid = {braid.to_string()}")
    return braid


def factorization_from_insertion(
    system: CoxeterSystem,
    pi: InsertionPermutation,
    c_word: Sequence[int]
) -> Factorization:
    """
    Directed-path factorization of c that inserts the letters in order pi.

    t_i = p_{i-1}^-1 p_i where p_i is the subword of ``c_word`` on the
    positions pi_1, ..., pi_i.
    """
    c_word = tuple(c_word)
    _check_distinct(c_word)
    if len(pi) != len(c_word):
        raise ContractError("permutation and word have the same length")
    prefixes = [system.identity]
    for i in range(1, len(pi) + 1):
        prefixes.append(_subword(system, c_word, [p - 1 for p in pi.values[:i]]))
    return Factorization(
        [prefixes[i - 1].inverse() * prefixes[i] for i in range(1, len(prefixes))],
        system
    )


def directed_path_factorizations(system: CoxeterSystem, c_word: Sequence[int]) -> List[Factorization]:
    """All n! directed-path factorizations of c, one per insertion order."""
    n = len(c_word)
    return [
        factorization_from_insertion(system, InsertionPermutation(values), c_word)
        for values in permutations(range(1, n + 1))
    ]
