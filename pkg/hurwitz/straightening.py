"""
Straightening of Bruhat paths by Hurwitz moves.

Every up-down step z -> z t1 <- z t1 t2 of a path is replaced inside the
dihedral reflection subgroup <t1, t2> by a pair whose middle vertex is
lower than both ends. Each replacement lowers the sum of the vertex
lengths, so repeating it yields a path that first descends and then
ascends.
"""

from dataclasses import dataclass
import logging
from typing import List, Optional, Tuple

from bruhat.bruhat_graph import (
    BruhatPath,
    Direction,
    classify_shape,
    is_reduced_factorization,
    path_of_factorization,
)
from core.coxeter_system import Element
from hurwitz.factorization import BraidWord, Factorization, apply_braid, apply_sigma
from utils.config_manager import get_config
from utils.error_handler import ContractError, InternalError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescentResolution:
    """Replacement pair and the power k with sigma_1^k (t1, t2) = (t1', t2')."""

    t1: Element
    t2: Element
    power: int


@dataclass(frozen=True)
class StraighteningResult:
    """Straightened factorization, its braid witness and the valley pivot."""

    factorization: Factorization
    witness: BraidWord
    pivot: int
    path: BruhatPath


def _search_powers(limit: int):
    yield 0
    for k in range(1, limit + 1):
        yield -k
        yield k


def resolve_descent(z: Element, t1: Element, t2: Element) -> DescentResolution:
    """
    Replace an up-down pair at z by a pair of the same product with a lower peak.

    Candidates sigma_1^k (t1, t2) are tried for k = 0, -1, 1, -2, 2, ...
    and the first whose middle vertex is below max(l(z), l(z t1 t2)) wins.

    Raises:
        ContractError: If t1 == t2 or the pattern at z is not up-down
        InternalError: If the search runs out of candidates
    """
    if t1 == t2:
        raise ContractError("t1 != t2")
    top = z * t1
    end = top * t2
    if not (z.length() < top.length() and end.length() < top.length()):
        raise ContractError(
            "pattern at z is up-down",
            f"lengths {z.length()} -> {top.length()} -> {end.length()}"
        )

    bound = max(z.length(), end.length())
    pair = Factorization((t1, t2), z.system)
    limit = get_config().get_int("search.descent_search_limit")

    chains = {1: pair, -1: pair}
    exhausted = {1: False, -1: False}
    for k in _search_powers(limit):
        if k:
            direction = 1 if k > 0 else -1
            if exhausted[direction]:
                continue
            chains[direction] = apply_sigma(chains[direction], 1, direction)
            if chains[direction] == pair:
                # Back at the start: this direction has been fully searched.
                exhausted[direction] = True
                if exhausted[1] and exhausted[-1]:
                    break
                continue
        candidate = chains[1] if k >= 0 else chains[-1]
        middle = (z * candidate[0]).length()
        logger.debug(
            f"resolve_descent k={k}: ({candidate[0].label()}, {candidate[1].label()}) "
            f"middle length {middle}, bound {bound}"
        )
        if middle < bound:
            return DescentResolution(candidate[0], candidate[1], k)

    raise InternalError(
        f"No replacement for ({t1.label()}, {t2.label()}) at {z.label()} "
        f"within {limit} dihedral steps"
    )


def _first_peak(path: BruhatPath) -> Optional[int]:
    pattern = path.direction_pattern
    for i in range(len(pattern) - 1):
        if pattern[i] is Direction.UP and pattern[i + 1] is Direction.DOWN:
            return i
    return None


def straighten(f: Factorization, x: Optional[Element] = None) -> StraighteningResult:
    """
    Move f within its Hurwitz orbit until its path from x is a valley.

    Args:
        f: Reduced reflection factorization
        x: Start vertex (identity by default)

    Returns:
        StraighteningResult; ``apply_braid(f, witness)`` is the result
        factorization and the pivot is 0 when x = e

    Raises:
        ContractError: If f is not reduced
    """
    system = f.system
    if x is None:
        x = system.identity
    if not is_reduced_factorization(f.reflections):
        raise ContractError("f is a reduced factorization", repr(f))

    current = f
    applied: List[Tuple[int, int]] = []
    path = path_of_factorization(x, current.reflections)
    while True:
        i = _first_peak(path)
        if i is None:
            break
        resolution = resolve_descent(path.vertices[i], current[i], current[i + 1])
        sign = 1 if resolution.power > 0 else -1
        applied.extend([(i + 1, sign)] * abs(resolution.power))

        entries = list(current.reflections)
        entries[i], entries[i + 1] = resolution.t1, resolution.t2
        current = current.replace(entries)

        new_path = path_of_factorization(x, current.reflections)
        if sum(new_path.lengths) >= sum(path.lengths):
            raise InternalError("Path replacement did not lower the total vertex length")
        path = new_path

    shape = classify_shape(path)
    if not shape.is_valley:
        raise InternalError(f"Straightened path is not a valley: {path.direction_pattern}")
    if x.is_identity and shape.pivot != 0:
        raise InternalError(f"Straightened path from e has pivot {shape.pivot}")

    witness = BraidWord.from_application_order(applied)
    if apply_braid(f, witness) != current:
        raise InternalError("Straightening witness does not reproduce the result")

    logger.debug(f"Straightened {f} from {x.label()} to {current} with {len(witness)} braid letters")
    return StraighteningResult(factorization=current, witness=witness, pivot=shape.pivot, path=path)
