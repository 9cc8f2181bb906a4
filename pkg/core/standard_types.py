"""
Named Coxeter matrices (finite and affine types) built from Dynkin links.
"""

import re
from typing import Dict, List, Tuple

from core.coxeter_system import CoxeterSystem
from core.scalar import INF
from utils.error_handler import ValidationError

Links = Dict[Tuple[int, int], object]

_CLASSICAL = re.compile(r"^([ABDFH])(\d+)$")
_AFFINE = re.compile(r"^A~(\d+)$")
_DIHEDRAL = re.compile(r"^I2\((\d+|inf)\)$")


def matrix_from_links(rank: int, links: Links) -> List[List]:
    """Coxeter matrix with the given labelled edges; unlisted pairs commute."""
    matrix = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), m in links.items():
        matrix[i][j] = matrix[j][i] = m
    return matrix


def _type_a(n: int) -> Links:
    return {(i, i + 1): 3 for i in range(n - 1)}


def _type_b(n: int) -> Links:
    if n < 2:
        raise ValidationError("Type B needs rank at least 2")
    links = _type_a(n)
    links[(0, 1)] = 4
    return links


def _type_d(n: int) -> Links:
    if n < 4:
        raise ValidationError("Type D needs rank at least 4")
    links = _type_a(n - 1)
    links[(n - 3, n - 1)] = 3
    return links


def _type_h(n: int) -> Links:
    if n not in (3, 4):
        raise ValidationError(f"Type H{n} does not exist (only H3, H4)")
    links = _type_a(n)
    links[(0, 1)] = 5
    return links


def _type_f(n: int) -> Links:
    if n != 4:
        raise ValidationError(f"Type F{n} does not exist (only F4)")
    return {(0, 1): 3, (1, 2): 4, (2, 3): 3}


_BUILDERS = {"A": _type_a, "B": _type_b, "D": _type_d, "H": _type_h, "F": _type_f}


def coxeter_matrix(type_name: str) -> List[List]:
    """
    Coxeter matrix of a named type.

    Args:
        type_name: One of ``A<n>``, ``B<n>``, ``D<n>``, ``H3``, ``H4``,
            ``F4``, ``I2(<m>)``, ``I2(inf)`` or ``A~<n>`` (affine, rank n+1)

    Returns:
        Coxeter matrix as a list of rows
    """
    name = type_name.strip().upper().replace("INF", "inf")

    match = _DIHEDRAL.match(name)
    if match:
        m = INF if match.group(1) == "inf" else int(match.group(1))
        if m != INF and m < 2:
            raise ValidationError(f"I2(m) needs m >= 2, got {m}")
        return matrix_from_links(2, {(0, 1): m})

    match = _AFFINE.match(name)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise ValidationError("Affine type A~n needs n >= 1")
        if n == 1:
            return matrix_from_links(2, {(0, 1): INF})
        links = _type_a(n + 1)
        links[(0, n)] = 3
        return matrix_from_links(n + 1, links)

    match = _CLASSICAL.match(name)
    if match:
        n = int(match.group(2))
        if n < 1:
            raise ValidationError(f"Rank must be positive in {type_name!r}")
        return matrix_from_links(n, _BUILDERS[match.group(1)](n))

    raise ValidationError(f"Unknown Coxeter type {type_name!r}")


def standard_system(type_name: str) -> CoxeterSystem:
    """Coxeter system of a named type."""
    return CoxeterSystem(coxeter_matrix(type_name), name=type_name.strip())
