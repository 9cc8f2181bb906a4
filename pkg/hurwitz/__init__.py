"""
Hurwitz action on reflection factorizations, straightening and braid synthesis.
"""

from .factorization import (
    BraidLetter,
    BraidWord,
    Factorization,
    InsertionPermutation,
    apply_braid,
    apply_sigma,
    hurwitz_orbit,
    sigma_power_chain,
    sorted_orbit,
)
from .straightening import DescentResolution, StraighteningResult, resolve_descent, straighten
from .braid_synthesis import (
    directed_path_factorizations,
    extract_insertion_permutation,
    factorization_from_insertion,
    permutation_to_braid,
    transitivity_braid,
)

__all__ = [
    'BraidLetter', 'BraidWord', 'Factorization', 'InsertionPermutation',
    'apply_braid', 'apply_sigma', 'hurwitz_orbit', 'sigma_power_chain', 'sorted_orbit',
    'DescentResolution', 'StraighteningResult', 'resolve_descent', 'straighten',
    'directed_path_factorizations', 'extract_insertion_permutation',
    'factorization_from_insertion', 'permutation_to_braid', 'transitivity_braid',
]
