"""
Parabolic Coxeter elements, simple systems and verification batteries.
"""

from .parabolic_analysis import (
    SimpleSystemCandidate,
    are_conjugate_systems,
    distinct_letter_reduced_word,
    enumerate_simple_systems,
    is_parabolic_coxeter_element,
    is_standard_parabolic_coxeter_element,
    parabolic_closure_of_factorization,
    red_enumerate,
    standard_parabolic_subgroups,
    theorem2_check,
    validate_simple_system,
)
from .verification import CheckReport

__all__ = [
    'SimpleSystemCandidate', 'are_conjugate_systems', 'distinct_letter_reduced_word',
    'enumerate_simple_systems', 'is_parabolic_coxeter_element',
    'is_standard_parabolic_coxeter_element', 'parabolic_closure_of_factorization',
    'red_enumerate', 'standard_parabolic_subgroups', 'theorem2_check',
    'validate_simple_system', 'CheckReport',
]
