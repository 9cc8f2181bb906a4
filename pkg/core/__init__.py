"""
Exact Coxeter group arithmetic: scalars, systems, elements and reflections.
"""

from .scalar import INF, CyclotomicField, Scalar, Sign, get_field, scalar_arith, scalar_from_cos, scalar_sign
from .coxeter_system import CoxeterSystem, Element, Root, system_from_matrix
from .standard_types import coxeter_matrix, standard_system
from .reflections import (
    ReflectionSet,
    ReflectionSubgroup,
    canonical_simple_system,
    dihedral_reflection_line,
    enumerate_reflections,
    reflection_length,
    subgroup_closure,
)

__all__ = [
    'INF', 'CyclotomicField', 'Scalar', 'Sign', 'get_field',
    'scalar_arith', 'scalar_from_cos', 'scalar_sign',
    'CoxeterSystem', 'Element', 'Root', 'system_from_matrix',
    'coxeter_matrix', 'standard_system',
    'ReflectionSet', 'ReflectionSubgroup', 'canonical_simple_system',
    'dihedral_reflection_line', 'enumerate_reflections', 'reflection_length',
    'subgroup_closure',
]
