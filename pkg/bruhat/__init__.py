"""
Bruhat graphs, paths of factorizations and DOT export.
"""

from .bruhat_graph import (
    NOT_VALLEY,
    BruhatPath,
    Direction,
    PathShape,
    bruhat_distance,
    classify_shape,
    directed_ball,
    graphs_agree,
    is_reduced_factorization,
    path_of_factorization,
    restrict_to_subgroup,
    subgroup_bruhat_graph,
)
from .dot_export import to_dot

__all__ = [
    'NOT_VALLEY', 'BruhatPath', 'Direction', 'PathShape', 'bruhat_distance',
    'classify_shape', 'directed_ball', 'graphs_agree', 'is_reduced_factorization',
    'path_of_factorization', 'restrict_to_subgroup', 'subgroup_bruhat_graph',
    'to_dot',
]
