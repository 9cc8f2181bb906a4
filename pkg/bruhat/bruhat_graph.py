"""
Bruhat graph and its length orientation.

Vertices are group elements keyed by their canonical word (``"e"``,
``"1 2 1"``); an edge w -> wt joins w to wt for a reflection t whenever
l(w) < l(wt). Graphs are materialized only for balls of bounded length or
for finite groups and subgroups.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.coxeter_system import CoxeterSystem, Element
from core.reflections import (
    ReflectionSubgroup,
    enumerate_reflections,
    reflection_length,
)
from utils.config_manager import get_config
from utils.error_handler import BudgetError, ContractError, DomainError, InternalError

logger = logging.getLogger(__name__)

IDENTITY_KEY = "e"


class Direction(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class BruhatPath:
    """
    Path x, x t_1, x t_1 t_2, ... in the Bruhat graph.

    Attributes:
        start: First vertex x
        steps: Reflections t_1, ..., t_n
        vertices: The n + 1 vertices
        lengths: Coxeter lengths of the vertices
        direction_pattern: UP where the length increases across a step
    """

    start: Element
    steps: Tuple[Element, ...]
    vertices: Tuple[Element, ...]
    lengths: Tuple[int, ...]
    direction_pattern: Tuple[Direction, ...]

    @property
    def end(self) -> Element:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PathShape:
    """Either a valley with its pivot or not a valley."""

    is_valley: bool
    pivot: Optional[int] = None

    @classmethod
    def valley(cls, pivot: int) -> "PathShape":
        return cls(True, pivot)

    def __str__(self) -> str:
        return f"valley({self.pivot})" if self.is_valley else "not_valley"


NOT_VALLEY = PathShape(False)


def node_key(w: Element) -> str:
    """Vertex key of an element: its canonical word or ``e``."""
    return w.word_string()


def path_of_factorization(x: Element, steps: Sequence[Element]) -> BruhatPath:
    """
    Path from x to x t_1 ... t_n.

    Raises:
        DomainError: If a step is not a reflection
    """
    system = x.system
    vertices = [x]
    for t in steps:
        if not system.is_reflection(t):
            raise DomainError(f"Path step {t.label()} is not a reflection")
        vertices.append(vertices[-1] * t)

    lengths = tuple(v.length() for v in vertices)
    pattern = []
    for i in range(len(steps)):
        if lengths[i] == lengths[i + 1]:
            raise InternalError(
                f"Bruhat edge between elements of equal length {lengths[i]} "
                f"({vertices[i].label()}, {vertices[i + 1].label()})"
            )
        pattern.append(Direction.UP if lengths[i] < lengths[i + 1] else Direction.DOWN)

    return BruhatPath(
        start=x,
        steps=tuple(steps),
        vertices=tuple(vertices),
        lengths=lengths,
        direction_pattern=tuple(pattern),
    )


def classify_shape(path: BruhatPath) -> PathShape:
    """valley(i) iff the pattern is i downs followed only by ups."""
    pattern = path.direction_pattern
    pivot = 0
    while pivot < len(pattern) and pattern[pivot] is Direction.DOWN:
        pivot += 1
    if all(d is Direction.UP for d in pattern[pivot:]):
        return PathShape.valley(pivot)
    return NOT_VALLEY


def is_reduced_factorization(steps: Sequence[Element]) -> bool:
    """Whether l_T of the product equals the number of factors."""
    steps = list(steps)
    if not steps:
        return True
    product = steps[0].system.identity
    for t in steps:
        product = product * t
    return reflection_length(product) == len(steps)


def _ball_elements(system: CoxeterSystem, radius: int) -> List[Element]:
    budget = get_config().get_int("search.enumeration_budget")
    seen = {system.identity.key: system.identity}
    frontier = deque([system.identity])
    while frontier:
        w = frontier.popleft()
        if w.length() == radius:
            continue
        for i in range(1, system.rank + 1):
            v = system.times_simple(w, i)
            if v.key in seen or v.length() < w.length():
                continue
            seen[v.key] = v
            if len(seen) > budget:
                raise BudgetError(f"Bruhat ball of radius {radius} exceeds {budget} vertices")
            frontier.append(v)
    return list(seen.values())


def directed_ball(system: CoxeterSystem, radius: int) -> nx.DiGraph:
    """
    Oriented Bruhat graph on the elements of length <= radius.

    Edge w -> wt exists when l(w) < l(wt) <= radius; the reflection t has
    length at most 2 * radius, so reflections are enumerated to that depth.

    Returns:
        networkx DiGraph with node attributes ``element``, ``length``,
        ``label`` and edge attribute ``reflection``
    """
    if radius < 0:
        raise ContractError("radius >= 0", f"got {radius}")

    elements = _ball_elements(system, radius)
    if system.is_finite():
        reflections = enumerate_reflections(system).reflections
    else:
        reflections = enumerate_reflections(system, depth=2 * radius).reflections

    graph = nx.DiGraph(system=system, radius=radius)
    by_key = {}
    for w in elements:
        key = node_key(w)
        by_key[w.key] = key
        graph.add_node(key, element=w, length=w.length(), label=w.label())

    for w in elements:
        for t in reflections:
            v = w * t
            if v.key in by_key and w.length() < v.length():
                graph.add_edge(by_key[w.key], by_key[v.key], reflection=t.label())

    logger.info(
        f"Bruhat ball of {system.name}, radius {radius}: "
        f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges"
    )
    return graph


def full_bruhat_graph(system: CoxeterSystem) -> nx.DiGraph:
    """Oriented Bruhat graph of a finite group."""
    return directed_ball(system, system.longest_element().length())


def restrict_to_subgroup(graph: nx.DiGraph, subgroup: ReflectionSubgroup) -> nx.DiGraph:
    """
    Induced subgraph on the elements of W'.

    Raises:
        ContractError: If some element of W' is not a vertex of the graph
    """
    keys = [node_key(w) for w in subgroup.elements]
    missing = [k for k in keys if k not in graph]
    if missing:
        raise ContractError("graph covers W'", f"{len(missing)} elements missing, e.g. {missing[0]}")
    return graph.subgraph(keys).copy()


def subgroup_lengths(subgroup: ReflectionSubgroup) -> Dict[tuple, int]:
    """Length of each element of W' with respect to its canonical simple system."""
    if subgroup.canonical_simples is None:
        raise ContractError("subgroup is fully enumerated")
    system = subgroup.system
    lengths = {system.identity.key: 0}
    queue = deque([system.identity])
    while queue:
        w = queue.popleft()
        for s in subgroup.canonical_simples:
            v = w * s
            if v.key not in lengths:
                lengths[v.key] = lengths[w.key] + 1
                queue.append(v)
    return lengths


def subgroup_bruhat_graph(subgroup: ReflectionSubgroup) -> nx.DiGraph:
    """
    Oriented Bruhat graph of W' built from its own Coxeter structure.

    Lengths come from the canonical simple system of W' and the edges from
    its reflections T'; vertex keys are the ambient canonical words so the
    result can be compared with a restriction of the ambient graph.
    """
    lengths = subgroup_lengths(subgroup)
    graph = nx.DiGraph(system=subgroup.system)
    for w in subgroup.elements:
        graph.add_node(node_key(w), element=w, length=lengths[w.key], label=w.label())
    for w in subgroup.elements:
        for t in subgroup.reflection_set:
            v = w * t
            if lengths[w.key] < lengths[v.key]:
                graph.add_edge(node_key(w), node_key(v), reflection=t.label())
    return graph


def graphs_agree(g: nx.DiGraph, h: nx.DiGraph) -> bool:
    """Whether the identity on vertex keys is an isomorphism of directed graphs."""
    return set(g.nodes) == set(h.nodes) and set(g.edges) == set(h.edges)


def bruhat_distance(graph: nx.DiGraph, target: Element, source: Optional[Element] = None) -> int:
    """Undirected distance between two vertices (from e by default)."""
    source_key = IDENTITY_KEY if source is None else node_key(source)
    target_key = node_key(target)
    for key in (source_key, target_key):
        if key not in graph:
            raise ContractError("vertex lies in the graph", key)
    return nx.shortest_path_length(graph.to_undirected(as_view=True), source_key, target_key)


def path_is_shortest(path: BruhatPath, graph: nx.DiGraph) -> bool:
    """Whether the path has minimal length among paths with the same ends."""
    return len(path) == bruhat_distance(graph, path.end, source=path.start)


def shortest_directed_paths(graph: nx.DiGraph, w: Element) -> List[List[str]]:
    """All directed paths e -> w whose length is the undirected distance."""
    target = node_key(w)
    distance = bruhat_distance(graph, w)
    try:
        paths = nx.all_shortest_paths(graph, IDENTITY_KEY, target)
        return sorted(p for p in paths if len(p) - 1 == distance)
    except nx.NetworkXNoPath:
        return []
