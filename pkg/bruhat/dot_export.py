"""
Graphviz DOT text for oriented Bruhat graphs.
"""

from typing import Iterator

import networkx as nx


def _gvquote(s: str) -> str:
    return '"{}"'.format(str(s).replace('"', r'\"'))


def dot_lines(graph: nx.DiGraph, name: str = "bruhat") -> Iterator[str]:
    """
    Produce DOT text line by line.

    Vertices are labelled by canonical word, ranked by length; edges point
    towards the longer element and carry the reflection as label.
    """
    yield f"digraph {_gvquote(name)} {{\n"
    yield "  rankdir=BT;\n"
    yield '  node [shape=box, fontname="monospace"];\n'

    by_length = {}
    for key, data in graph.nodes(data=True):
        by_length.setdefault(data.get("length", 0), []).append(key)

    for length in sorted(by_length):
        members = sorted(by_length[length])
        for key in members:
            label = graph.nodes[key].get("label", key)
            yield f"  {_gvquote(key)} [label={_gvquote(label)}];\n"
        if len(members) > 1:
            yield "  { rank=same; " + " ".join(_gvquote(k) for k in members) + " }\n"

    for u, v, data in sorted(graph.edges(data=True), key=lambda e: (e[0], e[1])):
        reflection = data.get("reflection")
        attrs = f" [label={_gvquote(reflection)}]" if reflection else ""
        yield f"  {_gvquote(u)} -> {_gvquote(v)}{attrs};\n"

    yield "}\n"


def to_dot(graph: nx.DiGraph, name: str = "bruhat") -> str:
    """DOT text of the whole graph."""
    return "".join(dot_lines(graph, name))
