"""
Weighted graph dumps:

    vertices:
    123
    213
    edges:
    123 213 1

A missing `edges:` header is fine: any three-token line is an edge.
"""

import logging

from ..core.errors import InputFormatError, InvalidGraph, InvalidPermutation
from ..core.graph import WeightedGraph
from ..core.perm import format_permutation, parse_permutation
from .fop import permutation_at
from .text import WORD, lines, read_file

logger = logging.getLogger(__name__)


def dump_graph(g: WeightedGraph) -> str:
    out = ["vertices:"]
    out.extend(format_permutation(v) for v in sorted(g.vertices))
    out.append("edges:")
    out.extend(f"{format_permutation(a)} {format_permutation(b)} {w}" for a, b, w, _ in g.edges())
    return "\n".join(out) + "\n"


def parse_graph_dump(text: str, source: str = "<input>") -> WeightedGraph:
    vertices, edges, seen = [], [], set()
    section = None
    n = None
    for line in lines(text, source, WORD):
        if line.words in (["vertices:"], ["edges:"]):
            section = line.keyword[:-1]
            continue
        if n is None:
            # the first permutation fixes the order
            try:
                n = parse_permutation(line.keyword).n
            except InvalidPermutation as e:
                line.fail(str(e))
        if len(line.tokens) == 1:
            if section == "edges":
                line.fail("vertex listed after the 'edges:' header")
            v = permutation_at(line, 0, n)
            if v in seen:
                line.fail(f"duplicate vertex {v}")
            seen.add(v)
            vertices.append(v)
        elif len(line.tokens) == 3:
            edges.append((line, permutation_at(line, 0, n), permutation_at(line, 1, n), line.integer(2)))
        else:
            line.fail("expected a vertex or '<perm> <perm> <weight>'")
    if not vertices:
        raise InputFormatError("no vertices", 1, 1, source)
    g = WeightedGraph(vertices)
    for line, a, b, w in edges:
        for i, v in ((0, a), (1, b)):
            if v not in g:
                line.fail(f"{v} is not a listed vertex", i)
        try:
            g.add_edge(a, b, w)
        except InvalidGraph as e:
            line.fail(str(e))
    logger.info(f"Read graph with {len(g)} vertices and {g.edge_count} edges from {source}")
    return g


def read_graph_dump(path: str) -> WeightedGraph:
    return parse_graph_dump(read_file(path), str(path))
