"""
Weighted graphs on permutations: the big permutograph, the permutohedron
graph, induced permutographs and the isometry check that defines them.

Storage is a networkx.Graph on dense integer indices; the permutation <-> index
maps travel with the graph. Every edge carries `weight` (inversion distance)
and `partition` (its ordered partition, or None for non-adjacent endpoints in
an unchecked WeightedGraph).
"""

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .configuration import config
from .errors import GuardExceeded, InvalidGraph, IsometryViolation, OrderMismatch, VertexNotFound
from .perm import (
    OrderedPartition,
    Permutation,
    adjacency_partition,
    all_permutations,
    compose,
    enumerate_nontrivial_partitions,
    inversion_distance,
    tau_of,
)
from .results import CheckResult

logger = logging.getLogger(__name__)

Edge = Tuple[Permutation, Permutation, int]


class WeightedGraph:
    """
    Undirected weighted graph whose vertices are permutations of one order.
    Immutable by convention once constructed.
    """

    def __init__(self, vertices: Sequence[Permutation], edges: Iterable[Edge] = ()):
        self.vertices: List[Permutation] = list(vertices)
        if not self.vertices:
            raise InvalidGraph("a graph needs at least one vertex")
        orders = {v.n for v in self.vertices}
        if len(orders) != 1:
            raise OrderMismatch(f"vertices of different orders: {sorted(orders)}")
        self.n: int = orders.pop()
        self.index: Dict[Permutation, int] = {}
        for i, v in enumerate(self.vertices):
            if v in self.index:
                raise InvalidGraph(f"duplicate vertex {v}")
            self.index[v] = i
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(len(self.vertices)))
        for a, b, weight in edges:
            self._add_edge(a, b, weight)

    def _add_edge(self, a: Permutation, b: Permutation, weight: int,
                  partition: Optional[OrderedPartition] = None):
        ia, ib = self.index_of(a), self.index_of(b)
        if ia == ib:
            raise InvalidGraph(f"self-loop at {a}")
        if int(weight) != weight or weight < 1:
            raise InvalidGraph(f"edge {a}-{b} has weight {weight}; weights are positive integers")
        expected = inversion_distance(a, b)
        if weight != expected:
            raise InvalidGraph(f"edge {a}-{b} has weight {weight}, inversion distance is {expected}")
        if partition is None:
            partition = adjacency_partition(a, b)
        self.graph.add_edge(ia, ib, weight=int(weight), partition=partition)

    def add_edge(self, a: Permutation, b: Permutation, weight: int):
        """Validated edge insertion, for readers that build a graph line by line."""
        self._add_edge(a, b, weight)

    @classmethod
    def from_edges(cls, vertices: Sequence[Permutation], pairs: Iterable[Tuple[Permutation, Permutation]]):
        """Graph whose edge weights are the inversion distances of the endpoints."""
        return cls(vertices, ((a, b, inversion_distance(a, b)) for a, b in pairs))

    def index_of(self, v: Permutation) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise VertexNotFound(f"{v} is not a vertex of the graph") from None

    def __contains__(self, v: Permutation) -> bool:
        return v in self.index

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def edges(self) -> List[Tuple[Permutation, Permutation, int, Optional[OrderedPartition]]]:
        """Edges with endpoints in sorted order, the whole list sorted."""
        out = []
        for i, j, data in self.graph.edges(data=True):
            a, b = sorted((self.vertices[i], self.vertices[j]))
            out.append((a, b, data["weight"], data["partition"]))
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def neighbors(self, v: Permutation) -> List[Permutation]:
        return sorted(self.vertices[j] for j in self.graph.neighbors(self.index_of(v)))

    def degree(self, v: Permutation) -> int:
        return self.graph.degree(self.index_of(v))

    def degree_histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(d for _, d in self.graph.degree()).items()))

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.graph)

    def stats(self) -> Dict[str, object]:
        return {
            "vertices": len(self.vertices),
            "edges": self.edge_count,
            "degrees": self.degree_histogram(),
            "bipartite": self.is_bipartite(),
        }


class Permutograph(WeightedGraph):
    """
    Isometric weighted subgraph of the big permutograph: every edge joins
    adjacent permutations and weighted path distance equals inversion distance.
    Build through the module functions, which establish both conditions.
    """

    def _add_edge(self, a, b, weight, partition=None):
        super()._add_edge(a, b, weight, partition)
        if self.graph.edges[self.index[a], self.index[b]]["partition"] is None:
            raise InvalidGraph(f"{a} and {b} are not adjacent in the big permutograph")

    @classmethod
    def from_graph(cls, g: WeightedGraph, verify: bool = True) -> "Permutograph":
        if verify:
            result = verify_permutograph(g)
            if not result.ok:
                a, b = result.pair
                raise IsometryViolation(result.detail, pair=(a, b),
                                        path_distance=result.data.get("path"),
                                        inversion_distance=result.data.get("inversion"))
        return cls(g.vertices, ((a, b, w) for a, b, w, _ in g.edges()))


def _guard_order(n: int, max_order: Optional[int] = None):
    limit = config.get_int("max_order") if max_order is None else max_order
    if not 2 <= n <= limit:
        raise GuardExceeded(f"order n={n} is outside the supported range 2..{limit}")


def _cayley_graph(n: int, partitions: List[OrderedPartition]) -> Permutograph:
    vertices = all_permutations(n)
    g = Permutograph(vertices)
    taus = [(tau_of(p), p) for p in partitions]
    for a in vertices:
        ia = g.index[a]
        for tau, p in taus:
            b = compose(tau, a)
            ib = g.index[b]
            if ia < ib:
                # a b^-1 = tau, weight = pairs reversed inside the blocks
                g.graph.add_edge(ia, ib, weight=p.weight, partition=p)
    return g


def build_big_permutograph(n: int, max_order: Optional[int] = None) -> Permutograph:
    """Cayley graph of S_n under all block reversals tau_pi."""
    _guard_order(n, max_order)
    g = _cayley_graph(n, enumerate_nontrivial_partitions(n))
    logger.info(f"Built big permutograph on S_{n}: {len(g)} vertices, {g.edge_count} edges")
    return g


def build_permutohedron_graph(n: int, max_order: Optional[int] = None) -> Permutograph:
    """Adjacent-transposition Cayley graph of S_n (all weights 1)."""
    _guard_order(n, max_order)
    # weight 1: a single block of size 2, everything else singletons
    partitions = [p for p in enumerate_nontrivial_partitions(n) if p.weight == 1]
    g = _cayley_graph(n, partitions)
    logger.info(f"Built permutohedron graph on S_{n}: {len(g)} vertices, {g.edge_count} edges")
    return g


def shortest_path_distance(g: WeightedGraph, a: Permutation, b: Permutation) -> Optional[int]:
    """Minimum total edge weight of an a-b path; None when b is unreachable."""
    ia, ib = g.index_of(a), g.index_of(b)
    try:
        return nx.dijkstra_path_length(g.graph, ia, ib, weight="weight")
    except nx.NetworkXNoPath:
        return None


def verify_permutograph(g: WeightedGraph) -> CheckResult:
    """
    ok iff path distance equals inversion distance for every vertex pair.
    The reported counterexample is the lexicographically first pair.
    """
    order = sorted(range(len(g.vertices)), key=lambda i: g.vertices[i])
    for pos, i in enumerate(order):
        lengths = nx.single_source_dijkstra_path_length(g.graph, i, weight="weight")
        a = g.vertices[i]
        for j in order[pos + 1:]:
            b = g.vertices[j]
            path = lengths.get(j)
            inv = inversion_distance(a, b)
            if path != inv:
                shown = "unreachable" if path is None else str(path)
                logger.debug(f"Isometry fails at {a}, {b}: path {shown}, inversion {inv}")
                return CheckResult.failed(
                    (a, b), f"path distance {shown} != inversion distance {inv} for {a}, {b}",
                    path=path, inversion=inv)
    return CheckResult.passed(f"{len(g.vertices)} vertices, isometric")


def induced_permutograph(n: int, vertices: Sequence[Permutation]) -> Permutograph:
    """
    Subgraph of the big permutograph induced on `vertices`; raises
    IsometryViolation if it is not isometric.
    """
    vertices = list(vertices)
    for v in vertices:
        if v.n != n:
            raise OrderMismatch(f"{v} has order {v.n}, expected {n}")
    g = Permutograph(vertices)
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            b = vertices[j]
            p = adjacency_partition(a, b)
            if p is not None:
                g.graph.add_edge(i, j, weight=p.weight, partition=p)
    result = verify_permutograph(g)
    if not result.ok:
        raise IsometryViolation(result.detail, pair=result.pair,
                                path_distance=result.data.get("path"),
                                inversion_distance=result.data.get("inversion"))
    return g
