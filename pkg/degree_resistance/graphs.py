# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Simple undirected graphs and the structural analysis of bicyclic graphs."""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx

from .errors import (
    DuplicateEdge,
    EmptyCore,
    IndexOutOfRange,
    ParameterRangeError,
    PreconditionViolation,
    SelfLoop,
)

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build instances through :func:`build_graph`, which validates the edge list.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the corresponding :class:`Graph`.

    Raises:
        IndexOutOfRange: an endpoint is outside ``0..n-1``.
        SelfLoop: an edge joins a vertex to itself.
        DuplicateEdge: the same unordered pair occurs twice.
    """
    if n < 0:
        raise ParameterRangeError(f"Vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for raw_u, raw_v in edge_list:
        u, v = int(raw_u), int(raw_v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange((u, v), n)
        if u == v:
            raise SelfLoop((u, v))
        edge = normalize_edge(u, v)
        if edge in seen:
            raise DuplicateEdge((u, v))
        seen.add(edge)
    return Graph(n, frozenset(seen))


def shortest_distances(graph: Graph) -> list[list[int | float]]:
    """Hop distances between all pairs; ``math.inf`` marks unreachable pairs."""
    result: list[list[int | float]] = [
        [math.inf] * graph.n for _ in range(graph.n)
    ]
    for source, lengths in nx.all_pairs_shortest_path_length(graph.to_networkx()):
        row = result[source]
        for target, length in lengths.items():
            row[target] = length
    return result


def is_connected(graph: Graph) -> bool:
    if graph.n < 1:
        raise ParameterRangeError("Connectivity is undefined for the empty graph")
    return nx.is_connected(graph.to_networkx())


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Compactly re-indexed induced subgraph plus the new-to-old vertex mapping."""
    mapping = sorted(set(vertices))
    index = {old: new for new, old in enumerate(mapping)}
    edges = frozenset(
        normalize_edge(index[u], index[v])
        for u, v in graph.edges
        if u in index and v in index
    )
    return Graph(len(mapping), edges), mapping


def two_core(graph: Graph) -> tuple[Graph, list[int]]:
    """Strip degree-1 vertices until none remain.

    Returns the core re-indexed to ``0..k-1`` and ``mapping[new] == old``.
    """
    core = nx.k_core(graph.to_networkx(), 2)
    if core.number_of_nodes() == 0:
        raise EmptyCore("Graph is a forest; its 2-core is empty")
    return induced_subgraph(graph, core.nodes)


def cut_vertices(graph: Graph) -> frozenset[int]:
    return frozenset(nx.articulation_points(graph.to_networkx()))


class BicyclicKind(str, Enum):
    NOT_BICYCLIC = "not-bicyclic"
    TWO_CYCLES = "two-cycles"
    THETA = "theta"


@dataclass(frozen=True)
class BicyclicClass:
    kind: BicyclicKind
    p: int | None = None
    q: int | None = None
    path_length: int | None = None

    def __str__(self) -> str:
        if self.kind is BicyclicKind.TWO_CYCLES:
            return f"TwoCycles({self.p},{self.q},{self.path_length})"
        if self.kind is BicyclicKind.THETA:
            return "Theta"
        return "NotBicyclic"


NOT_BICYCLIC = BicyclicClass(BicyclicKind.NOT_BICYCLIC)
THETA = BicyclicClass(BicyclicKind.THETA)


def _is_bicyclic_candidate(graph: Graph) -> bool:
    return graph.n >= 1 and graph.m == graph.n + 1 and is_connected(graph)


def classify_bicyclic(graph: Graph) -> BicyclicClass:
    """Tell apart exactly-two-cycle bicyclic graphs, theta graphs and the rest.

    A connected graph with ``m == n + 1`` has a 2-core that is either
    2-connected (theta) or has a cut vertex (two cycles, possibly joined by a
    path). Cycle lengths are reported sorted, ``p <= q``.
    """
    if not _is_bicyclic_candidate(graph):
        return NOT_BICYCLIC
    core, _ = two_core(graph)
    if not cut_vertices(core):
        return THETA
    lengths = sorted(len(cycle) for cycle in nx.cycle_basis(core.to_networkx()))
    p, q = lengths
    return BicyclicClass(BicyclicKind.TWO_CYCLES, p, q, core.n - p - q + 1)


@dataclass(frozen=True)
class BicyclicStructure:
    """Base of an exactly-two-cycle bicyclic graph, in original vertex indices.

    ``cycles[i]`` lists the vertices of a cycle in cyclic order starting at its
    contact vertex, stepping first to the lower-indexed cycle neighbour.
    ``path`` runs from the contact on ``cycles[0]`` to the contact on
    ``cycles[1]`` and is a single vertex when the cycles share one.
    ``root[v]`` is the base vertex whose hanging tree contains ``v``.
    """

    cycles: tuple[tuple[int, ...], tuple[int, ...]]
    path: tuple[int, ...]
    root: tuple[int, ...]

    @property
    def shared(self) -> bool:
        return len(self.path) == 1

    def cycle_of(self, v: int) -> int | None:
        for index, cycle in enumerate(self.cycles):
            if v in cycle:
                return index
        return None

    def contact(self, index: int) -> int:
        return self.cycles[index][0]


def _order_cycle(graph: Graph, members: set[int], start: int) -> tuple[int, ...]:
    order = [start]
    previous, current = -1, start
    while True:
        step = min(v for v in graph.adjacency[current] if v in members and v != previous)
        if step == start:
            break
        order.append(step)
        previous, current = current, step
        if len(order) > len(members):
            raise PreconditionViolation("Cycle vertices do not form a chordless cycle")
    return tuple(order)


def bicyclic_structure(graph: Graph) -> BicyclicStructure:
    """Locate the two cycles, the joining path and the hanging trees."""
    kind = classify_bicyclic(graph)
    if kind.kind is not BicyclicKind.TWO_CYCLES:
        raise PreconditionViolation(
            f"Expected a bicyclic graph with exactly two cycles, got {kind}"
        )
    core, mapping = two_core(graph)
    cycle_sets = [
        {mapping[v] for v in cycle} for cycle in nx.cycle_basis(core.to_networkx())
    ]
    cycle_sets.sort(key=lambda members: (len(members), min(members)))
    shared = cycle_sets[0] & cycle_sets[1]
    if shared:
        (w,) = shared
        path: tuple[int, ...] = (w,)
    else:
        core_vertices = set(mapping)
        contacts = [
            next(
                v
                for v in sorted(members)
                if any(
                    u in core_vertices and u not in members
                    for u in graph.adjacency[v]
                )
            )
            for members in cycle_sets
        ]
        core_graph = graph.to_networkx().subgraph(mapping)
        path = tuple(nx.shortest_path(core_graph, contacts[0], contacts[1]))
    cycles = (
        _order_cycle(graph, cycle_sets[0], path[0]),
        _order_cycle(graph, cycle_sets[1], path[-1]),
    )

    base = set(mapping)
    root = [-1] * graph.n
    frontier = sorted(base)
    for v in frontier:
        root[v] = v
    while frontier:
        next_frontier = []
        for v in frontier:
            for u in graph.adjacency[v]:
                if root[u] == -1:
                    root[u] = root[v]
                    next_frontier.append(u)
        frontier = next_frontier
    logger.debug("Bicyclic structure: cycles=%s path=%s", cycles, path)
    return BicyclicStructure(cycles, path, tuple(root))


def identify_vertices(
    first: Graph, u1: int, second: Graph, u2: int
) -> tuple[Graph, int]:
    """Glue two graphs by merging ``u1`` of ``first`` with ``u2`` of ``second``.

    Vertices of ``first`` keep their indices (the merged vertex is ``u1``);
    the remaining vertices of ``second`` follow in their original order.
    """
    if not (0 <= u1 < first.n and 0 <= u2 < second.n):
        raise ParameterRangeError(
            f"Identification vertices ({u1}, {u2}) out of range "
            f"for graphs of order {first.n} and {second.n}"
        )
    relabel = {}
    next_index = first.n
    for v in range(second.n):
        if v == u2:
            relabel[v] = u1
        else:
            relabel[v] = next_index
            next_index += 1
    edges = set(first.edges)
    edges.update(normalize_edge(relabel[u], relabel[v]) for u, v in second.edges)
    return Graph(first.n + second.n - 1, frozenset(edges)), u1
