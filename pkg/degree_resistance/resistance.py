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

"""Exact effective resistances and the distance-based indices built on them.

Every value is a :class:`fractions.Fraction`; nothing is ever rounded.
"""

import functools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    Disconnected,
    InvalidCycle,
    ParameterRangeError,
    PreconditionViolation,
)
from .graphs import Graph, is_connected, normalize_edge, shortest_distances

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class ResistanceMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        u, v = pair
        return self.entries[u][v]

    def row(self, v: int) -> tuple[Fraction, ...]:
        return self.entries[v]


@dataclass(frozen=True)
class VertexSums:
    """Resistance sum ``kf`` and degree-weighted resistance sum ``d`` at a vertex."""

    kf: Fraction
    d: Fraction


@dataclass(frozen=True)
class InvariantReport:
    wiener: Fraction
    kirchhoff: Fraction
    degree_distance: Fraction
    degree_resistance: Fraction
    per_vertex: tuple[VertexSums, ...]


@dataclass(frozen=True)
class CycleClosedForms:
    kf: Fraction
    dr: Fraction
    kf_v: Fraction
    d_v: Fraction


def _require_connected(graph: Graph) -> None:
    if graph.n < 1:
        raise ParameterRangeError("Resistance is undefined for the empty graph")
    if not is_connected(graph):
        raise Disconnected(
            f"Graph on {graph.n} vertices is disconnected; "
            "effective resistance is undefined across components"
        )


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals, first nonzero pivot per column."""
    size = len(matrix)
    work = [
        row[:] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise Disconnected("Reduced Laplacian is singular")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
        scale = 1 / work[col][col]
        pivot_row = [value * scale for value in work[col]]
        work[col] = pivot_row
        for r in range(size):
            factor = work[r][col]
            if r != col and factor != 0:
                work[r] = [a - factor * b for a, b in zip(work[r], pivot_row)]
    return [row[size:] for row in work]


@functools.lru_cache(maxsize=512)
def resistance_matrix(graph: Graph) -> ResistanceMatrix:
    """All-pairs effective resistance with every edge a unit resistor.

    Vertex 0 is grounded; the reduced Laplacian is inverted once and
    ``r(u, v) = M[u][u] + M[v][v] - 2 M[u][v]`` with the grounded row and
    column of ``M`` taken as zero.
    """
    _require_connected(graph)
    n = graph.n
    reduced = [[ZERO] * (n - 1) for _ in range(n - 1)]
    for v in range(1, n):
        reduced[v - 1][v - 1] = Fraction(graph.degree(v))
        for u in graph.adjacency[v]:
            if u != 0:
                reduced[v - 1][u - 1] = Fraction(-1)
    inverse = _invert(reduced) if n > 1 else []

    def grounded(u: int, v: int) -> Fraction:
        if u == 0 or v == 0:
            return ZERO
        return inverse[u - 1][v - 1]

    entries = tuple(
        tuple(
            ZERO if u == v else grounded(u, u) + grounded(v, v) - 2 * grounded(u, v)
            for v in range(n)
        )
        for u in range(n)
    )
    logger.debug("Solved reduced Laplacian of order %d", n - 1)
    return ResistanceMatrix(n, entries)


def effective_resistance(graph: Graph, u: int, v: int) -> Fraction:
    _require_connected(graph)
    if not (0 <= u < graph.n and 0 <= v < graph.n):
        raise ParameterRangeError(f"Vertices ({u}, {v}) out of range 0..{graph.n - 1}")
    if u == v:
        return ZERO
    return resistance_matrix(graph)[u, v]


def vertex_sums(graph: Graph, u: int) -> VertexSums:
    """``Kf_u`` and ``D_u`` of ``graph``, degrees taken in ``graph`` itself."""
    row = resistance_matrix(graph).row(u)
    return VertexSums(
        kf=sum(row, ZERO),
        d=sum((graph.degree(v) * r for v, r in enumerate(row)), ZERO),
    )


def invariants(graph: Graph) -> InvariantReport:
    resistances = resistance_matrix(graph)
    distances = shortest_distances(graph)
    degrees = graph.degrees()
    n = graph.n

    wiener = kirchhoff = degree_distance = degree_resistance = ZERO
    for u in range(n):
        for v in range(u + 1, n):
            weight = degrees[u] + degrees[v]
            hops = Fraction(int(distances[u][v]))
            r = resistances[u, v]
            wiener += hops
            kirchhoff += r
            degree_distance += weight * hops
            degree_resistance += weight * r
    per_vertex = tuple(vertex_sums(graph, v) for v in range(n))
    return InvariantReport(
        wiener=wiener,
        kirchhoff=kirchhoff,
        degree_distance=degree_distance,
        degree_resistance=degree_resistance,
        per_vertex=per_vertex,
    )


def degree_resistance(graph: Graph) -> Fraction:
    return invariants(graph).degree_resistance


def cycle_closed_forms(k: int) -> CycleClosedForms:
    if k < 3:
        raise InvalidCycle(f"Cycle length must be at least 3, got {k}")
    return CycleClosedForms(
        kf=Fraction(k**3 - k, 12),
        dr=Fraction(k**3 - k, 3),
        kf_v=Fraction(k**2 - 1, 6),
        d_v=Fraction(k**2 - 1, 3),
    )


def cycle_pair_resistance(k: int, i: int, j: int) -> Fraction:
    """Resistance between positions ``i < j`` (1-based) on a ``k``-cycle."""
    if k < 3:
        raise InvalidCycle(f"Cycle length must be at least 3, got {k}")
    if not 1 <= i < j <= k:
        raise ParameterRangeError(f"Positions must satisfy 1 <= i < j <= {k}, got ({i}, {j})")
    return Fraction((j - i) * (k + i - j), k)


def compose_identified(first: Graph, u1: int, second: Graph, u2: int) -> Fraction:
    """Degree resistance distance of the glued graph, from the parts alone."""
    _require_connected(first)
    _require_connected(second)
    at_first = vertex_sums(first, u1)
    at_second = vertex_sums(second, u2)
    return (
        degree_resistance(first)
        + degree_resistance(second)
        + 2 * second.m * at_first.kf
        + 2 * first.m * at_second.kf
        + (second.n - 1) * at_first.d
        + (first.n - 1) * at_second.d
    )


def find_cactus_cycles(n: int, adjacency: Sequence[Sequence[int]]) -> list[list[int]]:
    """Cycles of a connected cactus as vertex lists in cyclic order.

    Raises:
        PreconditionViolation: two cycles share an edge.
    """
    parent = [-1] * n
    depth = [-1] * n
    cycles: list[list[int]] = []
    depth[0] = 0
    stack = [(0, iter(adjacency[0]))]
    while stack:
        v, neighbors = stack[-1]
        advanced = False
        for u in neighbors:
            if depth[u] == -1:
                parent[u] = v
                depth[u] = depth[v] + 1
                stack.append((u, iter(adjacency[u])))
                advanced = True
                break
            if u != parent[v] and depth[u] < depth[v]:
                cycle = [v]
                while cycle[-1] != u:
                    cycle.append(parent[cycle[-1]])
                cycles.append(cycle)
        if not advanced:
            stack.pop()
    seen: set[tuple[int, int]] = set()
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            edge = normalize_edge(a, b)
            if edge in seen:
                raise PreconditionViolation("Graph is not a cactus: cycles share an edge")
            seen.add(edge)
    return cycles


def cactus_scaled_degree_resistance(
    n: int, adjacency: Sequence[Sequence[int]], cycles: list[list[int]]
) -> tuple[int, int]:
    """Integer ``(total, scale)`` with ``D_R == Fraction(total, scale)``.

    Resistances accumulate block by block from each source: a bridge adds one
    unit and a cycle block adds the pairwise cycle resistance between its entry
    vertex and each of its vertices.
    """
    scale = math.lcm(*(len(c) for c in cycles)) if cycles else 1
    membership: dict[tuple[int, int], int] = {}
    position: list[dict[int, int]] = []
    for index, cycle in enumerate(cycles):
        position.append({v: i for i, v in enumerate(cycle)})
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            membership[normalize_edge(a, b)] = index
    degree = [len(nbrs) for nbrs in adjacency]

    total = 0
    for source in range(n):
        distance = [-1] * n
        distance[source] = 0
        expanded = [False] * len(cycles)
        queue = [source]
        for x in queue:
            for y in adjacency[x]:
                index = membership.get(normalize_edge(x, y))
                if index is None:
                    if distance[y] == -1:
                        distance[y] = distance[x] + scale
                        queue.append(y)
                elif not expanded[index]:
                    expanded[index] = True
                    k = len(cycles[index])
                    here = position[index][x]
                    for v, there in position[index].items():
                        if v != x:
                            d = (there - here) % k
                            distance[v] = distance[x] + scale * d * (k - d) // k
                            queue.append(v)
        if len(queue) != n:
            raise Disconnected("Cactus resistance requires a connected graph")
        total += degree[source] * sum(distance)
    return total, scale


def cactus_degree_resistance(graph: Graph) -> Fraction:
    _require_connected(graph)
    cycles = find_cactus_cycles(graph.n, graph.adjacency)
    total, scale = cactus_scaled_degree_resistance(graph.n, graph.adjacency, cycles)
    return Fraction(total, scale)
