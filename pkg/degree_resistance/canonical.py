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

"""Canonical forms for small graphs.

The form is the smallest upper-triangle adjacency bit string over every vertex
ordering that survives degree-seeded partition refinement, with each
non-singleton cell individualised vertex by vertex. Isomorphic graphs yield
the same set of orderings up to relabelling, so their forms coincide.
"""

from collections.abc import Iterator, Sequence

from .errors import CanonicalizationLimit
from .graphs import Graph, normalize_edge

CanonicalForm = bytes

MAX_CANONICAL_ORDER = 10

Cells = list[list[int]]


def _refine(adjacency: Sequence[Sequence[int]], cells: Cells) -> Cells:
    while True:
        color = {v: i for i, cell in enumerate(cells) for v in cell}
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple(sorted(color[u] for u in adjacency[v]))
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[key] for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _orderings(adjacency: Sequence[Sequence[int]], cells: Cells) -> Iterator[list[int]]:
    cells = _refine(adjacency, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        yield [cell[0] for cell in cells]
        return
    for v in cells[target]:
        rest = [u for u in cells[target] if u != v]
        yield from _orderings(adjacency, [*cells[:target], [v], rest, *cells[target + 1 :]])


def _encode(graph: Graph, order: Sequence[int]) -> int:
    bits = 0
    for i, u in enumerate(order):
        for v in order[i + 1 :]:
            bits = (bits << 1) | (normalize_edge(u, v) in graph.edges)
    return bits


def _degree_cells(graph: Graph) -> Cells:
    by_degree: dict[int, list[int]] = {}
    for v in range(graph.n):
        by_degree.setdefault(graph.degree(v), []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


def canonical_order(graph: Graph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form and a vertex ordering that realises it.

    Raises:
        CanonicalizationLimit: the graph has more than ten vertices.
    """
    if graph.n > MAX_CANONICAL_ORDER:
        raise CanonicalizationLimit(
            f"Canonical forms are limited to {MAX_CANONICAL_ORDER} vertices, got {graph.n}"
        )
    if graph.n == 0:
        return bytes([0]), []
    best_bits, best_order = -1, []
    for order in _orderings(graph.adjacency, _degree_cells(graph)):
        bits = _encode(graph, order)
        if best_bits < 0 or bits < best_bits:
            best_bits, best_order = bits, order
    width = (graph.n * (graph.n - 1) // 2 + 7) // 8
    return bytes([graph.n]) + best_bits.to_bytes(width, "big"), best_order


def canonical_form(graph: Graph) -> CanonicalForm:
    return canonical_order(graph)[0]


def canonical_graph(graph: Graph) -> Graph:
    """Relabel ``graph`` so that its canonical ordering becomes ``0..n-1``."""
    _, order = canonical_order(graph)
    position = {v: i for i, v in enumerate(order)}
    return Graph(
        graph.n,
        frozenset(normalize_edge(position[u], position[v]) for u, v in graph.edges),
    )
