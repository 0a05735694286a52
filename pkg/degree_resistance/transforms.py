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

"""Graph surgeries on exactly-two-cycle bicyclic graphs.

Every surgery validates the structure it needs, returns a new :class:`Graph`
and preserves both the vertex count and the edge count. Inputs are never
mutated.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    CycleTooSmall,
    Disconnects,
    EdgeAbsent,
    EdgePresent,
    ParameterRangeError,
    PreconditionViolation,
)
from .graphs import (
    BicyclicStructure,
    Edge,
    Graph,
    bicyclic_structure,
    build_graph,
    is_connected,
    normalize_edge,
)
from .resistance import degree_resistance

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    DECREASED = "decreased"
    INCREASED = "increased"
    EQUAL = "equal"


@dataclass(frozen=True)
class TransformOutcome:
    before: Graph
    after: Graph
    dr_before: Fraction
    dr_after: Fraction

    @property
    def direction(self) -> Direction:
        if self.dr_after < self.dr_before:
            return Direction.DECREASED
        if self.dr_after > self.dr_before:
            return Direction.INCREASED
        return Direction.EQUAL


def compare(before: Graph, after: Graph) -> TransformOutcome:
    """Evaluate both graphs with the Laplacian solver."""
    if (before.n, before.m) != (after.n, after.m):
        raise ParameterRangeError(
            f"Surgery changed the graph size: ({before.n}, {before.m}) -> "
            f"({after.n}, {after.m})"
        )
    return TransformOutcome(
        before=before,
        after=after,
        dr_before=degree_resistance(before),
        dr_after=degree_resistance(after),
    )


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise ParameterRangeError(f"Vertex {v} out of range 0..{graph.n - 1}")


def _replace_edges(
    graph: Graph, removed: Iterable[Edge], added: Iterable[Edge]
) -> Graph:
    edges = set(graph.edges)
    edges.difference_update(normalize_edge(u, v) for u, v in removed)
    return build_graph(graph.n, [*edges, *added])


def pendant_neighbors(graph: Graph, v: int) -> list[int]:
    return [u for u in graph.adjacency[v] if graph.degree(u) == 1]


def _pendant_star(graph: Graph, v: int) -> tuple[BicyclicStructure, list[int], int]:
    """Pendants at ``v`` and its single non-pendant neighbour, which lies on a cycle."""
    _check_vertex(graph, v)
    structure = bicyclic_structure(graph)
    leaves = pendant_neighbors(graph, v)
    if not leaves:
        raise PreconditionViolation(f"Vertex {v} has no pendant neighbours")
    inner = [u for u in graph.adjacency[v] if graph.degree(u) > 1]
    if len(inner) != 1:
        raise PreconditionViolation(
            f"Vertex {v} must have exactly one non-pendant neighbour, has {len(inner)}"
        )
    (u,) = inner
    if structure.cycle_of(u) is None:
        raise PreconditionViolation(
            f"Non-pendant neighbour {u} of vertex {v} does not lie on a cycle"
        )
    return structure, leaves, u


def pull_pendants_to_cycle(graph: Graph, v: int) -> Graph:
    """Move every pendant of ``v`` onto its cycle neighbour ``u``."""
    _, leaves, u = _pendant_star(graph, v)
    return _replace_edges(
        graph, [(v, leaf) for leaf in leaves], [(u, leaf) for leaf in leaves]
    )


def stretch_pendants_into_path(graph: Graph, v: int) -> Graph:
    """Replace the pendant star at ``v`` by a path ``v, v1, ..., vs``.

    Pendants are chained in increasing index order; a single pendant leaves
    the graph unchanged.
    """
    _, leaves, _ = _pendant_star(graph, v)
    chain = [v, *leaves]
    return _replace_edges(
        graph,
        [(v, leaf) for leaf in leaves[1:]],
        list(zip(chain[1:-1], chain[2:])),
    )


def relocate_pendants(graph: Graph, u: int, w: int) -> Graph:
    """Move every pendant of cycle vertex ``u`` to the vertex shared by both cycles."""
    _check_vertex(graph, u)
    _check_vertex(graph, w)
    if u == w:
        raise PreconditionViolation(f"Source and target vertex are both {u}")
    structure = bicyclic_structure(graph)
    if not structure.shared:
        raise PreconditionViolation("The two cycles do not share a vertex")
    if w != structure.path[0]:
        raise PreconditionViolation(
            f"Vertex {w} is not the common vertex {structure.path[0]} of the cycles"
        )
    if structure.cycle_of(u) is None:
        raise PreconditionViolation(f"Vertex {u} does not lie on a cycle")
    leaves = pendant_neighbors(graph, u)
    if not leaves:
        raise PreconditionViolation(f"Vertex {u} has no pendant neighbours")
    return _replace_edges(
        graph, [(u, leaf) for leaf in leaves], [(w, leaf) for leaf in leaves]
    )


def rewire_edge(graph: Graph, remove: Edge, add: Edge) -> Graph:
    """Delete ``remove`` and insert ``add``; the result must stay connected."""
    removed = normalize_edge(*remove)
    if removed not in graph.edges:
        raise EdgeAbsent(f"Edge {remove} is not in the graph")
    added = normalize_edge(*add)
    if added != removed and added in graph.edges:
        raise EdgePresent(f"Edge {add} is already in the graph")
    result = _replace_edges(graph, [removed], [added])
    if not is_connected(result):
        raise Disconnects(f"Replacing {remove} by {add} disconnects the graph")
    return result


def _path_edge(structure: BicyclicStructure, edge: Edge) -> tuple[int, int]:
    """Endpoints of ``edge`` ordered along the joining path."""
    path = structure.path
    for near, far in zip(path, path[1:]):
        if normalize_edge(near, far) == normalize_edge(*edge):
            return near, far
    raise PreconditionViolation(f"Edge {edge} is not on the path joining the cycles")


def contract_to_pendant(graph: Graph, edge: Edge) -> Graph:
    """Contract a path edge and hang the freed vertex as a pendant.

    The endpoint nearer the first cycle absorbs the other endpoint's
    neighbours; the other endpoint stays attached to it as a pendant.
    """
    structure = bicyclic_structure(graph)
    if structure.shared:
        raise PreconditionViolation("The cycles share a vertex; there is no joining path")
    kept, freed = _path_edge(structure, edge)
    moved = [z for z in graph.adjacency[freed] if z != kept]
    return _replace_edges(
        graph, [(freed, z) for z in moved], [(kept, z) for z in moved]
    )


def _selected_cycle(structure: BicyclicStructure, which: int) -> tuple[int, ...]:
    index = structure.cycle_of(which)
    if index is None:
        raise PreconditionViolation(f"Vertex {which} does not lie on a cycle")
    if structure.shared and which == structure.path[0]:
        raise PreconditionViolation(
            f"Vertex {which} lies on both cycles; select a cycle by another vertex"
        )
    return structure.cycles[index]


def cycle_shrink(graph: Graph, which: int) -> Graph:
    """Shorten the cycle through ``which`` by one vertex.

    With shared vertex ``w``, the cycle neighbour ``u2`` of ``w`` is cut out
    and left hanging at ``w``. Otherwise ``w`` is the contact of the cycle
    with the path; ``w`` leaves the cycle and lengthens the path.
    """
    _check_vertex(graph, which)
    structure = bicyclic_structure(graph)
    cycle = _selected_cycle(structure, which)
    if len(cycle) == 3:
        raise CycleTooSmall(f"Cycle {list(cycle)} has length 3 and cannot shrink")
    w, u2 = cycle[0], cycle[1]
    if structure.shared:
        u1 = cycle[2]
        result = _replace_edges(graph, [(u1, u2)], [(w, u1)])
    else:
        u1 = cycle[-1]
        result = _replace_edges(graph, [(w, u2)], [(u1, u2)])
    logger.debug("Shrunk cycle %s at w=%d (u1=%d, u2=%d)", cycle, w, u1, u2)
    return result


def cycle_grow(graph: Graph, which: int) -> Graph:
    """Absorb the path vertex next to the selected cycle into that cycle.

    Inverse of :func:`cycle_shrink` on graphs whose cycles are joined by a path.
    """
    _check_vertex(graph, which)
    structure = bicyclic_structure(graph)
    if structure.shared:
        raise PreconditionViolation("The cycles share a vertex; there is no path to absorb")
    cycle = _selected_cycle(structure, which)
    contact, neighbor = cycle[0], cycle[1]
    path = structure.path
    absorbed = path[1] if contact == path[0] else path[-2]
    return _replace_edges(graph, [(contact, neighbor)], [(absorbed, neighbor)])
