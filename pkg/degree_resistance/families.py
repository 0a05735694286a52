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

"""Named bicyclic families and their closed-form degree resistance distances.

Vertex numbering: first-cycle vertices, then second-cycle vertices, then the
interior of the joining path, then pendant or tree vertices. The contact of
the first cycle is vertex 0; with no joining path both cycles share vertex 0.
"""

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import networkx as nx

from .errors import GraphFormatError, InvalidCycle, ParameterRangeError
from .graphs import Edge, Graph, build_graph


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidCycle(f"Cycle length must be at least 3, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def make_path(k: int) -> Graph:
    """Path on ``k`` vertices numbered along the path."""
    if k < 1:
        raise ParameterRangeError(f"A path needs at least one vertex, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def _check_family(n: int, p: int, q: int) -> None:
    if p < 3 or q < 3:
        raise ParameterRangeError(f"Cycle lengths must be at least 3, got p={p}, q={q}")
    if n < p + q - 1:
        raise ParameterRangeError(
            f"n={n} is too small for cycles of length {p} and {q} (need n >= {p + q - 1})"
        )


def _base_edges(p: int, q: int, m: int) -> tuple[int, list[Edge]]:
    """Two cycles joined by an ``m``-edge path, sharing vertex 0 when ``m == 0``."""
    edges = [(i, (i + 1) % p) for i in range(p)]
    if m == 0:
        second = [0, *range(p, p + q - 1)]
        size = p + q - 1
    else:
        second = list(range(p, p + q))
        interior = list(range(p + q, p + q + m - 1))
        path = [0, *interior, p]
        edges.extend(zip(path, path[1:]))
        size = p + q + m - 1
    edges.extend(zip(second, second[1:] + second[:1]))
    return size, edges


def make_hub(n: int, p: int, q: int) -> Graph:
    """Cycles ``C_p`` and ``C_q`` sharing vertex 0, which carries ``n + 1 - p - q`` pendants."""
    _check_family(n, p, q)
    size, edges = _base_edges(p, q, 0)
    edges.extend((0, leaf) for leaf in range(size, n))
    return build_graph(n, edges)


def make_dumbbell(n: int, p: int, q: int) -> Graph:
    """Disjoint ``C_p`` and ``C_q`` joined by a path with ``n + 1 - p - q`` edges."""
    _check_family(n, p, q)
    m = n + 1 - p - q
    if m == 0:
        return make_hub(n, p, q)
    size, edges = _base_edges(p, q, m)
    return build_graph(size, edges)


_ROLE = re.compile(r"^(c1|c2|path):(\d+)$")


@dataclass(frozen=True)
class Attachment:
    """A rooted tree hung at a base vertex; tree vertex 0 is the root."""

    at: str
    tree_edges: tuple[Edge, ...] = ()

    @property
    def size(self) -> int:
        return len(self.tree_edges) + 1


@dataclass(frozen=True)
class BicyclicShape:
    p: int
    q: int
    m: int
    attachments: tuple[Attachment, ...] = field(default_factory=tuple)

    @property
    def n(self) -> int:
        return self.p + self.q + self.m - 1 + sum(a.size - 1 for a in self.attachments)

    def base_vertex(self, role: str) -> int:
        match = _ROLE.match(role)
        if not match:
            raise GraphFormatError(
                f"Unknown base vertex role {role!r}; use 'c1:i', 'c2:j' or 'path:k'"
            )
        kind, index = match.group(1), int(match.group(2))
        if kind == "c1":
            if index >= self.p:
                raise GraphFormatError(f"{role}: first cycle has positions 0..{self.p - 1}")
            return index
        if kind == "c2":
            if index >= self.q:
                raise GraphFormatError(f"{role}: second cycle has positions 0..{self.q - 1}")
            if self.m == 0:
                return 0 if index == 0 else self.p + index - 1
            return self.p + index
        if index > self.m:
            raise GraphFormatError(f"{role}: path has positions 0..{self.m}")
        if index == 0:
            return 0
        if index == self.m:
            return self.p
        return self.p + self.q + index - 1

    @classmethod
    def from_dict(cls, data: Any) -> "BicyclicShape":
        if not isinstance(data, Mapping):
            raise GraphFormatError(
                f"Shape description must be an object, got {type(data).__name__}"
            )
        try:
            attachments = tuple(
                Attachment(
                    at=str(item["at"]),
                    tree_edges=tuple(
                        (int(u), int(v)) for u, v in item.get("tree_edges", [])
                    ),
                )
                for item in data.get("attachments", [])
            )
            return cls(int(data["p"]), int(data["q"]), int(data["m"]), attachments)
        except (AttributeError, KeyError, TypeError, ValueError) as e:
            raise GraphFormatError(f"Malformed shape description: {e}") from e

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "m": self.m,
            "attachments": [
                {"at": a.at, "tree_edges": [list(edge) for edge in a.tree_edges]}
                for a in self.attachments
            ],
        }


def _validate_tree(attachment: Attachment) -> None:
    tree = nx.Graph()
    tree.add_node(0)
    tree.add_edges_from(attachment.tree_edges)
    if set(tree.nodes) != set(range(attachment.size)) or not nx.is_tree(tree):
        raise GraphFormatError(
            f"Attachment at {attachment.at} is not a tree on vertices "
            f"0..{attachment.size - 1}"
        )


def make_bicyclic(shape: BicyclicShape) -> Graph:
    """General member of the two-cycle family described by ``shape``."""
    if shape.p < 3 or shape.q < 3:
        raise ParameterRangeError(
            f"Cycle lengths must be at least 3, got p={shape.p}, q={shape.q}"
        )
    if shape.m < 0:
        raise ParameterRangeError(f"Path length must be non-negative, got {shape.m}")
    size, edges = _base_edges(shape.p, shape.q, shape.m)
    for attachment in shape.attachments:
        _validate_tree(attachment)
        root = shape.base_vertex(attachment.at)
        relabel = {0: root}
        for t in range(1, attachment.size):
            relabel[t] = size
            size += 1
        edges.extend((relabel[u], relabel[v]) for u, v in attachment.tree_edges)
    return build_graph(size, edges)


def hub_closed_form(n: int, p: int, q: int) -> Fraction:
    _check_family(n, p, q)
    return Fraction(
        -(p**3)
        - q**3
        + (2 * n + 1) * (p**2 + q**2)
        + (1 - 9 * n) * (p + q)
        + 9 * n**2
        + 5 * n
        - 2,
        3,
    )


@dataclass(frozen=True)
class DumbbellClosedForm:
    """``raw`` is the expression in ``(p, q, m)``; ``n_form`` is its printed
    substitution in ``n``, which does not agree with it."""

    raw: Fraction
    n_form: Fraction

    @property
    def discrepancy(self) -> Fraction:
        return self.n_form - self.raw


def dumbbell_closed_form(n: int, p: int, q: int) -> DumbbellClosedForm:
    _check_family(n, p, q)
    m = n + 1 - p - q
    raw = Fraction(
        p**3
        + q**3
        + (2 * q + 2 * m - 1) * p**2
        + (2 * p + 2 * m - 1) * q**2
        + (6 * m**2 - 3 * m - 3) * (p + q)
        + 12 * m * p * q
        + 2 * m**3
        - 3 * m**2
        - 3 * m
        + 2,
        3,
    )
    n_form = Fraction(
        3 * p**3
        + 3 * q**3
        + (4 * n + 5) * (p**2 + q**2)
        + (3 * n + 3) * (p + q)
        + 2 * n**3
        + 3 * n**2
        - 3 * n
        - 2,
        3,
    )
    return DumbbellClosedForm(raw=raw, n_form=n_form)


def _check_extremal_order(n: int) -> None:
    if n < 5:
        raise ParameterRangeError(f"Extremal formulas need n >= 5, got {n}")


def min_closed_form(n: int) -> Fraction:
    """Smallest degree resistance distance over n-vertex two-cycle bicyclic graphs."""
    _check_extremal_order(n)
    return 3 * Fraction(n) ** 2 - Fraction(13, 3) * n - Fraction(32, 3)


def max_closed_form(n: int) -> Fraction:
    """Largest degree resistance distance over n-vertex two-cycle bicyclic graphs."""
    _check_extremal_order(n)
    return Fraction(2, 3) * Fraction(n) ** 3 + n**2 - 19 * n + Fraction(88, 3)


def family_ranges(
    cycle_lengths: Sequence[int], max_n: int
) -> list[tuple[int, int, int]]:
    """Every ``(n, p, q)`` with ``p <= q`` drawn from ``cycle_lengths`` and ``n <= max_n``."""
    return [
        (n, p, q)
        for p in cycle_lengths
        for q in cycle_lengths
        if p <= q
        for n in range(p + q - 1, max_n + 1)
    ]
