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

"""Exhaustive enumeration of small bicyclic graphs and extremal search.

Labeled graphs are generated as ``(n + 1)``-subsets of the edges of ``K_n``.
The subset space is split by its two smallest edges into disjoint prefixes;
each prefix is scanned independently and partial results are merged in
prefix order, so reports do not depend on the worker count.
"""

import functools
import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .canonical import CanonicalForm, canonical_form, canonical_graph
from .errors import EnumerationRangeError, ParameterRangeError, PreconditionViolation
from .families import (
    BicyclicShape,
    dumbbell_closed_form,
    hub_closed_form,
    make_bicyclic,
    make_dumbbell,
    make_hub,
    max_closed_form,
    min_closed_form,
)
from .graphs import Edge, Graph, normalize_edge
from .resistance import (
    cactus_scaled_degree_resistance,
    degree_resistance,
    find_cactus_cycles,
)

logger = logging.getLogger(__name__)

MIN_ORDER = 5
DEFAULT_MAX_ORDER = 8
MAX_ORDER = 9

Prefix = tuple[int, int]
ProgressCallback = Callable[[int], None]


class Population(str, Enum):
    TWO_CYCLES = "two-cycle"
    ALL_BICYCLIC = "all"


def check_order(n: int, allow_large: bool = False) -> None:
    upper = MAX_ORDER if allow_large else DEFAULT_MAX_ORDER
    if not MIN_ORDER <= n <= upper:
        hint = "" if allow_large or n != MAX_ORDER else " (n=9 needs allow_large)"
        raise EnumerationRangeError(
            f"Enumeration supports {MIN_ORDER} <= n <= {upper}, got {n}{hint}"
        )


def _edge_table(n: int) -> list[Edge]:
    return list(itertools.combinations(range(n), 2))


def prefixes(n: int) -> list[Prefix]:
    """Pairs of smallest edge indices that leave room for ``n - 1`` more edges."""
    total = n * (n - 1) // 2
    return [
        (i, j)
        for i, j in itertools.combinations(range(total), 2)
        if total - j - 1 >= n - 1
    ]


Candidate = tuple[tuple[Edge, ...], list[list[int]], list[list[int]] | None]


def _scan(n: int, population: Population, prefix: Prefix) -> Iterator[Candidate]:
    """Connected ``(n + 1)``-edge graphs starting with ``prefix``.

    Yields the edges, adjacency lists and cactus cycles; cycles are ``None``
    for theta graphs, which only the all-bicyclic population keeps.
    """
    table = _edge_table(n)
    full = (1 << n) - 1
    i, j = prefix
    for rest in itertools.combinations(range(j + 1, len(table)), n - 1):
        masks = [0] * n
        for index in (i, j, *rest):
            u, v = table[index]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        if 0 in masks:
            continue
        seen = frontier = 1
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= masks[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & ~seen
            seen |= frontier
        if seen != full:
            continue
        adjacency = [[u for u in range(n) if mask >> u & 1] for mask in masks]
        cycles: list[list[int]] | None
        try:
            cycles = find_cactus_cycles(n, adjacency)
        except PreconditionViolation:
            if population is Population.TWO_CYCLES:
                continue
            cycles = None
        yield tuple(table[index] for index in (i, j, *rest)), adjacency, cycles


def enumerate_bicyclic(
    n: int,
    population: Population = Population.TWO_CYCLES,
    *,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Every labeled bicyclic graph on ``n`` vertices in the given population."""
    check_order(n, allow_large)
    for prefix in prefixes(n):
        for edges, _, _ in _scan(n, population, prefix):
            yield Graph(n, frozenset(edges))


@dataclass
class _Extremes:
    count: int = 0
    min_value: Fraction | None = None
    max_value: Fraction | None = None
    min_attainers: list[tuple[Edge, ...]] = field(default_factory=list)
    max_attainers: list[tuple[Edge, ...]] = field(default_factory=list)
    forms: set[CanonicalForm] = field(default_factory=set)

    def offer(self, value: Fraction, edges: tuple[Edge, ...]) -> None:
        self.count += 1
        if self.min_value is None or value < self.min_value:
            self.min_value, self.min_attainers = value, [edges]
        elif value == self.min_value:
            self.min_attainers.append(edges)
        if self.max_value is None or value > self.max_value:
            self.max_value, self.max_attainers = value, [edges]
        elif value == self.max_value:
            self.max_attainers.append(edges)

    def merge(self, other: "_Extremes") -> None:
        self.count += other.count
        self.forms |= other.forms
        if other.min_value is not None:
            if self.min_value is None or other.min_value < self.min_value:
                self.min_value, self.min_attainers = other.min_value, list(
                    other.min_attainers
                )
            elif other.min_value == self.min_value:
                self.min_attainers.extend(other.min_attainers)
        if other.max_value is not None:
            if self.max_value is None or other.max_value > self.max_value:
                self.max_value, self.max_attainers = other.max_value, list(
                    other.max_attainers
                )
            elif other.max_value == self.max_value:
                self.max_attainers.extend(other.max_attainers)


def _search_prefix(
    n: int,
    population: Population,
    cycle_lengths: tuple[int, int] | None,
    iso_classes: bool,
    prefix: Prefix,
) -> _Extremes:
    extremes = _Extremes()
    for edges, adjacency, cycles in _scan(n, population, prefix):
        if cycles is None:
            value = degree_resistance(Graph(n, frozenset(edges)))
        else:
            if cycle_lengths is not None and (
                tuple(sorted(len(c) for c in cycles)) != cycle_lengths
            ):
                continue
            value = Fraction(*cactus_scaled_degree_resistance(n, adjacency, cycles))
        extremes.offer(value, edges)
        if iso_classes:
            extremes.forms.add(canonical_form(Graph(n, frozenset(edges))))
    return extremes


def _run_search(
    n: int,
    population: Population,
    *,
    cycle_lengths: tuple[int, int] | None = None,
    jobs: int = 1,
    iso_classes: bool = False,
    progress: ProgressCallback | None = None,
) -> _Extremes:
    if jobs < 1:
        raise ParameterRangeError(f"Worker count must be at least 1, got {jobs}")
    worker = functools.partial(_search_prefix, n, population, cycle_lengths, iso_classes)
    work = prefixes(n)
    merged = _Extremes()
    logger.info("Scanning %d prefixes for n=%d with %d worker(s)", len(work), n, jobs)
    if jobs == 1:
        partials: Iterator[_Extremes] = map(worker, work)
        for partial in partials:
            merged.merge(partial)
            if progress:
                progress(1)
        return merged
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for partial in executor.map(worker, work):
            merged.merge(partial)
            if progress:
                progress(1)
    return merged


def _attainer_classes(
    n: int, attainers: Sequence[tuple[Edge, ...]], value: Fraction
) -> tuple[Graph, ...]:
    """One canonical graph per isomorphism class, each re-checked by the solver."""
    classes: dict[CanonicalForm, Graph] = {}
    for edges in attainers:
        graph = canonical_graph(Graph(n, frozenset(edges)))
        classes.setdefault(canonical_form(graph), graph)
    for graph in classes.values():
        solved = degree_resistance(graph)
        if solved != value:
            raise RuntimeError(
                f"Fast path reported {value} but the Laplacian solver gives {solved} "
                f"for edges {graph.sorted_edges()}"
            )
    return tuple(classes[form] for form in sorted(classes))


def _is_only(attainers: tuple[Graph, ...], expected: Graph) -> bool:
    return len(attainers) == 1 and canonical_form(attainers[0]) == canonical_form(
        expected
    )


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    population: Population
    count_labeled: int
    min_value: Fraction
    max_value: Fraction
    min_attainers: tuple[Graph, ...]
    max_attainers: tuple[Graph, ...]
    formula_min: Fraction
    formula_max: Fraction
    min_is_hub: bool
    max_is_dumbbell: bool
    count_iso_classes: int | None = None

    @property
    def agrees_min(self) -> bool:
        return self.min_value == self.formula_min

    @property
    def agrees_max(self) -> bool:
        return self.max_value == self.formula_max

    @property
    def passed(self) -> bool:
        """Extremal values and unique attainers match the hub and dumbbell graphs.

        Only the two-cycle population is held to this; the all-bicyclic
        population is informational and always passes.
        """
        if self.population is Population.ALL_BICYCLIC:
            return True
        return (
            self.agrees_min
            and self.agrees_max
            and self.min_is_hub
            and self.max_is_dumbbell
        )


def extremal_search(
    n: int,
    population: Population = Population.TWO_CYCLES,
    *,
    jobs: int = 1,
    allow_large: bool = False,
    iso_classes: bool = False,
    progress: ProgressCallback | None = None,
) -> ExtremalReport:
    """Exact minimum and maximum degree resistance distance over a population."""
    check_order(n, allow_large)
    found = _run_search(
        n, population, jobs=jobs, iso_classes=iso_classes, progress=progress
    )
    assert found.min_value is not None and found.max_value is not None
    min_attainers = _attainer_classes(n, found.min_attainers, found.min_value)
    max_attainers = _attainer_classes(n, found.max_attainers, found.max_value)
    return ExtremalReport(
        n=n,
        population=population,
        count_labeled=found.count,
        min_value=found.min_value,
        max_value=found.max_value,
        min_attainers=min_attainers,
        max_attainers=max_attainers,
        formula_min=min_closed_form(n),
        formula_max=max_closed_form(n),
        min_is_hub=_is_only(min_attainers, make_hub(n, 3, 3)),
        max_is_dumbbell=_is_only(max_attainers, make_dumbbell(n, 3, 3)),
        count_iso_classes=len(found.forms) if iso_classes else None,
    )


@dataclass(frozen=True)
class WithinClassReport:
    n: int
    p: int
    q: int
    count_labeled: int
    min_value: Fraction
    max_value: Fraction
    min_attainers: tuple[Graph, ...]
    max_attainers: tuple[Graph, ...]
    hub_value: Fraction
    dumbbell_value: Fraction
    min_is_hub: bool
    max_is_dumbbell: bool

    @property
    def passed(self) -> bool:
        return (
            self.min_is_hub
            and self.max_is_dumbbell
            and self.min_value == self.hub_value
            and self.max_value == self.dumbbell_value
        )


def verify_within_class(
    n: int,
    p: int,
    q: int,
    *,
    jobs: int = 1,
    allow_large: bool = False,
    progress: ProgressCallback | None = None,
) -> WithinClassReport:
    """Check that the hub graph is the unique minimiser and the dumbbell graph
    the unique maximiser among graphs whose cycles have lengths ``p`` and ``q``."""
    check_order(n, allow_large)
    p, q = sorted((p, q))
    hub, dumbbell = make_hub(n, p, q), make_dumbbell(n, p, q)
    found = _run_search(
        n,
        Population.TWO_CYCLES,
        cycle_lengths=(p, q),
        jobs=jobs,
        progress=progress,
    )
    assert found.min_value is not None and found.max_value is not None
    min_attainers = _attainer_classes(n, found.min_attainers, found.min_value)
    max_attainers = _attainer_classes(n, found.max_attainers, found.max_value)
    return WithinClassReport(
        n=n,
        p=p,
        q=q,
        count_labeled=found.count,
        min_value=found.min_value,
        max_value=found.max_value,
        min_attainers=min_attainers,
        max_attainers=max_attainers,
        hub_value=hub_closed_form(n, p, q),
        dumbbell_value=dumbbell_closed_form(n, p, q).raw,
        min_is_hub=_is_only(min_attainers, hub),
        max_is_dumbbell=_is_only(max_attainers, dumbbell),
    )


def feasible_classes(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(3, n) for q in range(p, n) if p + q - 1 <= n]


def _with_leaf(graph: Graph, v: int) -> Graph:
    return Graph(graph.n + 1, graph.edges | {normalize_edge(v, graph.n)})


def grow_from_bases(n: int) -> dict[CanonicalForm, Graph]:
    """Every isomorphism class of two-cycle bicyclic graphs on ``n`` vertices.

    Starts from each bare base (two cycles plus joining path) and adds one
    leaf at a time, deduplicating by canonical form after every step.
    """
    if n < MIN_ORDER:
        raise EnumerationRangeError(f"Constructive enumeration needs n >= {MIN_ORDER}")
    result: dict[CanonicalForm, Graph] = {}
    for p, q in feasible_classes(n):
        for m in range(0, n - p - q + 2):
            level = {}
            base = make_bicyclic(BicyclicShape(p, q, m))
            level[canonical_form(base)] = base
            for _ in range(base.n, n):
                grown: dict[CanonicalForm, Graph] = {}
                for graph in level.values():
                    for v in range(graph.n):
                        child = _with_leaf(graph, v)
                        grown.setdefault(canonical_form(child), child)
                level = grown
            result.update(level)
    logger.debug("Constructed %d classes on %d vertices", len(result), n)
    return result
