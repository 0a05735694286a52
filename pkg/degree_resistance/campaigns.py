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

"""Seeded property campaigns for the resistance engine and the surgeries."""

import itertools
import logging
import random
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any

import networkx as nx

from .errors import ParameterRangeError
from .families import (
    Attachment,
    BicyclicShape,
    dumbbell_closed_form,
    family_ranges,
    hub_closed_form,
    make_bicyclic,
    make_cycle,
    make_dumbbell,
    make_hub,
    max_closed_form,
    min_closed_form,
)
from .graphs import Graph, build_graph, cut_vertices, identify_vertices
from .resistance import (
    compose_identified,
    cycle_closed_forms,
    cycle_pair_resistance,
    degree_resistance,
    effective_resistance,
    invariants,
    resistance_matrix,
)
from .transforms import (
    Direction,
    TransformOutcome,
    compare,
    contract_to_pendant,
    pull_pendants_to_cycle,
    relocate_pendants,
    rewire_edge,
    stretch_pendants_into_path,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20160101
MAX_RECORDED_FAILURES = 5


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = DEFAULT_SEED
    transform_instances: int = 200
    additivity_instances: int = 100
    composition_instances: int = 100
    sanity_instances: int = 200
    tree_instances: int = 100
    cycle_lengths: tuple[int, ...] = (3, 4, 5)
    pendant_counts: tuple[int, ...] = (1, 2, 3)
    path_lengths: tuple[int, ...] = (1, 2, 3)
    max_block_order: int = 7
    max_part_order: int = 8
    max_cycle_length: int = 30
    max_random_order: int = 10
    max_tree_order: int = 12
    claim_max_order: int = 10

    def __post_init__(self) -> None:
        if not self.cycle_lengths or min(self.cycle_lengths) < 3:
            raise ParameterRangeError(
                f"cycle_lengths must be non-empty and at least 3, got {self.cycle_lengths}"
            )
        if not self.pendant_counts or min(self.pendant_counts) < 1:
            raise ParameterRangeError(
                f"pendant_counts must be non-empty and positive, got {self.pendant_counts}"
            )
        if not self.path_lengths or min(self.path_lengths) < 1:
            raise ParameterRangeError(
                f"path_lengths must be non-empty and positive, got {self.path_lengths}"
            )

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "CampaignConfig":
        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ParameterRangeError(
                f"Unknown campaign setting(s): {', '.join(unknown)}; "
                f"expected any of {', '.join(sorted(known))}"
            )
        values: dict[str, Any] = {}
        for key, value in data.items():
            if isinstance(value, list | tuple):
                values[key] = tuple(int(v) for v in value)
            else:
                values[key] = int(value)
        return cls(**values)


@dataclass(frozen=True)
class Counterexample:
    description: str
    graphs: tuple[Graph, ...]
    values: tuple[Fraction, ...]


@dataclass
class SuiteResult:
    """Tally of one campaign; ``equal`` counts boundary cases excluded from strictness."""

    name: str
    checked: int = 0
    strict: int = 0
    equal: int = 0
    failures: list[Counterexample] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, description: str, graphs: Iterable[Graph], values: Iterable[Fraction]) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(Counterexample(description, tuple(graphs), tuple(values)))

    def expect(self, outcome: TransformOutcome, direction: Direction, description: str) -> None:
        self.checked += 1
        if outcome.direction is direction:
            self.strict += 1
        else:
            self.fail(
                f"{description}: expected {direction.value}, got {outcome.direction.value}",
                (outcome.before, outcome.after),
                (outcome.dr_before, outcome.dr_after),
            )


@dataclass(frozen=True)
class CampaignReport:
    seed: int | None
    suites: tuple[SuiteResult, ...]

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)


def random_tree(rng: random.Random, n: int) -> Graph:
    return build_graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_connected_graph(
    rng: random.Random, n: int, extra_probability: float = 0.3
) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra_probability:
            edges.add((u, v))
    return build_graph(n, edges)


def relabel(rng: random.Random, graph: Graph) -> tuple[Graph, list[int]]:
    """Randomly permuted copy of ``graph`` and the old-to-new vertex map."""
    permutation = list(range(graph.n))
    rng.shuffle(permutation)
    return (
        build_graph(graph.n, [(permutation[u], permutation[v]) for u, v in graph.edges]),
        permutation,
    )


def _star(s: int, hub: int = 0) -> tuple[tuple[int, int], ...]:
    offset = 1 if hub == 0 else 2
    return tuple((hub, leaf) for leaf in range(offset, offset + s))


def _cycle_role(rng: random.Random, shape_p: int, shape_q: int, allow_contact: bool) -> str:
    side, length = rng.choice((("c1", shape_p), ("c2", shape_q)))
    low = 0 if allow_contact else 1
    return f"{side}:{rng.randrange(low, length)}"


def _cut_vertex_additivity(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("cut-vertex-additivity")
    for _ in range(config.additivity_instances):
        first = random_connected_graph(rng, rng.randint(2, config.max_block_order))
        second = random_connected_graph(rng, rng.randint(2, config.max_block_order))
        graph, _ = identify_vertices(
            first, rng.randrange(first.n), second, rng.randrange(second.n)
        )
        resistances = resistance_matrix(graph)
        for x in sorted(cut_vertices(graph)):
            rest = graph.to_networkx()
            rest.remove_node(x)
            components = [sorted(c) for c in nx.connected_components(rest)]
            for left, right in itertools.combinations(components, 2):
                for a, b in itertools.product(left, right):
                    suite.checked += 1
                    through = resistances[a, x] + resistances[x, b]
                    if resistances[a, b] == through:
                        suite.strict += 1
                    else:
                        suite.fail(
                            f"r({a},{b}) != r({a},{x}) + r({x},{b})",
                            (graph,),
                            (resistances[a, b], through),
                        )
    return suite


def _cycle_closed_forms(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("cycle-closed-forms")
    for k in range(3, config.max_cycle_length + 1):
        cycle = make_cycle(k)
        report = invariants(cycle)
        expected = cycle_closed_forms(k)
        observed = [
            (report.kirchhoff, expected.kf),
            (report.degree_resistance, expected.dr),
            *((sums.kf, expected.kf_v) for sums in report.per_vertex),
            *((sums.d, expected.d_v) for sums in report.per_vertex),
            *(
                (effective_resistance(cycle, i, j), cycle_pair_resistance(k, i + 1, j + 1))
                for i, j in itertools.combinations(range(k), 2)
            ),
        ]
        suite.checked += 1
        mismatches = [(got, want) for got, want in observed if got != want]
        if mismatches:
            got, want = mismatches[0]
            suite.fail(f"C_{k}: {len(mismatches)} mismatching value(s)", (cycle,), (got, want))
        else:
            suite.strict += 1
    return suite


def _identification_composition(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("identification-composition")
    for _ in range(config.composition_instances):
        first = random_connected_graph(rng, rng.randint(2, config.max_part_order))
        second = random_connected_graph(rng, rng.randint(2, config.max_part_order))
        u1, u2 = rng.randrange(first.n), rng.randrange(second.n)
        glued, _ = identify_vertices(first, u1, second, u2)
        composed = compose_identified(first, u1, second, u2)
        direct = degree_resistance(glued)
        suite.checked += 1
        if composed == direct:
            suite.strict += 1
        else:
            suite.fail(
                f"glued at ({u1}, {u2}): composed value differs from direct value",
                (first, second, glued),
                (composed, direct),
            )
    return suite


def _pendant_star_instance(
    config: CampaignConfig, rng: random.Random
) -> tuple[Graph, int, int]:
    """Hub base with a star centre ``v`` hung at a cycle vertex; returns (graph, v, s)."""
    p, q = rng.choice(config.cycle_lengths), rng.choice(config.cycle_lengths)
    s = rng.choice(config.pendant_counts)
    tree = ((0, 1), *_star(s, hub=1))
    shape = BicyclicShape(p, q, 0, (Attachment(_cycle_role(rng, p, q, True), tree),))
    graph, permutation = relabel(rng, make_bicyclic(shape))
    return graph, permutation[p + q - 1], s


def _pull_pendants(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("pull-pendants")
    for _ in range(config.transform_instances):
        graph, v, s = _pendant_star_instance(config, rng)
        outcome = compare(graph, pull_pendants_to_cycle(graph, v))
        suite.expect(outcome, Direction.DECREASED, f"pull {s} pendant(s) at {v}")
    return suite


def _stretch_pendants(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("stretch-pendants")
    for _ in range(config.transform_instances):
        graph, v, s = _pendant_star_instance(config, rng)
        outcome = compare(graph, stretch_pendants_into_path(graph, v))
        if s == 1:
            if outcome.direction is Direction.EQUAL:
                suite.equal += 1
            else:
                suite.fail(
                    f"stretch a single pendant at {v}: expected equal",
                    (outcome.before, outcome.after),
                    (outcome.dr_before, outcome.dr_after),
                )
            continue
        suite.expect(outcome, Direction.INCREASED, f"stretch {s} pendants at {v}")
    return suite


def _relocate_pendants(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("relocate-pendants")
    for _ in range(config.transform_instances):
        p, q = rng.choice(config.cycle_lengths), rng.choice(config.cycle_lengths)
        s = rng.choice(config.pendant_counts)
        role = _cycle_role(rng, p, q, False)
        shape = BicyclicShape(p, q, 0, (Attachment(role, _star(s)),))
        graph, permutation = relabel(rng, make_bicyclic(shape))
        u, w = permutation[shape.base_vertex(role)], permutation[0]
        outcome = compare(graph, relocate_pendants(graph, u, w))
        suite.expect(outcome, Direction.DECREASED, f"relocate {s} pendant(s) from {u} to {w}")
    return suite


def _shorten_path(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    """Detach the path vertex next to a cycle contact and hang it on that cycle."""
    suite = SuiteResult("shorten-path")
    lengths = [m for m in config.path_lengths if m >= 2]
    if not lengths:
        return suite
    for _ in range(config.transform_instances):
        p, q = rng.choice(config.cycle_lengths), rng.choice(config.cycle_lengths)
        m = rng.choice(lengths)
        shape = BicyclicShape(p, q, m)
        path = [shape.base_vertex(f"path:{k}") for k in range(m + 1)]
        side, length = rng.choice((("c1", p), ("c2", q)))
        if side == "c2":
            path.reverse()
        w, a, b = path[0], path[1], path[2]
        u = shape.base_vertex(f"{side}:{rng.randrange(1, length)}")
        graph, permutation = relabel(rng, make_bicyclic(shape))
        w, a, b, u = (permutation[x] for x in (w, a, b, u))

        literal = compare(graph, rewire_edge(graph, (a, w), (a, u)))
        if literal.direction is Direction.EQUAL:
            suite.equal += 1
        shortened = rewire_edge(graph, (a, b), (w, b))
        outcome = compare(graph, rewire_edge(shortened, (a, w), (a, u)))
        suite.expect(outcome, Direction.DECREASED, f"shorten path at {w}, hang {a} at {u}")
    return suite


def _path_contraction(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("path-contraction")
    for n, p, q in family_ranges(config.cycle_lengths, config.claim_max_order):
        if n == p + q - 1:
            continue
        graph = make_dumbbell(n, p, q)
        m = n + 1 - p - q
        path = [BicyclicShape(p, q, m).base_vertex(f"path:{k}") for k in range(m + 1)]
        for edge in zip(path, path[1:]):
            outcome = compare(graph, contract_to_pendant(graph, edge))
            suite.expect(outcome, Direction.DECREASED, f"contract {edge} in P({n},{p},{q})")
    return suite


def _path_extension(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    """Splice a pendant path hanging at a path vertex into the joining path."""
    suite = SuiteResult("path-extension")
    for p, q in itertools.combinations_with_replacement(sorted(config.cycle_lengths), 2):
        for m in range(1, config.claim_max_order - p - q + 2):
            base_order = p + q + m - 1
            for t in range(1, config.claim_max_order - base_order + 1):
                for j in range(m + 1):
                    tree = tuple((i, i + 1) for i in range(t))
                    shape = BicyclicShape(p, q, m, (Attachment(f"path:{j}", tree),))
                    graph = make_bicyclic(shape)
                    w_j = shape.base_vertex(f"path:{j}")
                    neighbor = shape.base_vertex(f"path:{j + 1 if j < m else j - 1}")
                    end = graph.n - 1
                    outcome = compare(graph, rewire_edge(graph, (w_j, neighbor), (end, neighbor)))
                    suite.expect(
                        outcome,
                        Direction.INCREASED,
                        f"splice a {t}-edge pendant path at path:{j} of ({p},{q},{m})",
                    )
    return suite


def _foster_identity(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("foster-identity")
    for _ in range(config.sanity_instances):
        graph = random_connected_graph(rng, rng.randint(2, config.max_random_order))
        resistances = resistance_matrix(graph)
        total = sum((resistances[u, v] for u, v in graph.edges), Fraction(0))
        suite.checked += 1
        if total == graph.n - 1:
            suite.strict += 1
        else:
            suite.fail("edge resistances do not sum to n - 1", (graph,), (total,))
    return suite


def _rayleigh_monotonicity(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("rayleigh-monotonicity")
    for _ in range(config.sanity_instances):
        graph = random_connected_graph(rng, rng.randint(3, config.max_random_order))
        missing = [
            pair
            for pair in itertools.combinations(range(graph.n), 2)
            if pair not in graph.edges
        ]
        if not missing:
            continue
        denser = build_graph(graph.n, [*graph.edges, rng.choice(missing)])
        before, after = resistance_matrix(graph), resistance_matrix(denser)
        suite.checked += 1
        raised = [
            (u, v)
            for u, v in itertools.combinations(range(graph.n), 2)
            if after[u, v] > before[u, v]
        ]
        if raised:
            u, v = raised[0]
            suite.fail(
                f"adding an edge raised r({u},{v})", (graph, denser), (before[u, v], after[u, v])
            )
        else:
            suite.strict += 1
    return suite


def _tree_degeneration(config: CampaignConfig, rng: random.Random) -> SuiteResult:
    suite = SuiteResult("tree-degeneration")
    for _ in range(config.tree_instances):
        tree = random_tree(rng, rng.randint(2, config.max_tree_order))
        report = invariants(tree)
        suite.checked += 1
        if report.kirchhoff == report.wiener and report.degree_resistance == report.degree_distance:
            suite.strict += 1
        else:
            suite.fail(
                "resistance indices differ from distance indices on a tree",
                (tree,),
                (report.kirchhoff, report.wiener, report.degree_resistance, report.degree_distance),
            )
    return suite


Suite = Callable[[CampaignConfig, random.Random], SuiteResult]

LEMMA_SUITES: dict[str, Suite] = {
    "cut-vertex-additivity": _cut_vertex_additivity,
    "cycle-closed-forms": _cycle_closed_forms,
    "identification-composition": _identification_composition,
    "pull-pendants": _pull_pendants,
    "relocate-pendants": _relocate_pendants,
    "stretch-pendants": _stretch_pendants,
    "shorten-path": _shorten_path,
    "path-contraction": _path_contraction,
    "path-extension": _path_extension,
    "foster-identity": _foster_identity,
    "rayleigh-monotonicity": _rayleigh_monotonicity,
    "tree-degeneration": _tree_degeneration,
}


def verify_lemmas(
    config: CampaignConfig | None = None,
    suites: Sequence[str] | None = None,
    progress: Callable[[str], None] | None = None,
) -> CampaignReport:
    """Run the selected campaigns; each draws from its own seeded generator."""
    config = config or CampaignConfig()
    names = list(suites) if suites is not None else list(LEMMA_SUITES)
    unknown = [name for name in names if name not in LEMMA_SUITES]
    if unknown:
        raise ParameterRangeError(
            f"Unknown suite(s): {', '.join(unknown)}; choose from {', '.join(LEMMA_SUITES)}"
        )
    results = []
    for name in names:
        rng = random.Random(f"{config.seed}:{name}")
        result = LEMMA_SUITES[name](config, rng)
        logger.info(
            "%s: %d checked, %d failed", name, result.checked, result.failure_count
        )
        results.append(result)
        if progress:
            progress(name)
    return CampaignReport(seed=config.seed, suites=tuple(results))


def verify_closed_forms(max_cycle_length: int = 6, max_n: int = 12) -> CampaignReport:
    """Compare every closed form against the Laplacian solver."""
    ranges = family_ranges(range(3, max_cycle_length + 1), max_n)

    hub = SuiteResult("hub-closed-form")
    dumbbell = SuiteResult("dumbbell-closed-form")
    for n, p, q in ranges:
        for suite, graph, formula in (
            (hub, make_hub(n, p, q), hub_closed_form(n, p, q)),
            (dumbbell, make_dumbbell(n, p, q), dumbbell_closed_form(n, p, q).raw),
        ):
            direct = degree_resistance(graph)
            suite.checked += 1
            if direct == formula:
                suite.strict += 1
            else:
                suite.fail(f"{suite.name} at ({n},{p},{q})", (graph,), (direct, formula))

    extremal = SuiteResult("extremal-closed-forms")
    for n in range(5, max_n + 1):
        for graph, formula in (
            (make_hub(n, 3, 3), min_closed_form(n)),
            (make_dumbbell(n, 3, 3), max_closed_form(n)),
        ):
            direct = degree_resistance(graph)
            extremal.checked += 1
            if direct == formula:
                extremal.strict += 1
            else:
                extremal.fail(f"extremal formula at n={n}", (graph,), (direct, formula))

    ordering = SuiteResult("family-ordering")
    for n, p, q in ranges:
        if n < 6 or (p, q) == (3, 3):
            continue
        ordering.checked += 1
        hub_value, hub_floor = hub_closed_form(n, p, q), hub_closed_form(n, 3, 3)
        bell_value = dumbbell_closed_form(n, p, q).raw
        bell_ceiling = dumbbell_closed_form(n, 3, 3).raw
        if hub_value > hub_floor and bell_value < bell_ceiling:
            ordering.strict += 1
        else:
            ordering.fail(
                f"({n},{p},{q}) is not strictly inside the (3,3) bounds",
                (),
                (hub_value, hub_floor, bell_value, bell_ceiling),
            )

    printed = SuiteResult("dumbbell-printed-form")
    form = dumbbell_closed_form(8, 3, 3)
    printed.checked += 1
    if form.n_form != form.raw and form.raw == degree_resistance(make_dumbbell(8, 3, 3)):
        printed.strict += 1
    else:
        printed.fail(
            "n-substituted dumbbell expression was expected to disagree at (8,3,3)",
            (make_dumbbell(8, 3, 3),),
            (form.raw, form.n_form),
        )
    return CampaignReport(seed=None, suites=(hub, dumbbell, extremal, ordering, printed))
