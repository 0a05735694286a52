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

"""Tests for the exact resistance solver and the indices built on it."""

import itertools
from fractions import Fraction

import pytest

from degree_resistance.errors import (
    Disconnected,
    InvalidCycle,
    ParameterRangeError,
    PreconditionViolation,
)
from degree_resistance.families import (
    Attachment,
    BicyclicShape,
    make_bicyclic,
    make_cycle,
    make_dumbbell,
    make_hub,
    make_path,
)
from degree_resistance.graphs import Graph, build_graph, identify_vertices
from degree_resistance.resistance import (
    VertexSums,
    cactus_degree_resistance,
    compose_identified,
    cycle_closed_forms,
    cycle_pair_resistance,
    degree_resistance,
    effective_resistance,
    find_cactus_cycles,
    invariants,
    resistance_matrix,
    vertex_sums,
)

STAR_3 = build_graph(4, [(0, 1), (0, 2), (0, 3)])


class TestEffectiveResistance:
    def test_series_path(self) -> None:
        path = make_path(4)
        assert effective_resistance(path, 0, 3) == 3
        assert effective_resistance(path, 2, 2) == 0

    def test_parallel_paths_on_a_square(self) -> None:
        square = make_cycle(4)
        assert effective_resistance(square, 0, 2) == 1
        assert effective_resistance(square, 0, 1) == Fraction(3, 4)

    def test_matrix_is_symmetric_with_zero_diagonal(self, bowtie: Graph) -> None:
        matrix = resistance_matrix(bowtie)
        for u, v in itertools.product(range(bowtie.n), repeat=2):
            assert matrix[u, v] == matrix[v, u]
        assert all(matrix[v, v] == 0 for v in range(bowtie.n))

    def test_disconnected_graph(self) -> None:
        with pytest.raises(Disconnected):
            effective_resistance(build_graph(4, [(0, 1), (2, 3)]), 0, 3)

    def test_vertex_out_of_range(self) -> None:
        with pytest.raises(ParameterRangeError):
            effective_resistance(make_path(3), 0, 5)

    def test_single_vertex(self) -> None:
        report = invariants(build_graph(1, []))
        assert report.degree_resistance == 0
        assert report.per_vertex == (VertexSums(Fraction(0), Fraction(0)),)


class TestInvariants:
    def test_bowtie(self, bowtie: Graph) -> None:
        report = invariants(bowtie)
        assert report.wiener == 14
        assert report.kirchhoff == Fraction(28, 3)
        assert report.degree_distance == 64
        assert report.degree_resistance == Fraction(128, 3)
        assert report.per_vertex[0] == VertexSums(Fraction(8, 3), Fraction(16, 3))
        assert report.per_vertex[1] == VertexSums(Fraction(4), Fraction(28, 3))

    def test_vertex_sums_add_up_to_degree_resistance(self) -> None:
        graph = make_dumbbell(9, 3, 4)
        total = sum((vertex_sums(graph, v).d for v in range(graph.n)), Fraction(0))
        assert total == degree_resistance(graph)

    @pytest.mark.parametrize("edges", [1, 2, 3, 6])
    def test_path_values(self, edges: int) -> None:
        path = make_path(edges + 1)
        report = invariants(path)
        assert report.degree_resistance == Fraction(edges * (edges + 1) * (2 * edges + 1), 3)
        assert vertex_sums(path, 0) == VertexSums(
            Fraction(edges * (edges + 1), 2), Fraction(edges**2)
        )

    def test_star(self) -> None:
        assert degree_resistance(STAR_3) == 3 * 3**2 - 3
        assert vertex_sums(STAR_3, 0) == VertexSums(Fraction(3), Fraction(3))

    def test_trees_have_equal_resistance_and_distance_indices(self) -> None:
        tree = build_graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)])
        report = invariants(tree)
        assert report.kirchhoff == report.wiener
        assert report.degree_resistance == report.degree_distance

    def test_foster_identity(self) -> None:
        graph = make_bicyclic(BicyclicShape(4, 5, 2, (Attachment("c1:2", ((0, 1),)),)))
        matrix = resistance_matrix(graph)
        assert sum(matrix[u, v] for u, v in graph.edges) == graph.n - 1


class TestCycleFormulas:
    @pytest.mark.parametrize("k", [3, 4, 5, 9])
    def test_closed_forms_match_solver(self, k: int) -> None:
        cycle = make_cycle(k)
        report = invariants(cycle)
        forms = cycle_closed_forms(k)
        assert report.kirchhoff == forms.kf
        assert report.degree_resistance == forms.dr
        assert all(s == VertexSums(forms.kf_v, forms.d_v) for s in report.per_vertex)
        for i, j in itertools.combinations(range(k), 2):
            assert effective_resistance(cycle, i, j) == cycle_pair_resistance(k, i + 1, j + 1)

    def test_known_values(self) -> None:
        assert cycle_closed_forms(3).dr == 8
        assert cycle_pair_resistance(5, 1, 3) == Fraction(6, 5)

    def test_invalid(self) -> None:
        with pytest.raises(InvalidCycle):
            cycle_closed_forms(2)
        with pytest.raises(ParameterRangeError):
            cycle_pair_resistance(5, 3, 3)


class TestComposeIdentified:
    def test_two_triangles(self) -> None:
        assert compose_identified(make_cycle(3), 0, make_cycle(3), 0) == Fraction(128, 3)

    def test_matches_direct_value(self) -> None:
        first = make_dumbbell(7, 3, 3)
        second = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        for u1, u2 in [(0, 0), (6, 4), (4, 2)]:
            glued, _ = identify_vertices(first, u1, second, u2)
            assert compose_identified(first, u1, second, u2) == degree_resistance(glued)

    def test_pendant_on_a_bowtie(self, bowtie: Graph) -> None:
        """A leaf glued to the centre gives the hub graph on six vertices."""
        assert compose_identified(bowtie, 0, make_path(2), 0) == Fraction(214, 3)
        assert compose_identified(bowtie, 1, make_path(2), 0) == 78


class TestCactusFastPath:
    @pytest.mark.parametrize(
        "graph",
        [
            make_hub(8, 3, 5),
            make_dumbbell(9, 4, 3),
            make_bicyclic(
                BicyclicShape(
                    3,
                    4,
                    1,
                    (
                        Attachment("c1:1", ((0, 1), (1, 2))),
                        Attachment("c2:2", ((0, 1), (0, 2))),
                    ),
                )
            ),
            make_path(5),
            make_cycle(6),
        ],
    )
    def test_agrees_with_laplacian_solver(self, graph: Graph) -> None:
        assert cactus_degree_resistance(graph) == degree_resistance(graph)

    def test_cycles_in_cyclic_order(self) -> None:
        cycles = find_cactus_cycles(6, make_dumbbell(6, 3, 3).adjacency)
        assert sorted(sorted(c) for c in cycles) == [[0, 1, 2], [3, 4, 5]]

    def test_rejects_theta(self) -> None:
        theta = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        with pytest.raises(PreconditionViolation):
            cactus_degree_resistance(theta)
