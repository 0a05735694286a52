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

"""Tests for exhaustive enumeration on five and six vertices."""

from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from degree_resistance.canonical import canonical_form
from degree_resistance.errors import EnumerationRangeError, ParameterRangeError
from degree_resistance.enumeration import (
    Population,
    check_order,
    enumerate_bicyclic,
    extremal_search,
    feasible_classes,
    grow_from_bases,
    prefixes,
    verify_within_class,
)
from degree_resistance.families import make_dumbbell, make_hub
from degree_resistance.graphs import BicyclicKind, Graph, classify_bicyclic


class TestEnumeration:
    def test_order_limits(self) -> None:
        check_order(8)
        check_order(9, allow_large=True)
        with pytest.raises(EnumerationRangeError, match="allow_large"):
            check_order(9)
        with pytest.raises(EnumerationRangeError):
            check_order(4)
        with pytest.raises(EnumerationRangeError):
            check_order(10, allow_large=True)

    def test_prefixes_leave_room_for_remaining_edges(self) -> None:
        work = prefixes(5)
        assert work[0] == (0, 1)
        assert all(10 - j - 1 >= 4 for _, j in work)
        assert len(set(work)) == len(work)

    def test_five_vertices(self) -> None:
        graphs = list(enumerate_bicyclic(5))
        assert len(graphs) == 15
        assert len({g.edges for g in graphs}) == 15
        assert {canonical_form(g) for g in graphs} == {canonical_form(make_hub(5, 3, 3))}

    def test_all_bicyclic_population_includes_theta(self) -> None:
        graphs = list(enumerate_bicyclic(5, Population.ALL_BICYCLIC))
        assert len(graphs) == 205
        kinds = {classify_bicyclic(g).kind for g in graphs}
        assert kinds == {BicyclicKind.TWO_CYCLES, BicyclicKind.THETA}

    def test_six_vertices(self) -> None:
        graphs = list(enumerate_bicyclic(6))
        assert len(graphs) == 720
        assert all(classify_bicyclic(g).kind is BicyclicKind.TWO_CYCLES for g in graphs)
        forms = {canonical_form(g) for g in graphs}
        assert forms == set(grow_from_bases(6))


class TestExtremalSearch:
    def test_six_vertices(self) -> None:
        report = extremal_search(6, iso_classes=True)
        assert report.count_labeled == 720
        assert report.count_iso_classes == 4
        assert report.min_value == Fraction(214, 3)
        assert report.max_value == Fraction(286, 3)
        assert report.agrees_min and report.agrees_max
        assert report.min_is_hub and report.max_is_dumbbell
        assert report.passed

    def test_five_vertices_has_a_single_class(self, bowtie: Graph) -> None:
        report = extremal_search(5)
        assert report.min_value == report.max_value == Fraction(128, 3)
        assert len(report.min_attainers) == 1
        assert canonical_form(report.min_attainers[0]) == canonical_form(bowtie)
        assert report.count_iso_classes is None
        assert report.passed

    def test_all_population_always_passes(self) -> None:
        report = extremal_search(5, Population.ALL_BICYCLIC)
        assert report.count_labeled == 205
        assert report.passed

    def test_progress_is_reported_per_prefix(self, mocker: MockerFixture) -> None:
        progress = mocker.Mock()
        extremal_search(5, progress=progress)
        assert progress.call_count == len(prefixes(5))

    def test_rejects_bad_worker_count(self) -> None:
        with pytest.raises(ParameterRangeError):
            extremal_search(5, jobs=0)

    def test_workers_do_not_change_the_report(self) -> None:
        serial = extremal_search(6)
        parallel = extremal_search(6, jobs=2)
        assert parallel == serial


class TestWithinClass:
    @pytest.mark.parametrize("p, q", [(3, 3), (4, 3)])
    def test_six_vertices(self, p: int, q: int) -> None:
        report = verify_within_class(6, p, q)
        assert (report.p, report.q) == (min(p, q), max(p, q))
        assert report.passed

    def test_counts_split_by_cycle_lengths(self) -> None:
        assert verify_within_class(6, 3, 3).count_labeled == 540
        assert verify_within_class(6, 3, 4).count_labeled == 180

    def test_single_member_class(self) -> None:
        report = verify_within_class(6, 3, 4)
        assert report.min_value == report.max_value == Fraction(215, 3)
        assert report.min_attainers == report.max_attainers


class TestConstructiveEnumeration:
    def test_feasible_classes(self) -> None:
        assert feasible_classes(6) == [(3, 3), (3, 4)]
        assert feasible_classes(7) == [(3, 3), (3, 4), (3, 5), (4, 4)]

    def test_contains_named_families(self) -> None:
        classes = grow_from_bases(7)
        for p, q in feasible_classes(7):
            assert canonical_form(make_hub(7, p, q)) in classes
            assert canonical_form(make_dumbbell(7, p, q)) in classes

    def test_too_small(self) -> None:
        with pytest.raises(EnumerationRangeError):
            grow_from_bases(4)
