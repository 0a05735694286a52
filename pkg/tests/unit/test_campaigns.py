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

"""Tests for the seeded property campaigns, run with small instance counts."""

import random
from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from degree_resistance.campaigns import (
    DEFAULT_SEED,
    LEMMA_SUITES,
    MAX_RECORDED_FAILURES,
    CampaignConfig,
    SuiteResult,
    random_connected_graph,
    random_tree,
    relabel,
    verify_closed_forms,
    verify_lemmas,
)
from degree_resistance.errors import ParameterRangeError
from degree_resistance.graphs import is_connected

SMALL = CampaignConfig(
    transform_instances=6,
    additivity_instances=4,
    composition_instances=4,
    sanity_instances=6,
    tree_instances=6,
    max_block_order=5,
    max_part_order=5,
    max_cycle_length=8,
    max_random_order=6,
    max_tree_order=8,
    claim_max_order=8,
)


class TestCampaignConfig:
    def test_defaults(self) -> None:
        config = CampaignConfig()
        assert config.seed == DEFAULT_SEED
        assert config.cycle_lengths == (3, 4, 5)

    def test_from_mapping_converts_lists(self) -> None:
        config = CampaignConfig.from_mapping({"seed": 7, "cycle_lengths": [3, 6]})
        assert config.seed == 7
        assert config.cycle_lengths == (3, 6)

    def test_from_mapping_rejects_unknown_keys(self) -> None:
        with pytest.raises(ParameterRangeError, match="instances_per_lemma"):
            CampaignConfig.from_mapping({"instances_per_lemma": 10})

    @pytest.mark.parametrize(
        "overrides",
        [{"cycle_lengths": (2, 3)}, {"pendant_counts": ()}, {"path_lengths": (0,)}],
    )
    def test_validation(self, overrides: dict[str, tuple[int, ...]]) -> None:
        with pytest.raises(ParameterRangeError):
            CampaignConfig(**overrides)


class TestRandomGraphs:
    def test_random_tree(self) -> None:
        tree = random_tree(random.Random(1), 9)
        assert (tree.n, tree.m) == (9, 8)
        assert is_connected(tree)

    def test_random_connected_graph(self) -> None:
        rng = random.Random(2)
        for n in range(2, 9):
            assert is_connected(random_connected_graph(rng, n))

    def test_relabel_is_a_permutation(self) -> None:
        graph = random_tree(random.Random(3), 7)
        copy, permutation = relabel(random.Random(4), graph)
        assert sorted(permutation) == list(range(7))
        assert all(copy.has_edge(permutation[u], permutation[v]) for u, v in graph.edges)


class TestSuiteResult:
    def test_failures_are_capped_but_counted(self) -> None:
        suite = SuiteResult("demo")
        for i in range(MAX_RECORDED_FAILURES + 3):
            suite.fail(f"case {i}", (), (Fraction(i),))
        assert suite.failure_count == MAX_RECORDED_FAILURES + 3
        assert len(suite.failures) == MAX_RECORDED_FAILURES
        assert not suite.passed


class TestVerifyLemmas:
    def test_small_campaign_passes(self) -> None:
        report = verify_lemmas(SMALL)
        assert report.seed == DEFAULT_SEED
        assert [suite.name for suite in report.suites] == list(LEMMA_SUITES)
        for suite in report.suites:
            assert suite.passed, suite.failures
        assert report.passed

    def test_same_seed_same_report(self) -> None:
        names = ["pull-pendants", "relocate-pendants", "foster-identity"]
        assert verify_lemmas(SMALL, names) == verify_lemmas(SMALL, names)

    def test_suite_selection_and_progress(self, mocker: MockerFixture) -> None:
        progress = mocker.Mock()
        report = verify_lemmas(SMALL, ["tree-degeneration"], progress)
        assert [suite.name for suite in report.suites] == ["tree-degeneration"]
        assert report.suites[0].checked == SMALL.tree_instances
        progress.assert_called_once_with("tree-degeneration")

    def test_single_pendant_stretch_counts_as_equal(self) -> None:
        config = CampaignConfig(transform_instances=5, pendant_counts=(1,))
        (suite,) = verify_lemmas(config, ["stretch-pendants"]).suites
        assert suite.equal == 5
        assert suite.checked == 0
        assert suite.passed

    def test_shorten_path_needs_long_paths(self) -> None:
        config = CampaignConfig(transform_instances=5, path_lengths=(1,))
        (suite,) = verify_lemmas(config, ["shorten-path"]).suites
        assert suite.checked == 0

    def test_unknown_suite(self) -> None:
        with pytest.raises(ParameterRangeError, match="Unknown suite"):
            verify_lemmas(SMALL, ["no-such-suite"])


def test_closed_forms_pass() -> None:
    report = verify_closed_forms(max_cycle_length=5, max_n=9)
    assert report.seed is None
    assert [suite.name for suite in report.suites] == [
        "hub-closed-form",
        "dumbbell-closed-form",
        "extremal-closed-forms",
        "family-ordering",
        "dumbbell-printed-form",
    ]
    assert report.passed
