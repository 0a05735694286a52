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

import json
import pathlib
from collections.abc import Callable

import pytest
from click.testing import CliRunner

from degree_resistance.cli.commands.transform import transform
from degree_resistance.edgelist import parse_edgelist, read_edgelist
from degree_resistance.families import (
    Attachment,
    BicyclicShape,
    make_bicyclic,
    make_dumbbell,
    make_hub,
)
from degree_resistance.graphs import Graph

WriteGraph = Callable[..., pathlib.Path]


@pytest.fixture
def star_file(write_graph: WriteGraph) -> pathlib.Path:
    """Bowtie with a two-pendant star hung at vertex 1; the star centre is 5."""
    shape = BicyclicShape(3, 3, 0, (Attachment("c1:1", ((0, 1), (1, 2), (1, 3))),))
    return write_graph(make_bicyclic(shape), "star.edges")


def test_pull_alias(star_file: pathlib.Path) -> None:
    """Test that sigma pulls pendants onto the cycle and lowers the index."""
    result = CliRunner().invoke(transform, [str(star_file), "--op", "sigma", "--vertex", "5"])

    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["op"] == "pull"
    assert report["direction"] == "decreased"
    assert report["dr_before"] == "620/3"
    assert report["dr_after"] == "500/3"
    assert report["classification_after"] == "TwoCycles(3,3,0)"
    assert parse_edgelist(report["after_edgelist"]).has_edge(1, 6)
    assert report["config"]["extra"] == {"op": "pull", "vertex": 5}


def test_stretch_csv(star_file: pathlib.Path) -> None:
    result = CliRunner().invoke(
        transform, [str(star_file), "--op", "pi", "--vertex", "5", "--format", "csv"]
    )

    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[1] == "stretch,8,9,620/3,692/3,increased"


def test_contract_writes_graph(write_graph: WriteGraph, tmp_path: pathlib.Path) -> None:
    path = write_graph(make_dumbbell(8, 3, 3))
    graph_out = tmp_path / "after.edges"
    result = CliRunner().invoke(
        transform,
        [str(path), "--op", "contract", "--edge", "6,7", "--graph-out", str(graph_out)],
    )

    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["direction"] == "decreased"
    after = read_edgelist(graph_out)
    assert after.degree(7) == 1
    assert after.has_edge(6, 3)


def test_shrink_and_relocate(write_graph: WriteGraph) -> None:
    runner = CliRunner()
    hub = write_graph(make_hub(7, 3, 4), "hub.edges")
    result = runner.invoke(transform, [str(hub), "--op", "shrink", "--vertex", "3"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert (report["dr_before"], report["dr_after"]) == ("108/1", "106/1")

    shape = BicyclicShape(3, 3, 0, (Attachment("c1:1", ((0, 1),)),))
    relocated = write_graph(make_bicyclic(shape), "pendant.edges")
    result = runner.invoke(
        transform, [str(relocated), "--op", "relocate", "--vertex", "1", "--target", "0"]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["dr_after"] == "214/3"


def test_rewire_errors(bowtie: Graph, write_graph: WriteGraph) -> None:
    """Test that invalid surgeries exit with 2."""
    runner = CliRunner()
    path = write_graph(bowtie)

    result = runner.invoke(transform, [str(path), "--op", "rewire", "--remove", "1,3", "--add", "1,4"])
    assert result.exit_code == 2
    assert "not in the graph" in result.output

    result = runner.invoke(transform, [str(path), "--op", "rewire", "--remove", "1,3"])
    assert result.exit_code == 2
    assert "--add" in result.output

    result = runner.invoke(transform, [str(path), "--op", "rewire", "--remove", "x", "--add", "1,4"])
    assert result.exit_code == 2

    result = runner.invoke(transform, [str(path), "--op", "shrink", "--vertex", "1"])
    assert result.exit_code == 2
    assert "cannot shrink" in result.output
