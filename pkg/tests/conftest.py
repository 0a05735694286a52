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

"""Shared fixtures for the degree resistance tests."""

import pathlib
from collections.abc import Callable

import pytest

from degree_resistance.edgelist import format_edgelist
from degree_resistance.families import make_hub
from degree_resistance.graphs import Graph


@pytest.fixture
def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return make_hub(5, 3, 3)


@pytest.fixture
def write_graph(tmp_path: pathlib.Path) -> Callable[..., pathlib.Path]:
    """Write a graph as an edge-list file and return its path."""

    def _write(graph: Graph, name: str = "graph.edges") -> pathlib.Path:
        path = tmp_path / name
        path.write_text(format_edgelist(graph), encoding="utf-8")
        return path

    return _write
