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

import pathlib
from typing import Any

import click

from ...edgelist import read_edgelist
from ...graphs import Graph, classify_bicyclic
from ...resistance import InvariantReport, invariants
from ..utils import (
    RunConfig,
    emit,
    handle_cli_error,
    output_options,
    render_csv,
    render_json,
)

CSV_HEADER = [
    "n",
    "m",
    "classification",
    "wiener",
    "kirchhoff",
    "degree_distance",
    "degree_resistance",
]


def invariant_payload(graph: Graph, report: InvariantReport) -> dict[str, Any]:
    return {
        "n": graph.n,
        "m": graph.m,
        "classification": str(classify_bicyclic(graph)),
        "wiener": report.wiener,
        "kirchhoff": report.kirchhoff,
        "degree_distance": report.degree_distance,
        "degree_resistance": report.degree_resistance,
        "per_vertex": [
            {"vertex": v, "degree": graph.degree(v), "kf": sums.kf, "d": sums.d}
            for v, sums in enumerate(report.per_vertex)
        ],
    }


@click.command()
@click.argument(
    "graph_file",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
)
@output_options
@handle_cli_error
def compute(
    graph_file: pathlib.Path,
    output_format: str,
    out: pathlib.Path | None,
    decimal: int | None,
) -> None:
    """Exact resistance and distance indices of the graph in GRAPH_FILE."""
    graph = read_edgelist(graph_file)
    payload = invariant_payload(graph, invariants(graph))
    run = RunConfig(
        subcommand="compute",
        inputs=(str(graph_file),),
        output_format=output_format,
        out=str(out) if out else None,
    )
    if output_format == "csv":
        emit(render_csv(CSV_HEADER, [[payload[key] for key in CSV_HEADER]]), out)
        return
    emit(render_json({"config": run.to_dict(), **payload}, decimal), out)
