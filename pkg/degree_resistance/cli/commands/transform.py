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

import click

from ...edgelist import format_edgelist, read_edgelist
from ...graphs import Edge, Graph, classify_bicyclic
from ...transforms import (
    compare,
    contract_to_pendant,
    cycle_grow,
    cycle_shrink,
    pull_pendants_to_cycle,
    relocate_pendants,
    rewire_edge,
    stretch_pendants_into_path,
)
from ..utils import (
    EDGE,
    RunConfig,
    emit,
    handle_cli_error,
    output_options,
    render_csv,
    render_json,
)

OPERATIONS = ["pull", "stretch", "relocate", "rewire", "contract", "shrink", "grow"]
OPERATION_ALIASES = {"sigma": "pull", "pi": "stretch"}

CSV_HEADER = ["op", "n", "m", "dr_before", "dr_after", "direction"]


def _require(op: str, **values: object) -> None:
    missing = [f"--{name}" for name, value in values.items() if value is None]
    if missing:
        raise click.UsageError(f"--op {op} requires {', '.join(missing)}")


def apply_operation(
    graph: Graph,
    op: str,
    vertex: int | None = None,
    target: int | None = None,
    remove: Edge | None = None,
    add: Edge | None = None,
    edge: Edge | None = None,
) -> Graph:
    if op in ("pull", "stretch", "shrink", "grow"):
        _require(op, vertex=vertex)
        assert vertex is not None
        surgery = {
            "pull": pull_pendants_to_cycle,
            "stretch": stretch_pendants_into_path,
            "shrink": cycle_shrink,
            "grow": cycle_grow,
        }[op]
        return surgery(graph, vertex)
    if op == "relocate":
        _require(op, vertex=vertex, target=target)
        assert vertex is not None and target is not None
        return relocate_pendants(graph, vertex, target)
    if op == "rewire":
        _require(op, remove=remove, add=add)
        assert remove is not None and add is not None
        return rewire_edge(graph, remove, add)
    _require(op, edge=edge)
    assert edge is not None
    return contract_to_pendant(graph, edge)


@click.command()
@click.argument(
    "graph_file",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
)
@click.option(
    "--op",
    type=click.Choice(OPERATIONS + list(OPERATION_ALIASES)),
    required=True,
    help="Surgery to apply.",
)
@click.option("--vertex", type=int, help="Vertex the surgery acts on.")
@click.option("--target", type=int, help="Common vertex of the cycles (relocate).")
@click.option("--remove", type=EDGE, help="Edge 'u,v' to delete (rewire).")
@click.option("--add", type=EDGE, help="Edge 'u,v' to insert (rewire).")
@click.option("--edge", type=EDGE, help="Path edge 'u,v' to contract (contract).")
@click.option(
    "--graph-out",
    type=click.Path(dir_okay=False, writable=True, path_type=pathlib.Path),
    help="Write the transformed graph as an edge list.",
)
@output_options
@handle_cli_error
def transform(
    graph_file: pathlib.Path,
    op: str,
    vertex: int | None,
    target: int | None,
    remove: Edge | None,
    add: Edge | None,
    edge: Edge | None,
    graph_out: pathlib.Path | None,
    output_format: str,
    out: pathlib.Path | None,
    decimal: int | None,
) -> None:
    """Apply a surgery to GRAPH_FILE and compare degree resistance distances."""
    op = OPERATION_ALIASES.get(op, op)
    before = read_edgelist(graph_file)
    after = apply_operation(before, op, vertex, target, remove, add, edge)
    outcome = compare(before, after)
    if graph_out is not None:
        graph_out.write_text(format_edgelist(after, comment=f"after {op}"), encoding="utf-8")

    if output_format == "csv":
        row = [op, after.n, after.m, outcome.dr_before, outcome.dr_after, outcome.direction.value]
        emit(render_csv(CSV_HEADER, [row]), out)
        return
    run = RunConfig(
        subcommand="transform",
        inputs=(str(graph_file),),
        output_format=output_format,
        out=str(out) if out else None,
        extra=tuple(
            (name, value)
            for name, value in (
                ("op", op),
                ("vertex", vertex),
                ("target", target),
                ("remove", remove),
                ("add", add),
                ("edge", edge),
            )
            if value is not None
        ),
    )
    payload = {
        "config": run.to_dict(),
        "op": op,
        "direction": outcome.direction,
        "dr_before": outcome.dr_before,
        "dr_after": outcome.dr_after,
        "classification_before": str(classify_bicyclic(before)),
        "classification_after": str(classify_bicyclic(after)),
        "before": before,
        "after": after,
        "after_edgelist": format_edgelist(after),
    }
    emit(render_json(payload, decimal), out)
