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
from typing import Any

import click

from ...edgelist import format_edgelist
from ...families import (
    BicyclicShape,
    dumbbell_closed_form,
    hub_closed_form,
    make_bicyclic,
    make_dumbbell,
    make_hub,
)
from ...graphs import Graph
from ...resistance import invariants
from ..utils import (
    RunConfig,
    emit,
    handle_cli_error,
    output_options,
    render_csv,
    render_json,
)
from .compute import invariant_payload

# Letter aliases follow the usual S/P/B naming of these families.
FAMILY_ALIASES = {"S": "hub", "P": "dumbbell", "B": "general"}

CSV_HEADER = ["type", "n", "p", "q", "m", "degree_resistance", "closed_form"]


def _build(
    family: str,
    n: int | None,
    p: int | None,
    q: int | None,
    shape_file: pathlib.Path | None,
) -> tuple[Graph, dict[str, Any]]:
    if family == "general":
        if shape_file is None:
            raise click.UsageError("--shape is required for --type general")
        with open(shape_file, encoding="utf-8") as f:
            shape = BicyclicShape.from_dict(json.load(f))
        return make_bicyclic(shape), {"shape": shape.to_dict()}
    missing = [name for name, value in (("--n", n), ("--p", p), ("--q", q)) if value is None]
    if missing:
        raise click.UsageError(f"{', '.join(missing)} required for --type {family}")
    assert n is not None and p is not None and q is not None
    if family == "hub":
        return make_hub(n, p, q), {"closed_form": hub_closed_form(n, p, q)}
    form = dumbbell_closed_form(n, p, q)
    return make_dumbbell(n, p, q), {
        "closed_form": form.raw,
        "printed_n_form": form.n_form,
        "discrepancy": form.discrepancy,
    }


@click.command("family")
@click.option(
    "--type",
    "family",
    type=click.Choice(["hub", "dumbbell", "general", "S", "P", "B"]),
    required=True,
    help="Family to build: hub (S), dumbbell (P) or a general shape (B).",
)
@click.option("--n", type=int, help="Number of vertices.")
@click.option("--p", type=int, help="Length of the first cycle.")
@click.option("--q", type=int, help="Length of the second cycle.")
@click.option(
    "--m",
    "path_length_check",
    type=int,
    help="Expected length of the joining path; checked against the built graph.",
)
@click.option(
    "--shape",
    "shape_file",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
    help="JSON shape description for --type general.",
)
@click.option(
    "--edgelist-out",
    type=click.Path(dir_okay=False, writable=True, path_type=pathlib.Path),
    help="Also write the constructed graph as an edge list.",
)
@output_options
@handle_cli_error
def build_family(
    family: str,
    n: int | None,
    p: int | None,
    q: int | None,
    path_length_check: int | None,
    shape_file: pathlib.Path | None,
    edgelist_out: pathlib.Path | None,
    output_format: str,
    out: pathlib.Path | None,
    decimal: int | None,
) -> None:
    """Build a named bicyclic family member and compare it with its closed form."""
    family = FAMILY_ALIASES.get(family, family)
    graph, forms = _build(family, n, p, q, shape_file)
    report = invariant_payload(graph, invariants(graph))
    if "closed_form" in forms:
        forms["agrees"] = forms["closed_form"] == report["degree_resistance"]

    shape = forms.get("shape", {})
    p = p if p is not None else shape.get("p")
    q = q if q is not None else shape.get("q")
    if family == "general":
        path_length = shape["m"]
    elif family == "hub":
        path_length = 0
    else:
        path_length = graph.n + 1 - (p or 0) - (q or 0)
    if path_length_check is not None and path_length_check != path_length:
        raise click.UsageError(
            f"--m {path_length_check} does not match the joining path of length "
            f"{path_length} (m = n + 1 - p - q for dumbbells, 0 for hubs)"
        )

    if edgelist_out is not None:
        edgelist_out.write_text(format_edgelist(graph, comment=family), encoding="utf-8")
    run = RunConfig(
        subcommand="family",
        inputs=(str(shape_file),) if shape_file else (),
        n=graph.n,
        p=p,
        q=q,
        m=path_length,
        output_format=output_format,
        out=str(out) if out else None,
        extra=(("type", family),),
    )
    if output_format == "csv":
        row = [
            family,
            graph.n,
            p,
            q,
            path_length,
            report["degree_resistance"],
            forms.get("closed_form", ""),
        ]
        emit(render_csv(CSV_HEADER, [row]), out)
        return
    payload = {
        "config": run.to_dict(),
        "type": family,
        "edges": [list(edge) for edge in graph.sorted_edges()],
        **report,
        **forms,
    }
    emit(render_json(payload, decimal), out)
