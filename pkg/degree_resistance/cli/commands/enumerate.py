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
from rich.table import Table

from ...enumeration import Population, check_order, extremal_search, prefixes
from ..utils import (
    RunConfig,
    emit,
    format_rational,
    handle_cli_error,
    output_options,
    render_csv,
    render_json,
)
from ..utils.logging import console
from ..utils.reports import (
    EXTREMAL_CSV_HEADER,
    extremal_payload,
    extremal_row,
    progress_bar,
)


@click.command("enumerate")
@click.option("--n", type=int, required=True, help="Number of vertices (5-8, 9 with --allow-large).")
@click.option(
    "--population",
    type=click.Choice([p.value for p in Population]),
    default=Population.TWO_CYCLES.value,
    show_default=True,
    help="Graphs with exactly two cycles, or every bicyclic graph.",
)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--allow-large", is_flag=True, help="Permit n=9.")
@click.option(
    "--iso-classes",
    is_flag=True,
    help="Also count isomorphism classes in the population (slow).",
)
@click.option("--quiet", is_flag=True, help="Hide progress and the summary table.")
@output_options
@handle_cli_error
def enumerate_graphs(
    n: int,
    population: str,
    jobs: int,
    allow_large: bool,
    iso_classes: bool,
    quiet: bool,
    output_format: str,
    out: pathlib.Path | None,
    decimal: int | None,
) -> None:
    """Exhaustive extremal search over labeled bicyclic graphs on N vertices."""
    check_order(n, allow_large)
    selected = Population(population)
    with progress_bar(f"Bicyclic graphs on {n} vertices", len(prefixes(n)), quiet) as advance:
        report = extremal_search(
            n,
            selected,
            jobs=jobs,
            allow_large=allow_large,
            iso_classes=iso_classes,
            progress=advance,
        )

    if output_format == "csv":
        emit(render_csv(EXTREMAL_CSV_HEADER, [extremal_row(report)]), out)
    else:
        run = RunConfig(
            subcommand="enumerate",
            n=n,
            population=selected.value,
            jobs=jobs,
            output_format=output_format,
            out=str(out) if out else None,
            extra=(("iso_classes", iso_classes), ("allow_large", allow_large)),
        )
        payload = {"config": run.to_dict(), **extremal_payload(report)}
        emit(render_json(payload, decimal), out)

    if not quiet:
        table = Table(title=f"Extremal search, n={n}", header_style="bold magenta")
        table.add_column("Bound", style="bold")
        table.add_column("Found")
        table.add_column("Formula")
        table.add_column("Classes", style="cyan")
        table.add_row(
            "min",
            format_rational(report.min_value),
            format_rational(report.formula_min),
            str(len(report.min_attainers)),
        )
        table.add_row(
            "max",
            format_rational(report.max_value),
            format_rational(report.formula_max),
            str(len(report.max_attainers)),
        )
        console.print(table)
