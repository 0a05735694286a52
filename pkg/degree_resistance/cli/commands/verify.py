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

import dataclasses
import logging
import pathlib
from typing import Any

import click

from ...campaigns import LEMMA_SUITES, verify_closed_forms, verify_lemmas
from ...enumeration import (
    Population,
    check_order,
    extremal_search,
    feasible_classes,
    prefixes,
    verify_within_class,
)
from ..utils import (
    RunConfig,
    VerificationFailed,
    emit,
    handle_cli_error,
    load_campaign_config,
    output_options,
    render_csv,
    render_json,
)
from ..utils.logging import console
from ..utils.reports import (
    EXTREMAL_CSV_HEADER,
    SUITE_CSV_HEADER,
    WITHIN_CLASS_CSV_HEADER,
    campaign_payload,
    extremal_payload,
    extremal_row,
    progress_bar,
    suite_row,
    within_class_payload,
    within_class_row,
)

logger = logging.getLogger(__name__)

SUITES = ["lemmas", "theorems", "closed-forms", "within-class"]


def _lemmas(
    config_file: pathlib.Path | None, seed: int | None, only: tuple[str, ...], quiet: bool
) -> tuple[dict[str, Any], list[list[Any]], list[str], bool]:
    config = load_campaign_config(config_file, seed)
    names = list(only) or list(LEMMA_SUITES)
    with progress_bar("Lemma campaigns", len(names), quiet) as advance:
        report = verify_lemmas(config, names, progress=lambda _: advance(1))
    payload = {"campaign": dataclasses.asdict(config), **campaign_payload(report)}
    rows = [suite_row(suite) for suite in report.suites]
    failed = [suite.name for suite in report.suites if not suite.passed]
    return payload, rows, failed, report.passed


def _theorems(
    n: int, jobs: int, allow_large: bool, quiet: bool
) -> tuple[dict[str, Any], list[list[Any]], list[str], bool]:
    check_order(n, allow_large)
    with progress_bar(f"Two-cycle graphs on {n} vertices", len(prefixes(n)), quiet) as advance:
        report = extremal_search(
            n, Population.TWO_CYCLES, jobs=jobs, allow_large=allow_large, progress=advance
        )
    failed = [] if report.passed else [f"theorems n={n}"]
    return extremal_payload(report), [extremal_row(report)], failed, report.passed


def _within_class(
    n: int, p: int | None, q: int | None, jobs: int, allow_large: bool, quiet: bool
) -> tuple[dict[str, Any], list[list[Any]], list[str], bool]:
    check_order(n, allow_large)
    if (p is None) != (q is None):
        raise click.UsageError("--p and --q must be given together")
    classes = [(p, q)] if p is not None and q is not None else feasible_classes(n)
    reports = []
    with progress_bar(
        f"Cycle classes on {n} vertices", len(classes) * len(prefixes(n)), quiet
    ) as advance:
        for cp, cq in classes:
            reports.append(
                verify_within_class(
                    n, cp, cq, jobs=jobs, allow_large=allow_large, progress=advance
                )
            )
    passed = all(report.passed for report in reports)
    failed = [f"({r.n},{r.p},{r.q})" for r in reports if not r.passed]
    payload = {
        "passed": passed,
        "classes": [within_class_payload(report) for report in reports],
    }
    return payload, [within_class_row(report) for report in reports], failed, passed


def _closed_forms() -> tuple[dict[str, Any], list[list[Any]], list[str], bool]:
    report = verify_closed_forms()
    failed = [suite.name for suite in report.suites if not suite.passed]
    return (
        campaign_payload(report),
        [suite_row(suite) for suite in report.suites],
        failed,
        report.passed,
    )


@click.command()
@click.option(
    "--suite",
    type=click.Choice(SUITES),
    required=True,
    help="Verification suite to run.",
)
@click.option("--n", type=int, help="Vertex count (theorems, within-class).")
@click.option("--p", type=int, help="First cycle length (within-class).")
@click.option("--q", type=int, help="Second cycle length (within-class).")
@click.option("--seed", type=int, help="Seed for the lemma campaigns.")
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
    help="YAML file overriding lemma campaign settings.",
)
@click.option(
    "--only",
    multiple=True,
    type=click.Choice(list(LEMMA_SUITES)),
    help="Run only the named lemma campaign (repeatable).",
)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--allow-large", is_flag=True, help="Permit n=9 enumerations.")
@click.option("--quiet", is_flag=True, help="Hide progress output.")
@output_options
@handle_cli_error
def verify(
    suite: str,
    n: int | None,
    p: int | None,
    q: int | None,
    seed: int | None,
    config_file: pathlib.Path | None,
    only: tuple[str, ...],
    jobs: int,
    allow_large: bool,
    quiet: bool,
    output_format: str,
    out: pathlib.Path | None,
    decimal: int | None,
) -> None:
    """Run a verification suite; exits with 1 when any check fails."""
    if suite in ("theorems", "within-class") and n is None:
        raise click.UsageError(f"--n is required for --suite {suite}")

    if suite == "lemmas":
        payload, rows, failed, passed = _lemmas(config_file, seed, only, quiet)
        header = SUITE_CSV_HEADER
    elif suite == "closed-forms":
        payload, rows, failed, passed = _closed_forms()
        header = SUITE_CSV_HEADER
    elif suite == "theorems":
        assert n is not None
        payload, rows, failed, passed = _theorems(n, jobs, allow_large, quiet)
        header = EXTREMAL_CSV_HEADER
    else:
        assert n is not None
        payload, rows, failed, passed = _within_class(n, p, q, jobs, allow_large, quiet)
        header = WITHIN_CLASS_CSV_HEADER

    run = RunConfig(
        subcommand="verify",
        inputs=(str(config_file),) if config_file else (),
        n=n,
        p=p,
        q=q,
        population=Population.TWO_CYCLES.value if suite == "theorems" else None,
        jobs=jobs,
        seed=payload.get("seed") if suite == "lemmas" else seed,
        output_format=output_format,
        out=str(out) if out else None,
        extra=(("suite", suite), ("only", list(only))) if only else (("suite", suite),),
    )
    if output_format == "csv":
        emit(render_csv(header, rows), out)
    else:
        emit(render_json({"config": run.to_dict(), "suite": suite, **payload}, decimal), out)

    logger.info("Suite %s finished, passed=%s", suite, passed)
    if not passed:
        raise VerificationFailed(f"{len(failed)} check(s) failed: {', '.join(failed)}")
    if not quiet:
        console.print(f"Suite {suite} passed", style="green")
