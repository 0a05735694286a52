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

"""Report payloads shared by the verify and enumerate commands."""

from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TextColumn,
    TimeElapsedColumn,
)

from ...campaigns import CampaignReport, SuiteResult
from ...enumeration import ExtremalReport, WithinClassReport
from .logging import console as stderr_console

EXTREMAL_CSV_HEADER = [
    "n",
    "population",
    "count",
    "min",
    "max",
    "agrees_min",
    "agrees_max",
]
SUITE_CSV_HEADER = ["suite", "checked", "strict", "equal", "failures", "passed"]
WITHIN_CLASS_CSV_HEADER = ["n", "p", "q", "count", "min", "max", "passed"]


def extremal_payload(report: ExtremalReport) -> dict[str, Any]:
    return {
        "n": report.n,
        "population": report.population,
        "count_labeled": report.count_labeled,
        "count_iso_classes": report.count_iso_classes,
        "min_value": report.min_value,
        "max_value": report.max_value,
        "formula_min": report.formula_min,
        "formula_max": report.formula_max,
        "agrees_min": report.agrees_min,
        "agrees_max": report.agrees_max,
        "min_is_hub": report.min_is_hub,
        "max_is_dumbbell": report.max_is_dumbbell,
        "passed": report.passed,
        "min_attainers": report.min_attainers,
        "max_attainers": report.max_attainers,
    }


def extremal_row(report: ExtremalReport) -> list[Any]:
    return [
        report.n,
        report.population.value,
        report.count_labeled,
        report.min_value,
        report.max_value,
        str(report.agrees_min).lower(),
        str(report.agrees_max).lower(),
    ]


def within_class_payload(report: WithinClassReport) -> dict[str, Any]:
    return {
        "n": report.n,
        "p": report.p,
        "q": report.q,
        "count_labeled": report.count_labeled,
        "min_value": report.min_value,
        "max_value": report.max_value,
        "hub_value": report.hub_value,
        "dumbbell_value": report.dumbbell_value,
        "min_is_hub": report.min_is_hub,
        "max_is_dumbbell": report.max_is_dumbbell,
        "passed": report.passed,
        "min_attainers": report.min_attainers,
        "max_attainers": report.max_attainers,
    }


def within_class_row(report: WithinClassReport) -> list[Any]:
    return [
        report.n,
        report.p,
        report.q,
        report.count_labeled,
        report.min_value,
        report.max_value,
        str(report.passed).lower(),
    ]


def suite_payload(suite: SuiteResult) -> dict[str, Any]:
    return {
        "name": suite.name,
        "passed": suite.passed,
        "checked": suite.checked,
        "strict": suite.strict,
        "equal": suite.equal,
        "failure_count": suite.failure_count,
        "failures": suite.failures,
    }


def suite_row(suite: SuiteResult) -> list[Any]:
    return [
        suite.name,
        suite.checked,
        suite.strict,
        suite.equal,
        suite.failure_count,
        str(suite.passed).lower(),
    ]


def campaign_payload(report: CampaignReport) -> dict[str, Any]:
    return {
        "seed": report.seed,
        "passed": report.passed,
        "suites": [suite_payload(suite) for suite in report.suites],
    }


@contextmanager
def progress_bar(description: str, total: int, quiet: bool) -> Iterator[Any]:
    """Yield an ``advance(k)`` callback backed by a stderr progress bar."""
    with Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=stderr_console,
        disable=quiet,
        transient=True,
    ) as progress:
        task = progress.add_task(description, total=total)

        def advance(step: int = 1) -> None:
            progress.advance(task, step)

        yield advance
