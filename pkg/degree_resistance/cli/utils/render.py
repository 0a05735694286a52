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

"""Report rendering: JSON with exact ``num/den`` strings, or CSV summaries."""

import csv
import dataclasses
import io
import json
import pathlib
from collections.abc import Mapping, Sequence
from enum import Enum
from fractions import Fraction
from typing import Any

from rich.console import Console

from ...graphs import Graph

console = Console()


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int) -> str:
    """``value`` rounded half-even to ``digits`` places after the point."""
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, part = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{part:0{digits}d}" if digits else f"{sign}{whole}"


def graph_payload(graph: Graph) -> dict[str, Any]:
    return {"n": graph.n, "m": graph.m, "edges": [list(e) for e in graph.sorted_edges()]}


def to_jsonable(value: Any, decimal: int | None = None) -> Any:
    """Convert report objects to JSON types.

    Fractions become ``num/den`` strings; with ``decimal`` set, each rational
    field ``key`` gains a sibling ``key_decimal``.
    """
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Graph):
        return graph_payload(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bytes):
        return value.hex()
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        value = {f.name: getattr(value, f.name) for f in dataclasses.fields(value)}
    if isinstance(value, Mapping):
        result: dict[str, Any] = {}
        for key, item in value.items():
            result[str(key)] = to_jsonable(item, decimal)
            if decimal is not None and isinstance(item, Fraction):
                result[f"{key}_decimal"] = format_decimal(item, decimal)
        return result
    if isinstance(value, Sequence) and not isinstance(value, str):
        return [to_jsonable(item, decimal) for item in value]
    if isinstance(value, frozenset | set):
        return [to_jsonable(item, decimal) for item in sorted(value)]
    return value


def render_json(payload: Mapping[str, Any], decimal: int | None = None) -> str:
    return json.dumps(to_jsonable(payload, decimal), indent=2) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [format_rational(cell) if isinstance(cell, Fraction) else cell for cell in row]
        )
    return buffer.getvalue()


def emit(text: str, out: pathlib.Path | None) -> None:
    """Write the primary report to ``out`` or standard output."""
    if out is None:
        console.print(
            text, end="", markup=False, highlight=False, emoji=False, soft_wrap=True
        )
        return
    out.write_text(text, encoding="utf-8")
