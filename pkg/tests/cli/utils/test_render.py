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
from dataclasses import dataclass
from fractions import Fraction

import pytest

from degree_resistance.cli.utils.render import (
    emit,
    format_decimal,
    format_rational,
    render_csv,
    render_json,
    to_jsonable,
)
from degree_resistance.graphs import BicyclicKind, Graph
from degree_resistance.transforms import Direction


@dataclass(frozen=True)
class _Sample:
    value: Fraction
    kind: BicyclicKind


def test_format_rational_keeps_denominator() -> None:
    assert format_rational(Fraction(128, 3)) == "128/3"
    assert format_rational(Fraction(14)) == "14/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"


@pytest.mark.parametrize(
    "value, digits, expected",
    [
        (Fraction(128, 3), 3, "42.667"),
        (Fraction(-1, 3), 2, "-0.33"),
        (Fraction(1, 8), 2, "0.12"),
        (Fraction(3, 8), 2, "0.38"),
        (Fraction(5, 2), 0, "2"),
        (Fraction(7), 1, "7.0"),
    ],
)
def test_format_decimal_rounds_half_even(value: Fraction, digits: int, expected: str) -> None:
    assert format_decimal(value, digits) == expected


def test_to_jsonable(bowtie: Graph) -> None:
    payload = {
        "sample": _Sample(Fraction(1, 3), BicyclicKind.THETA),
        "graph": bowtie,
        "direction": Direction.EQUAL,
        "form": b"\x05\x01",
        "vertices": frozenset({2, 0}),
    }
    assert to_jsonable(payload) == {
        "sample": {"value": "1/3", "kind": "theta"},
        "graph": {
            "n": 5,
            "m": 6,
            "edges": [[0, 1], [0, 2], [0, 3], [0, 4], [1, 2], [3, 4]],
        },
        "direction": "equal",
        "form": "0501",
        "vertices": [0, 2],
    }


def test_decimal_siblings_are_added_at_every_level() -> None:
    rendered = to_jsonable({"a": Fraction(1, 2), "rows": [{"b": Fraction(2, 3)}]}, decimal=2)
    assert rendered == {
        "a": "1/2",
        "a_decimal": "0.50",
        "rows": [{"b": "2/3", "b_decimal": "0.67"}],
    }


def test_render_json_and_csv() -> None:
    assert json.loads(render_json({"x": Fraction(3)})) == {"x": "3/1"}
    assert render_csv(["a", "b"], [[Fraction(1, 2), "yes"]]) == "a,b\n1/2,yes\n"


def test_emit_to_file(tmp_path: pathlib.Path) -> None:
    out = tmp_path / "report.csv"
    emit("a,b\n", out)
    assert out.read_text(encoding="utf-8") == "a,b\n"
