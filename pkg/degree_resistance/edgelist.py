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

"""Plain-text edge-list format.

The first non-comment line holds ``n m``; each of the next ``m`` lines holds a
0-based pair ``u v``. Lines starting with ``#`` are comments.
"""

import pathlib

from .errors import GraphFormatError
from .graphs import Graph, build_graph


def parse_edgelist(text: str) -> Graph:
    rows = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphFormatError("Edge list is empty; expected a header line 'n m'")

    def ints(number: int, fields: list[str]) -> tuple[int, int]:
        if len(fields) != 2:
            raise GraphFormatError(
                f"Line {number}: expected two integers, got {' '.join(fields)!r}"
            )
        try:
            return int(fields[0]), int(fields[1])
        except ValueError as e:
            raise GraphFormatError(f"Line {number}: {e}") from e

    n, m = ints(*rows[0])
    pairs = [ints(number, fields) for number, fields in rows[1:]]
    if len(pairs) != m:
        raise GraphFormatError(f"Header declares {m} edges but {len(pairs)} follow")
    return build_graph(n, pairs)


def read_edgelist(path: str | pathlib.Path) -> Graph:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"{path}: not UTF-8 text ({e.reason} at byte {e.start})") from e
    return parse_edgelist(text)


def format_edgelist(graph: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"
