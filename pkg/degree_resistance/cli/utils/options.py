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
from collections.abc import Callable

import click

from ...graphs import Edge


def output_options(f: Callable) -> Callable:
    """Decorator to add the shared report options."""
    # Apply options in reverse order since decorators are applied bottom-up
    f = click.option(
        "--decimal",
        type=click.IntRange(min=0, max=60),
        default=None,
        help="Add a k-digit decimal rendering next to every exact rational.",
    )(f)
    f = click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True, path_type=pathlib.Path),
        default=None,
        help="Write the report to this file instead of standard output.",
    )(f)
    f = click.option(
        "--format",
        "output_format",
        type=click.Choice(["json", "csv"]),
        default="json",
        show_default=True,
        help="Report format.",
    )(f)
    return f


class EdgeParamType(click.ParamType):
    """An edge written as ``u,v``."""

    name = "edge"

    def convert(
        self, value: object, param: click.Parameter | None, ctx: click.Context | None
    ) -> Edge:
        if isinstance(value, tuple):
            return value
        try:
            u, v = (int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not an edge of the form 'u,v'", param, ctx)
        return u, v


EDGE = EdgeParamType()
