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

import importlib.metadata

import click
from rich.console import Console

from .commands.compute import compute
from .commands.enumerate import enumerate_graphs
from .commands.family import build_family
from .commands.transform import transform
from .commands.verify import verify
from .utils import setup_logging

console = Console()


def print_version(ctx: click.Context, param: click.Parameter, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return
    try:
        version_str = importlib.metadata.version("degree-resistance")
        console.print(f"drd version: {version_str}")
    except importlib.metadata.PackageNotFoundError:
        console.print("drd (development version)")
    ctx.exit()


@click.group(help="Exact degree resistance distance of bicyclic graphs")
@click.option(
    "--version",
    "-v",
    is_flag=True,
    callback=print_version,
    expose_value=False,
    is_eager=True,
    help="Show the version and exit.",
)
@click.option("--debug", is_flag=True, help="Enable debug logging")
def cli(debug: bool) -> None:
    setup_logging(debug)


# Register commands
cli.add_command(compute)
cli.add_command(build_family, name="family")
cli.add_command(transform)
cli.add_command(verify)
cli.add_command(enumerate_graphs, name="enumerate")


if __name__ == "__main__":
    cli()
