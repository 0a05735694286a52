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
import logging
import sys
from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar, cast

import click
import yaml
from rich.console import Console
from rich.logging import RichHandler

from ...errors import GraphError

# Reports own stdout; everything else goes to stderr.
console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])

INPUT_ERROR_EXIT = 2


class VerificationFailed(Exception):
    """A verification run finished and at least one check failed."""


def setup_logging(debug: bool) -> None:
    """Route library logging through rich on stderr."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=debug)],
        force=True,
    )


def handle_cli_error(f: F) -> F:
    """Decorator to map failures onto the documented exit codes.

    Input errors exit with 2, failed verifications with 1, cancellation with
    130 and anything unexpected with 1.

    Args:
        f: The CLI command function to wrap

    Returns:
        The wrapped function that handles errors
    """

    @wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except click.UsageError:
            raise
        except KeyboardInterrupt:
            console.print("\nOperation cancelled by user", style="yellow")
            sys.exit(130)
        except VerificationFailed as e:
            console.print(f"Verification failed: {e!s}", style="bold red")
            sys.exit(1)
        except (
            GraphError, yaml.YAMLError, json.JSONDecodeError, UnicodeDecodeError, OSError
        ) as e:
            console.print(f"Error: {e!s}", style="bold red")
            sys.exit(INPUT_ERROR_EXIT)
        except Exception as e:
            logging.getLogger(__name__).debug("Unhandled error", exc_info=True)
            console.print(f"Error: {e!s}", style="bold red")
            sys.exit(1)

    return cast(F, wrapper)
