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

import logging

import click
import pytest
import yaml
from pytest_mock import MockerFixture
from rich.logging import RichHandler

from degree_resistance.cli.commands import enumerate as enumerate_command
from degree_resistance.cli.commands import verify as verify_command
from degree_resistance.cli.utils.logging import (
    VerificationFailed,
    console,
    handle_cli_error,
    setup_logging,
)
from degree_resistance.errors import Disconnected


def _raising(error: BaseException) -> None:
    @handle_cli_error
    def command() -> None:
        raise error

    command()


@pytest.mark.parametrize(
    "error, code",
    [
        (Disconnected("split"), 2),
        (yaml.YAMLError("bad yaml"), 2),
        (FileNotFoundError("missing"), 2),
        (UnicodeDecodeError("utf-8", b"\xff", 0, 1, "invalid start byte"), 2),
        (VerificationFailed("1 check(s) failed"), 1),
        (RuntimeError("boom"), 1),
        (KeyboardInterrupt(), 130),
    ],
)
def test_exit_codes(error: BaseException, code: int, mocker: MockerFixture) -> None:
    mocker.patch("degree_resistance.cli.utils.logging.console")
    with pytest.raises(SystemExit) as excinfo:
        _raising(error)
    assert excinfo.value.code == code


def test_usage_errors_pass_through() -> None:
    with pytest.raises(click.UsageError):
        _raising(click.UsageError("--n is required"))


def test_return_value_is_kept() -> None:
    @handle_cli_error
    def command() -> int:
        return 7

    assert command() == 7


def test_setup_logging_installs_rich_handler(mocker: MockerFixture) -> None:
    basic_config = mocker.patch("logging.basicConfig")

    setup_logging(debug=True)

    kwargs = basic_config.call_args.kwargs
    assert kwargs["level"] == logging.DEBUG
    assert kwargs["force"] is True
    (handler,) = kwargs["handlers"]
    assert isinstance(handler, RichHandler)

    setup_logging(debug=False)
    assert basic_config.call_args.kwargs["level"] == logging.WARNING


def test_commands_share_the_stderr_console() -> None:
    assert console.stderr
    assert enumerate_command.console is console
    assert verify_command.console is console
