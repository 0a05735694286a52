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
import pathlib
from dataclasses import dataclass
from typing import Any

import yaml

from ...campaigns import CampaignConfig
from ...errors import GraphFormatError


@dataclass(frozen=True)
class RunConfig:
    """Resolved parameters of one CLI invocation, echoed into JSON reports."""

    subcommand: str
    inputs: tuple[str, ...] = ()
    n: int | None = None
    p: int | None = None
    q: int | None = None
    m: int | None = None
    population: str | None = None
    jobs: int = 1
    seed: int | None = None
    output_format: str = "json"
    out: str | None = None
    extra: tuple[tuple[str, Any], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Report form; ``jobs`` is omitted so output is independent of workers."""
        data = dataclasses.asdict(self)
        del data["jobs"]
        data["inputs"] = list(self.inputs)
        data["extra"] = dict(self.extra)
        return data


def load_campaign_config(
    path: pathlib.Path | None, seed: int | None = None
) -> CampaignConfig:
    """Campaign settings from a YAML mapping, with ``seed`` taking precedence."""
    data: dict[str, Any] = {}
    if path is not None:
        with open(path, encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise GraphFormatError(f"Invalid campaign config format in {path}")
        data.update(loaded)
    if seed is not None:
        data["seed"] = seed
    return CampaignConfig.from_mapping(data)
