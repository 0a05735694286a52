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

from .config import RunConfig, load_campaign_config
from .logging import VerificationFailed, handle_cli_error, setup_logging
from .options import EDGE, output_options
from .render import emit, format_rational, render_csv, render_json

__all__ = [
    "EDGE",
    "RunConfig",
    "VerificationFailed",
    "emit",
    "format_rational",
    "handle_cli_error",
    "load_campaign_config",
    "output_options",
    "render_csv",
    "render_json",
    "setup_logging",
]
