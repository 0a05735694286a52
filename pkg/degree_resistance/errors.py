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

"""Exceptions raised by the degree resistance engine."""


class GraphError(ValueError):
    """Base class for every invalid-input condition in this package."""


class IndexOutOfRange(GraphError):
    def __init__(self, pair: tuple[int, int], n: int) -> None:
        super().__init__(f"Edge {pair} references a vertex outside 0..{n - 1}")
        self.pair = pair


class SelfLoop(GraphError):
    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(f"Edge {pair} is a self-loop")
        self.pair = pair


class DuplicateEdge(GraphError):
    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(f"Edge {pair} appears more than once")
        self.pair = pair


class EmptyCore(GraphError):
    """The graph is a tree, so stripping leaves removes every vertex."""


class Disconnected(GraphError):
    """Effective resistance is undefined across components."""


class InvalidCycle(GraphError):
    pass


class ParameterRangeError(GraphError):
    pass


class PreconditionViolation(GraphError):
    """A surgery was requested on a graph that lacks the required structure."""


class EdgeAbsent(GraphError):
    pass


class EdgePresent(GraphError):
    pass


class Disconnects(GraphError):
    pass


class CycleTooSmall(GraphError):
    pass


class EnumerationRangeError(GraphError):
    pass


class CanonicalizationLimit(GraphError):
    pass


class GraphFormatError(GraphError):
    """An edge-list or shape description could not be parsed."""
