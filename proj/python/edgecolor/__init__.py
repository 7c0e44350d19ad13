# Copyright 2026 The edgecolor Authors
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

"""Edge coloring of multigraphs with 2d-1 colors and simple graphs with d+1."""

from ._core import EdgeColorError, chromatic_index, color, families, generate, verify

__all__ = ["EdgeColorError", "chromatic_index", "color", "families", "generate", "verify"]
