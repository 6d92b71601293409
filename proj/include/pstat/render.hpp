// Copyright 2026 The pstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSTAT_RENDER_HPP_
#define PSTAT_RENDER_HPP_

#include <optional>
#include <string>

#include "pstat/partition.hpp"

namespace pstat {

/// Arc diagram as a standalone SVG document. Vertex k sits at x = 40k on a
/// horizontal baseline, each edge is a quadratic arc above it. With
/// `trace = i` only vertices 1..i are drawn, plus edges inside [i] and a
/// short ray on every vacant vertex. Output depends only on the inputs
/// (integer coordinates, no font metrics).
std::string RenderSvg(const SetPartition& partition, std::optional<int> trace = std::nullopt);

}  // namespace pstat

#endif  // PSTAT_RENDER_HPP_
