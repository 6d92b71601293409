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

#include <string>

#include "doctest.h"
#include "pstat/render.hpp"
#include "pstat/stats.hpp"

namespace pstat {
namespace {

std::size_t Count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST_CASE("small diagram is exact") {
  const std::string svg = RenderSvg(ParsePartition("1,3/2"));
  CHECK(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"160\" height=\"90\""));
  CHECK(svg.find("<path class=\"arc\" d=\"M 40 60 Q 80 20 120 60\"") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
}

TEST_CASE("element counts follow the partition") {
  const SetPartition p = ParsePartition("1,9,10/2,3,7/4/5,6,11/8");
  const std::string svg = RenderSvg(p);
  CHECK(Count(svg, "class=\"vertex\"") == 11);
  CHECK(Count(svg, "class=\"arc\"") == Edges(p).size());
  CHECK(Count(svg, "class=\"half-edge\"") == 0);
  CHECK(RenderSvg(p) == svg);  // deterministic

  for (int i = 0; i <= 11; ++i) {
    const std::string trace = RenderSvg(p, i);
    const TraceGraph t = Trace(p, i);
    CHECK(Count(trace, "class=\"vertex\"") == static_cast<std::size_t>(i));
    CHECK(Count(trace, "class=\"arc\"") == t.edges.size());
    CHECK(Count(trace, "class=\"half-edge\"") == t.vacant.size());
  }
  CHECK_THROWS_AS(RenderSvg(p, 12), std::invalid_argument);
  CHECK_THROWS_AS(RenderSvg(p, -1), std::invalid_argument);
}

TEST_CASE("empty partition renders") {
  const std::string svg = RenderSvg(SetPartition{});
  CHECK(Count(svg, "<svg") == 1);
  CHECK(Count(svg, "class=\"vertex\"") == 0);
}

}  // namespace
}  // namespace pstat
