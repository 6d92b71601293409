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

#include "pstat/render.hpp"

#include <sstream>

#include "pstat/stats.hpp"

namespace pstat {

namespace {

constexpr int kSpacing = 40;
constexpr int kArcRise = 20;  // control-point rise per unit of span
constexpr int kMargin = 30;

template <typename T>
void WriteAttr(std::ostream& out, const char* key, const T& value) {
  out << ' ' << key << "=\"" << value << "\"";
}

}  // namespace

std::string RenderSvg(const SetPartition& partition, std::optional<int> trace) {
  const int n = partition.size();
  const int shown = trace.value_or(n);
  const TraceGraph graph = Trace(partition, shown);  // validates the index

  // A quadratic arc peaks at half its control-point rise.
  const int baseline = kMargin + kArcRise * n / 2;
  const int width = kSpacing * (n + 1);
  const int height = baseline + kMargin;

  std::ostringstream out;
  out << "<svg";
  WriteAttr(out, "xmlns", "http://www.w3.org/2000/svg");
  WriteAttr(out, "width", width);
  WriteAttr(out, "height", height);
  out << " viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<line class=\"baseline\" x1=\"" << kSpacing / 2 << "\" y1=\"" << baseline
      << "\" x2=\"" << width - kSpacing / 2 << "\" y2=\"" << baseline
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const Edge& e : graph.edges) {
    const int x1 = kSpacing * e.left;
    const int x2 = kSpacing * e.right;
    const int cx = (x1 + x2) / 2;
    const int cy = baseline - kArcRise * (e.right - e.left);
    out << "<path class=\"arc\" d=\"M " << x1 << ' ' << baseline << " Q " << cx << ' ' << cy
        << ' ' << x2 << ' ' << baseline << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (int v : graph.vacant) {
    const int x = kSpacing * v;
    out << "<line class=\"half-edge\" x1=\"" << x << "\" y1=\"" << baseline << "\" x2=\""
        << x + 12 << "\" y2=\"" << baseline - 24 << "\" stroke=\"black\"/>\n";
  }
  for (int k = 1; k <= shown; ++k) {
    const int x = kSpacing * k;
    out << "<circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << baseline
        << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << baseline + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pstat
