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

#include "pstat/bijection.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pstat {

char StepLetter(Step step) {
  switch (step) {
    case Step::NE: return 'U';
    case Step::SE: return 'D';
    case Step::RE: return 'R';
    case Step::BE: return 'B';
  }
  return '?';
}

LatticePath LatticePath::Parse(std::string_view text) {
  std::vector<Step> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'U': steps.push_back(Step::NE); break;
      case 'D': steps.push_back(Step::SE); break;
      case 'R': steps.push_back(Step::RE); break;
      case 'B': steps.push_back(Step::BE); break;
      default:
        throw ParseError(std::string("unexpected step letter '") + c + "'", i);
    }
  }
  return LatticePath(std::move(steps));
}

int LatticePath::height_of_step(int index) const {
  if (index < 1 || index > length()) throw std::out_of_range("step index out of range");
  return heights()[static_cast<std::size_t>(index - 1)];
}

std::vector<int> LatticePath::heights() const {
  std::vector<int> h{0};
  h.reserve(steps_.size() + 1);
  for (Step s : steps_) {
    int next = h.back();
    if (s == Step::NE) ++next;
    if (s == Step::SE) --next;
    h.push_back(next);
  }
  return h;
}

bool LatticePath::is_bicolored_motzkin() const {
  const auto h = heights();
  return std::all_of(h.begin(), h.end(), [](int v) { return v >= 0; }) && h.back() == 0;
}

bool LatticePath::is_restricted() const {
  if (!is_bicolored_motzkin()) return false;
  const auto h = heights();
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == Step::BE && h[i] == 0) return false;
  }
  return true;
}

bool LatticePath::is_motzkin() const {
  return is_bicolored_motzkin() &&
         std::none_of(steps_.begin(), steps_.end(), [](Step s) { return s == Step::BE; });
}

std::string LatticePath::ToString() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(StepLetter(s));
  return out;
}

LatticePath TypeToPath(const PartitionType& type) {
  std::vector<Step> steps;
  steps.reserve(type.roles().size());
  for (Role r : type.roles()) {
    switch (r) {
      case Role::Opener: steps.push_back(Step::NE); break;
      case Role::Closer: steps.push_back(Step::SE); break;
      case Role::Singleton: steps.push_back(Step::RE); break;
      case Role::Transient: steps.push_back(Step::BE); break;
    }
  }
  return LatticePath(std::move(steps));
}

PartitionType PathToType(const LatticePath& path) {
  if (!path.is_restricted()) {
    throw std::invalid_argument("path " + path.ToString() +
                                " is not a restricted bicolored Motzkin path");
  }
  std::vector<Role> roles;
  roles.reserve(path.steps().size());
  for (Step s : path.steps()) {
    switch (s) {
      case Step::NE: roles.push_back(Role::Opener); break;
      case Step::SE: roles.push_back(Role::Closer); break;
      case Step::RE: roles.push_back(Role::Singleton); break;
      case Step::BE: roles.push_back(Role::Transient); break;
    }
  }
  return PartitionType::FromRoles(std::move(roles));
}

CharlierDiagram::CharlierDiagram(LatticePath path, std::vector<int> xi)
    : path_(std::move(path)), xi_(std::move(xi)) {
  if (!path_.is_restricted()) {
    throw std::invalid_argument("path " + path_.ToString() +
                                " is not a restricted bicolored Motzkin path");
  }
  if (xi_.size() != path_.steps().size()) {
    throw std::invalid_argument("choice sequence has length " + std::to_string(xi_.size()) +
                                ", path has length " + std::to_string(path_.length()));
  }
  const auto h = path_.heights();
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    const Step s = path_.steps()[i];
    const int hi = (s == Step::SE || s == Step::BE) ? h[i] : 1;
    if (xi_[i] < 1 || xi_[i] > hi) {
      throw std::invalid_argument("choice " + std::to_string(xi_[i]) + " at step " +
                                  std::to_string(i + 1) + " outside [1, " + std::to_string(hi) +
                                  "]");
    }
  }
}

CharlierDiagram CharlierDiagram::Unit(LatticePath path) {
  std::vector<int> ones(path.steps().size(), 1);
  return CharlierDiagram(std::move(path), std::move(ones));
}

CharlierDiagram CharlierDiagram::Parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return FromJson(j);
  }
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' between steps and choices", 0);
  LatticePath path = LatticePath::Parse(text.substr(0, bar));
  std::vector<int> xi;
  std::size_t pos = bar + 1;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a choice value", start);
    xi.push_back(value);
    skip();
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      skip();
      if (pos >= text.size()) throw ParseError("expected a choice value", pos);
    }
  }
  return CharlierDiagram(std::move(path), std::move(xi));
}

std::string CharlierDiagram::ToString() const {
  std::string out = path_.ToString() + " | ";
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(xi_[i]);
  }
  return out;
}

nlohmann::json CharlierDiagram::ToJson() const {
  return nlohmann::json{{"steps", path_.ToString()}, {"xi", xi_}};
}

CharlierDiagram CharlierDiagram::FromJson(const nlohmann::json& json) {
  return CharlierDiagram(LatticePath::Parse(json.at("steps").get<std::string>()),
                         json.at("xi").get<std::vector<int>>());
}

std::vector<TraceGraph> InvolutionSteps(const SetPartition& partition) {
  const int n = partition.size();
  const PartitionType type = TypeOf(partition);
  const VacancyProfile profile = SweepVacancies(partition);

  std::vector<TraceGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(n) + 1);
  TraceGraph current;
  graphs.push_back(current);
  for (int i = 1; i <= n; ++i) {
    current.i = i;
    const Role role = type.role(i);
    if (role == Role::Closer || role == Role::Transient) {
      const int l = static_cast<int>(current.vacant.size());
      const int gamma = profile.gamma[static_cast<std::size_t>(i - 1)];
      // gamma-th from the right is (l - gamma + 1)-th from the left.
      const auto at = current.vacant.begin() + (l - gamma);
      current.edges.push_back({*at, i});
      current.vacant.erase(at);
    }
    if (role == Role::Opener || role == Role::Transient) current.vacant.push_back(i);
    graphs.push_back(current);
  }
  for (auto& g : graphs) std::sort(g.edges.begin(), g.edges.end());
  return graphs;
}

namespace {

SetPartition FromEdges(int n, const std::vector<Edge>& edges) {
  std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> has_prev(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    next[static_cast<std::size_t>(e.left)] = e.right;
    has_prev[static_cast<std::size_t>(e.right)] = 1;
  }
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    if (has_prev[static_cast<std::size_t>(x)]) continue;
    std::vector<int> block;
    for (int y = x; y != 0; y = next[static_cast<std::size_t>(y)]) block.push_back(y);
    blocks.push_back(std::move(block));
  }
  return SetPartition::FromBlocks(n, std::move(blocks));
}

}  // namespace

SetPartition Involution(const SetPartition& partition) {
  return FromEdges(partition.size(), InvolutionSteps(partition).back().edges);
}

SetPartition DecodeLeft(const CharlierDiagram& diagram) {
  return AssembleFromLeftRanks(PathToType(diagram.path()), diagram.xi());
}

SetPartition DecodeRight(const CharlierDiagram& diagram) {
  const int n = diagram.length();
  std::vector<Edge> edges;
  std::vector<int> vacant;  // ascending
  for (int j = 1; j <= n; ++j) {
    const Step s = diagram.path().step(j);
    if (s == Step::SE || s == Step::BE) {
      const int xi = diagram.xi()[static_cast<std::size_t>(j - 1)];
      const auto at = vacant.end() - xi;
      edges.push_back({*at, j});
      vacant.erase(at);
    }
    if (s == Step::NE || s == Step::BE) vacant.push_back(j);
  }
  return FromEdges(n, edges);
}

CharlierDiagram EncodeLeft(const SetPartition& partition) {
  const VacancyProfile profile = SweepVacancies(partition);
  std::vector<int> xi(profile.gamma.size(), 1);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (profile.gamma[i] != 0) xi[i] = profile.gamma[i];
  }
  return CharlierDiagram(TypeToPath(TypeOf(partition)), std::move(xi));
}

CharlierDiagram EncodeRight(const SetPartition& partition) {
  const VacancyProfile profile = SweepVacancies(partition);
  std::vector<int> xi(profile.gamma.size(), 1);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (profile.gamma[i] != 0) xi[i] = profile.vacancy[i] - profile.gamma[i] + 1;
  }
  return CharlierDiagram(TypeToPath(TypeOf(partition)), std::move(xi));
}

namespace {

void ExtendPaths(int n, bool restricted, std::vector<Step>& prefix, int height,
                 const std::function<void(const LatticePath&)>& visit) {
  const int remaining = n - static_cast<int>(prefix.size());
  if (remaining == 0) {
    visit(LatticePath(prefix));
    return;
  }
  auto go = [&](Step s, int next_height) {
    prefix.push_back(s);
    ExtendPaths(n, restricted, prefix, next_height, visit);
    prefix.pop_back();
  };
  if (height + 1 <= remaining - 1) go(Step::NE, height + 1);
  if (height > 0) go(Step::SE, height - 1);
  if (height <= remaining - 1) {
    go(Step::RE, height);
    if (height > 0 || !restricted) go(Step::BE, height);
  }
}

void CheckPathLength(int n, int cap) {
  if (n < 0) throw std::invalid_argument("path length must be nonnegative");
  if (n > cap) {
    throw CapExceeded("path length " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
}

}  // namespace

void ForEachRestrictedPath(int n, const std::function<void(const LatticePath&)>& visit,
                           int cap) {
  CheckPathLength(n, cap);
  std::vector<Step> prefix;
  ExtendPaths(n, true, prefix, 0, visit);
}

void ForEachBicoloredPath(int n, const std::function<void(const LatticePath&)>& visit,
                          int cap) {
  CheckPathLength(n, cap);
  std::vector<Step> prefix;
  ExtendPaths(n, false, prefix, 0, visit);
}

void ForEachCharlierDiagram(int n, const std::function<void(const CharlierDiagram&)>& visit,
                            int cap) {
  ForEachRestrictedPath(
      n,
      [&](const LatticePath& path) {
        const auto h = path.heights();
        std::vector<int> limit(static_cast<std::size_t>(n), 1);
        for (std::size_t i = 0; i < limit.size(); ++i) {
          const Step s = path.steps()[i];
          if (s == Step::SE || s == Step::BE) limit[i] = h[i];
        }
        std::vector<int> xi(static_cast<std::size_t>(n), 1);
        while (true) {
          visit(CharlierDiagram(path, xi));
          std::size_t k = xi.size();
          while (k > 0 && xi[k - 1] == limit[k - 1]) xi[--k] = 1;
          if (k == 0) break;
          ++xi[k - 1];
        }
      },
      cap);
}

std::vector<LatticePath> RestrictedPaths(int n, int cap) {
  std::vector<LatticePath> out;
  ForEachRestrictedPath(n, [&](const LatticePath& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<CharlierDiagram> CharlierDiagrams(int n, int cap) {
  std::vector<CharlierDiagram> out;
  ForEachCharlierDiagram(n, [&](const CharlierDiagram& h) { out.push_back(h); }, cap);
  return out;
}

}  // namespace pstat
