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

#include "pstat/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pstat {

namespace {

enum class Pattern { Crossing, Nesting, Alignment };

// `first.left < second.left` is required.
Pattern Classify(const Edge& first, const Edge& second) {
  if (first.right <= second.left) return Pattern::Alignment;
  if (second.right < first.right) return Pattern::Nesting;
  return Pattern::Crossing;
}

void RequireCloserOrTransient(const SetPartition& partition, int j) {
  if (j < 1 || j > partition.size()) {
    throw std::invalid_argument("vertex " + std::to_string(j) + " out of range");
  }
  const Role r = TypeOf(partition).role(j);
  if (r != Role::Closer && r != Role::Transient) {
    throw std::invalid_argument("vertex " + std::to_string(j) +
                                " is not a closer or transient");
  }
}

}  // namespace

StatTriple PatternStats(const SetPartition& partition) {
  const auto edges = Edges(partition);  // sorted by left endpoint
  StatTriple s;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      switch (Classify(edges[a], edges[b])) {
        case Pattern::Crossing: ++s.cr; break;
        case Pattern::Nesting: ++s.ne; break;
        case Pattern::Alignment: ++s.al; break;
      }
    }
  }
  return s;
}

std::int64_t Crossings(const SetPartition& partition) { return PatternStats(partition).cr; }
std::int64_t Nestings(const SetPartition& partition) { return PatternStats(partition).ne; }
std::int64_t Alignments(const SetPartition& partition) { return PatternStats(partition).al; }

StatTriple EndpointStats(const SetPartition& partition, int j) {
  RequireCloserOrTransient(partition, j);
  const auto edges = Edges(partition);
  StatTriple s;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& first = edges[a];
      const Edge& second = edges[b];
      switch (Classify(first, second)) {
        case Pattern::Crossing:
          if (first.right == j) ++s.cr;
          break;
        case Pattern::Nesting:
          if (second.right == j) ++s.ne;
          break;
        case Pattern::Alignment:
          if (first.right == j) ++s.al;
          break;
      }
    }
  }
  return s;
}

std::vector<StatTriple> EndpointStatsProfile(const SetPartition& partition) {
  std::vector<StatTriple> out(static_cast<std::size_t>(partition.size()));
  const auto edges = Edges(partition);
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& first = edges[a];
      const Edge& second = edges[b];
      switch (Classify(first, second)) {
        case Pattern::Crossing: ++out[static_cast<std::size_t>(first.right - 1)].cr; break;
        case Pattern::Nesting: ++out[static_cast<std::size_t>(second.right - 1)].ne; break;
        case Pattern::Alignment: ++out[static_cast<std::size_t>(first.right - 1)].al; break;
      }
    }
  }
  return out;
}

std::int64_t CrossingsAt(const SetPartition& partition, int j) {
  return EndpointStats(partition, j).cr;
}
std::int64_t NestingsAt(const SetPartition& partition, int j) {
  return EndpointStats(partition, j).ne;
}
std::int64_t AlignmentsAt(const SetPartition& partition, int j) {
  return EndpointStats(partition, j).al;
}

TraceGraph Trace(const SetPartition& partition, int i) {
  if (i < 0 || i > partition.size()) {
    throw std::invalid_argument("trace index " + std::to_string(i) + " out of range");
  }
  TraceGraph t;
  t.i = i;
  for (const Edge& e : Edges(partition)) {
    if (e.right <= i) {
      t.edges.push_back(e);
    } else if (e.left <= i) {
      t.vacant.push_back(e.left);
    }
  }
  std::sort(t.vacant.begin(), t.vacant.end());
  return t;
}

VacancyProfile SweepVacancies(const SetPartition& partition) {
  const int n = partition.size();
  std::vector<int> predecessor(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> has_successor(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& block : partition.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k) {
      predecessor[static_cast<std::size_t>(block[k])] = block[k - 1];
      has_successor[static_cast<std::size_t>(block[k - 1])] = 1;
    }
  }
  VacancyProfile profile;
  profile.vacancy.resize(static_cast<std::size_t>(n));
  profile.gamma.resize(static_cast<std::size_t>(n));
  std::vector<int> vacant;  // ascending
  for (int i = 1; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    profile.vacancy[ui - 1] = static_cast<int>(vacant.size());
    if (const int partner = predecessor[ui]; partner != 0) {
      const auto it = std::find(vacant.begin(), vacant.end(), partner);
      profile.gamma[ui - 1] = static_cast<int>(it - vacant.begin()) + 1;
      vacant.erase(it);
    }
    if (has_successor[ui]) vacant.push_back(i);
  }
  return profile;
}

int VacancyCount(const SetPartition& partition, int i) {
  if (i < 1 || i > partition.size()) {
    throw std::invalid_argument("vertex " + std::to_string(i) + " out of range");
  }
  return SweepVacancies(partition).vacancy[static_cast<std::size_t>(i - 1)];
}

int Gamma(const SetPartition& partition, int i) {
  RequireCloserOrTransient(partition, i);
  return SweepVacancies(partition).gamma[static_cast<std::size_t>(i - 1)];
}

CountStats CountStatsOf(const SetPartition& partition) {
  CountStats c;
  for (const auto& block : partition.blocks()) {
    if (block.size() == 1) {
      ++c.sg;
    } else {
      ++c.bl;
      c.tr += static_cast<int>(block.size()) - 2;
    }
  }
  c.ed = c.bl + c.tr;
  return c;
}

}  // namespace pstat
