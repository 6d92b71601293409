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

// Arc-diagram statistics of set partitions.
//
// Two edges (i1, j1), (i2, j2) with i1 < i2 form exactly one of
//   crossing    i1 < i2 < j1 < j2   (initial edge: the first one)
//   nesting     i1 < i2 < j2 < j1   (interior edge: the second one)
//   alignment   i1 < j1 <= i2 < j2  (initial edge: the first one)
// Note the alignment case includes a shared vertex j1 == i2.

#ifndef PSTAT_STATS_HPP_
#define PSTAT_STATS_HPP_

#include <cstdint>
#include <vector>

#include "pstat/partition.hpp"

namespace pstat {

struct StatTriple {
  std::int64_t cr = 0;
  std::int64_t ne = 0;
  std::int64_t al = 0;
  bool operator==(const StatTriple&) const = default;
  auto operator<=>(const StatTriple&) const = default;
};

struct CountStats {
  int sg = 0;  // singletons
  int bl = 0;  // blocks of size >= 2
  int tr = 0;  // transients
  int ed = 0;  // edges
  bool operator==(const CountStats&) const = default;
};

/// Global crossings, nestings and alignments by a pairwise edge scan.
StatTriple PatternStats(const SetPartition& partition);

std::int64_t Crossings(const SetPartition& partition);
std::int64_t Nestings(const SetPartition& partition);
std::int64_t Alignments(const SetPartition& partition);

/// Per right endpoint j: crossings whose initial edge ends at j, nestings
/// whose interior edge ends at j, alignments whose initial edge ends at j.
/// Throws std::invalid_argument unless j is a closer or transient.
StatTriple EndpointStats(const SetPartition& partition, int j);

/// EndpointStats for every vertex at once (index j-1; zero at openers and
/// singletons), from a single pairwise scan.
std::vector<StatTriple> EndpointStatsProfile(const SetPartition& partition);

std::int64_t CrossingsAt(const SetPartition& partition, int j);
std::int64_t NestingsAt(const SetPartition& partition, int j);
std::int64_t AlignmentsAt(const SetPartition& partition, int j);

/// The i-th trace: edges inside [i] plus the vacant vertices, i.e. left
/// endpoints x of edges (x, y) with x <= i < y.
struct TraceGraph {
  int i = 0;
  std::vector<Edge> edges;
  std::vector<int> vacant;  // ascending
  bool operator==(const TraceGraph&) const = default;
};

TraceGraph Trace(const SetPartition& partition, int i);

/// l_i: number of vacant vertices of the (i-1)-th trace, 1 <= i <= n.
int VacancyCount(const SetPartition& partition, int i);

/// gamma_i: 1-based rank, from the left, of i's partner among the vacant
/// vertices of the (i-1)-th trace. Only defined at closers and transients.
int Gamma(const SetPartition& partition, int i);

/// One left-to-right sweep producing l_i and gamma_i for every i. Index
/// 0 of each vector is element 1; gamma is 0 where undefined.
struct VacancyProfile {
  std::vector<int> vacancy;
  std::vector<int> gamma;
};

VacancyProfile SweepVacancies(const SetPartition& partition);

CountStats CountStatsOf(const SetPartition& partition);

}  // namespace pstat

#endif  // PSTAT_STATS_HPP_
