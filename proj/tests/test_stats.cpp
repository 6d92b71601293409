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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pstat/partition.hpp"
#include "pstat/stats.hpp"

namespace pstat {
namespace {

const char kGolden[] = "1,9,10/2,3,7/4/5,6,11/8";

// Counts straight from the inequality patterns, over ordered pairs of
// distinct edges, with no assumption about edge order.
StatTriple Definitional(const SetPartition& p) {
  StatTriple s;
  const auto edges = Edges(p);
  for (const Edge& a : edges) {
    for (const Edge& b : edges) {
      if (a.left < b.left && b.left < a.right && a.right < b.right) ++s.cr;
      if (a.left < b.left && b.right < a.right) ++s.ne;
      if (a.right <= b.left) ++s.al;
    }
  }
  return s;
}

// Vacant vertices before i, recomputed from the block lists.
std::vector<int> VacantBefore(const SetPartition& p, int i) {
  std::vector<int> out;
  for (const auto& b : p.blocks()) {
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      if (b[k] < i && b[k + 1] >= i) out.push_back(b[k]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("golden statistics") {
  const SetPartition p = ParsePartition(kGolden);
  CHECK(PatternStats(p) == StatTriple{2, 5, 8});
  CHECK(Crossings(p) == 2);
  CHECK(Nestings(p) == 5);
  CHECK(Alignments(p) == 8);
  CHECK(CountStatsOf(p) == CountStats{2, 3, 3, 6});
}

TEST_CASE("golden endpoint values") {
  const SetPartition p = ParsePartition(kGolden);
  CHECK(CrossingsAt(p, 7) == 1);
  CHECK(NestingsAt(p, 7) == 1);
  CHECK(VacancyCount(p, 6) == 3);
  CHECK(Gamma(p, 6) == 3);
  CHECK(VacancyCount(p, 10) == 2);
  CHECK(Gamma(p, 3) == 2);
  CHECK_THROWS_AS(EndpointStats(p, 1), std::invalid_argument);
  CHECK_THROWS_AS(EndpointStats(p, 4), std::invalid_argument);
  CHECK_THROWS_AS(Gamma(p, 5), std::invalid_argument);
  CHECK_THROWS_AS(VacancyCount(p, 12), std::invalid_argument);
}

TEST_CASE("golden trace") {
  const SetPartition p = ParsePartition(kGolden);
  const TraceGraph t = Trace(p, 6);
  CHECK(t.edges == std::vector<Edge>{{2, 3}, {5, 6}});
  CHECK(t.vacant == std::vector<int>{1, 3, 6});
  CHECK(Trace(p, 0).vacant.empty());
  CHECK(Trace(p, 11).edges == Edges(p));
  CHECK_THROWS_AS(Trace(p, 12), std::invalid_argument);
}

TEST_CASE("pattern counts agree with the definitions") {
  for (int n = 0; n <= 8; ++n) {
    ForEachPartition(n, [](const SetPartition& p) {
      const StatTriple s = PatternStats(p);
      CHECK(s == Definitional(p));
      const CountStats c = CountStatsOf(p);
      const std::int64_t ed = c.ed;
      CHECK(s.cr + s.ne + s.al == ed * (ed - 1) / 2);
      CHECK(c.ed == static_cast<int>(Edges(p).size()));
      CHECK(c.sg + 2 * c.bl + c.tr == p.size());
    });
  }
}

TEST_CASE("endpoint refinements sum to totals and match the sweep") {
  for (int n = 1; n <= 8; ++n) {
    ForEachPartition(n, [n](const SetPartition& p) {
      const auto profile = EndpointStatsProfile(p);
      const VacancyProfile sweep = SweepVacancies(p);
      const PartitionType type = TypeOf(p);
      StatTriple sum;
      for (int j = 1; j <= n; ++j) {
        const auto uj = static_cast<std::size_t>(j - 1);
        const auto vacant = VacantBefore(p, j);
        CHECK(sweep.vacancy[uj] == static_cast<int>(vacant.size()));
        CHECK(sweep.vacancy[uj] == type.height_before(j));
        const Role r = type.role(j);
        if (r == Role::Opener || r == Role::Singleton) {
          CHECK(sweep.gamma[uj] == 0);
          CHECK(profile[uj] == StatTriple{});
          continue;
        }
        const StatTriple at = EndpointStats(p, j);
        CHECK(at == profile[uj]);
        // Partner's 1-based rank among the vacant vertices.
        int partner = 0;
        for (const Edge& e : Edges(p)) {
          if (e.right == j) partner = e.left;
        }
        const auto it = std::find(vacant.begin(), vacant.end(), partner);
        REQUIRE(it != vacant.end());
        const int gamma = static_cast<int>(it - vacant.begin()) + 1;
        CHECK(sweep.gamma[uj] == gamma);
        CHECK(at.ne == gamma - 1);
        CHECK(at.cr == sweep.vacancy[uj] - gamma);
        sum.cr += at.cr;
        sum.ne += at.ne;
        sum.al += at.al;
      }
      CHECK(sum == PatternStats(p));
    });
  }
}

}  // namespace
}  // namespace pstat
