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
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pstat/partition.hpp"

namespace pstat {
namespace {

const char kGolden[] = "1,9,10/2,3,7/4/5,6,11/8";

// Bell numbers summed from Stirling numbers of the second kind.
std::uint64_t BellByStirling(int n) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

std::uint64_t DoubleFactorial(int odd) {
  std::uint64_t r = 1;
  for (int k = odd; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::size_t ParseErrorPosition(std::string_view text) {
  try {
    ParsePartition(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for " << text);
  return 0;
}

TEST_CASE("parse and format the golden partition") {
  const SetPartition p = ParsePartition(kGolden);
  CHECK(p.size() == 11);
  CHECK(p.block_count() == 5);
  CHECK(FormatPartition(p) == kGolden);
  CHECK(FormatPartitionBraces(p) == "{1,9,10}-{2,3,7}-{4}-{5,6,11}-{8}");
  CHECK(ParsePartition("{1,9,10}-{2,3,7}-{4}-{5,6,11}-{8}") == p);
}

TEST_CASE("parser accepts alternative separators and order") {
  const SetPartition p = ParsePartition(kGolden);
  CHECK(ParsePartition("8 / 10 9 1 / 7,3,2 / 4 / 11,6,5") == p);
  CHECK(ParsePartition("n=11;1,9,10-2,3,7-4-5,6,11-8") == p);
  CHECK(ParsePartition("  n = 3 ; 1 / 2 / 3 ") == SetPartition::FromBlocks(3, {{1}, {2}, {3}}));
  CHECK(ParsePartition("n=0;").size() == 0);
  CHECK(ParsePartition("").size() == 0);
}

TEST_CASE("parser reports error positions") {
  CHECK(ParseErrorPosition("1,2/2") == 4);   // duplicate
  CHECK(ParseErrorPosition("1,x") == 2);     // bad character
  CHECK(ParseErrorPosition("1//2") == 2);    // empty block
  CHECK(ParseErrorPosition("1,2,") == 4);    // dangling comma
  CHECK(ParseErrorPosition("n=2;1,3") == 6); // out of range
  CHECK(ParseErrorPosition("0,1") == 0);
  CHECK(ParseErrorPosition("n=2 1,2") == 4);
  CHECK(ParseErrorPosition("1,3") == 3);     // 2 missing, reported at end
  CHECK_THROWS_AS(ParsePartition("1/"), ParseError);
  CHECK(ParseErrorPosition("{1,2") == 4);
  CHECK(ParseErrorPosition("{1}2") == 3);
  CHECK(ParseErrorPosition("1}") == 1);
  CHECK(ParseErrorPosition("{1}-{}") == 5);
  CHECK(ParseErrorPosition("n 3;1") == 2);
}

TEST_CASE("FromBlocks canonicalizes and validates") {
  const SetPartition p = SetPartition::FromBlocks(4, {{4, 2}, {3}, {1}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1}, {2, 4}, {3}});
  CHECK(p.rgs() == std::vector<int>{0, 1, 2, 1});
  CHECK_THROWS_AS(SetPartition::FromBlocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::FromBlocks(2, {{1, 2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::FromBlocks(2, {{1, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::FromBlocks(2, {{1, 3}}), std::invalid_argument);
  const std::vector<int> bad_rgs{1, 0};
  CHECK_THROWS_AS(SetPartition::FromRgs(bad_rgs), std::invalid_argument);
}

TEST_CASE("json round trip") {
  const SetPartition p = ParsePartition(kGolden);
  CHECK(PartitionFromJson(PartitionToJson(p)) == p);
  CHECK(PartitionFromJson(PartitionToJson(SetPartition{})) == SetPartition{});
}

TEST_CASE("edges of the golden partition") {
  const auto edges = Edges(ParsePartition(kGolden));
  const std::vector<Edge> expected{{1, 9}, {2, 3}, {3, 7}, {5, 6}, {6, 11}, {9, 10}};
  CHECK(edges == expected);
}

TEST_CASE("golden type") {
  const PartitionType t = TypeOf(ParsePartition(kGolden));
  CHECK(t.openers() == std::vector<int>{1, 2, 5});
  CHECK(t.closers() == std::vector<int>{7, 10, 11});
  CHECK(t.singletons() == std::vector<int>{4, 8});
  CHECK(t.transients() == std::vector<int>{3, 6, 9});
  CHECK_FALSE(t.is_matching_type());
  CHECK(t.height_before(1) == 0);
  CHECK(t.height_before(6) == 3);
  CHECK(t.height_before(11) == 1);
}

TEST_CASE("type validation") {
  const std::vector<int> o{1}, c{2}, none;
  CHECK(PartitionType::FromSets(2, o, c, none, none).is_matching_type());
  // Closer before any opener.
  CHECK_THROWS_AS(PartitionType::FromSets(2, c, o, none, none), std::invalid_argument);
  // Transient with nothing open.
  const std::vector<int> t1{1};
  const std::vector<int> s2{2};
  CHECK_THROWS_AS(PartitionType::FromSets(2, none, none, s2, t1), std::invalid_argument);
  // Overlap and missing cover.
  CHECK_THROWS_AS(PartitionType::FromSets(2, o, o, none, none), std::invalid_argument);
  CHECK_THROWS_AS(PartitionType::FromSets(3, o, c, none, none), std::invalid_argument);
  CHECK_FALSE(IsRealizable(std::vector<Role>{Role::Opener}));
  CHECK(IsRealizable(std::vector<Role>{}));
}

TEST_CASE("enumeration counts against an independent Bell oracle") {
  for (int n = 0; n <= 9; ++n) {
    const auto all = AllPartitions(n);
    CHECK(all.size() == BellByStirling(n));
    CHECK(BellNumber(n) == BellByStirling(n));
    // Distinct, canonical and in increasing RGS order.
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1].rgs() < all[k].rgs());
    for (const auto& p : all) CHECK(SetPartition::FromRgs(p.rgs()) == p);
  }
  CHECK(BellNumber(20) == 51724158235372ULL);
}

TEST_CASE("matchings equal the all-pairs partitions") {
  for (int m = 0; m <= 8; m += 2) {
    std::set<SetPartition> filtered;
    for (const auto& p : AllPartitions(m)) {
      if (std::all_of(p.blocks().begin(), p.blocks().end(),
                      [](const auto& b) { return b.size() == 2; })) {
        filtered.insert(p);
      }
    }
    const auto matchings = AllMatchings(m);
    CHECK(matchings.size() == DoubleFactorial(m - 1));
    CHECK(std::set<SetPartition>(matchings.begin(), matchings.end()) == filtered);
  }
  CHECK(AllMatchings(12).size() == 10395);
  CHECK_THROWS_AS(AllMatchings(3), std::invalid_argument);
}

TEST_CASE("type fibers partition the whole set") {
  for (int n = 0; n <= 7; ++n) {
    std::set<PartitionType> types;
    for (const auto& p : AllPartitions(n)) types.insert(TypeOf(p));
    std::size_t total = 0;
    for (const auto& t : types) {
      const auto fiber = PartitionsOfType(t);
      for (const auto& p : fiber) CHECK(TypeOf(p) == t);
      CHECK(std::set<SetPartition>(fiber.begin(), fiber.end()).size() == fiber.size());
      total += fiber.size();
    }
    CHECK(total == BellByStirling(n));
  }
}

TEST_CASE("assemble from left ranks") {
  const SetPartition p = ParsePartition(kGolden);
  const std::vector<int> ranks{0, 0, 2, 0, 0, 3, 2, 0, 1, 2, 1};
  CHECK(AssembleFromLeftRanks(TypeOf(p), ranks) == p);
  std::vector<int> bad = ranks;
  bad[6] = 4;  // l_7 = 3
  CHECK_THROWS_AS(AssembleFromLeftRanks(TypeOf(p), bad), std::invalid_argument);
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(PartitionStream(15), CapExceeded);
  CHECK_THROWS_AS(PartitionStream(5, 4), CapExceeded);
  CHECK_THROWS_AS(MatchingStream(18), CapExceeded);
  CHECK_THROWS_AS(PartitionStream(-1), std::invalid_argument);
}

}  // namespace
}  // namespace pstat
