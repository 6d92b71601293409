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
#include <vector>

#include "doctest.h"
#include "pstat/series.hpp"
#include "pstat/stats.hpp"

namespace pstat {
namespace {

const std::array<BigInt, kVarCount> kOnes{1, 1, 1, 1, 1};

std::vector<BigInt> MotzkinNumbers(int n) {
  std::vector<BigInt> m(static_cast<std::size_t>(n) + 1, 0);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) {
    m[k] = m[k - 1];
    for (int a = 0; a <= k - 2; ++a) m[k] += m[a] * m[k - 2 - a];
  }
  return m;
}

std::uint64_t Bell(int n) {
  std::vector<std::uint64_t> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

BigInt DoubleFactorial(int odd) {
  BigInt r = 1;
  for (int k = odd; k > 1; k -= 2) r *= k;
  return r;
}

TEST_CASE("continued fraction expansions agree with path sums") {
  const CFSpec motzkin{[](int) { return MultiPoly(1); }, [](int) { return MultiPoly(1); }};
  const auto m = MotzkinNumbers(12);
  const SeriesExpansion a = CfExpand(motzkin, 12);
  const SeriesExpansion b = CfExpandByPaths(motzkin, 12);
  CHECK(a == b);
  REQUIRE(a.coefficients.size() == 13);
  for (int k = 0; k <= 12; ++k) CHECK(a.coefficients[k] == MultiPoly(m[k]));
  // Deeper truncation changes nothing below the order.
  CHECK(CfExpand(motzkin, 12, 20) == a);

  const CFSpec bell{[](int k) { return MultiPoly(k + 1); }, [](int k) { return MultiPoly(k); }};
  const SeriesExpansion s = CfExpand(bell, 10);
  for (int k = 0; k <= 10; ++k) CHECK(s.coefficients[k] == MultiPoly(static_cast<long long>(Bell(k))));

  for (int order = 0; order <= 8; ++order) {
    CHECK(CfExpand(BellCfSpec(), order) == CfExpandByPaths(BellCfSpec(), order));
    CHECK(CfExpand(EdgeCfSpec(), order) == CfExpandByPaths(EdgeCfSpec(), order));
  }
}

TEST_CASE("known small polynomials") {
  CHECK(BellPoly(3, Route::Enumeration).ToString() == "3u1u2+u2v+u1^3");
  CHECK(BellPoly(0, Route::ContinuedFraction) == MultiPoly(1));
  CHECK(EPoly(3).ToString() == "1+3v+v^2");
  CHECK(FPoly(3).ToString() == "4+q");
  const char* l[] = {"1", "1", "1+p+q", "1+2p+2q+p^2+2pq+q^2+p^3+2p^2q+2pq^2+q^3"};
  const char* t[] = {"1", "1", "2+q", "6+4q+4q^2+q^3"};
  for (int n = 0; n <= 3; ++n) {
    CHECK(TouchardL(n).ToString() == l[n]);
    CHECK(TPoly(n).ToString() == t[n]);
  }
}

TEST_CASE("B routes agree and specialize to Bell numbers") {
  for (int n = 0; n <= 7; ++n) {
    const MultiPoly e = BellPolyEnum(n);
    CHECK(BellPolyPaths(n) == e);
    CHECK(BellPolyCharlier(n) == e);
    CHECK(BellPolyCf(n) == e);
    CHECK(e.Evaluate(kOnes) == Bell(n));
    CHECK(e.Swap(Var::P, Var::Q) == e);
  }
}

TEST_CASE("enumeration matches a direct monomial sum") {
  for (int n = 0; n <= 6; ++n) {
    MultiPoly direct;
    ForEachPartition(n, [&](const SetPartition& pi) {
      const StatTriple s = PatternStats(pi);
      const CountStats c = CountStatsOf(pi);
      direct.AddTerm({static_cast<std::uint32_t>(s.cr), static_cast<std::uint32_t>(s.ne),
                      static_cast<std::uint32_t>(c.sg), static_cast<std::uint32_t>(c.bl),
                      static_cast<std::uint32_t>(c.tr)},
                     1);
    });
    CHECK(BellPolyEnum(n) == direct);
  }
}

TEST_CASE("edge and alignment families") {
  for (int n = 0; n <= 7; ++n) {
    const MultiPoly e = EPoly(n, Route::Enumeration);
    CHECK(EPoly(n, Route::Paths) == e);
    CHECK(EPoly(n, Route::ContinuedFraction) == e);
    CHECK(e.Evaluate(kOnes) == Bell(n));
    const MultiPoly f = FPoly(n, Route::Enumeration);
    CHECK(FPoly(n, Route::Paths) == f);
    CHECK(FPoly(n, Route::ContinuedFraction) == f);
    CHECK(f.Evaluate(kOnes) == Bell(n));
  }
}

TEST_CASE("matching families") {
  for (int n = 0; n <= 5; ++n) {
    const MultiPoly l = TouchardL(n, Route::Enumeration);
    CHECK(TouchardL(n, Route::Paths) == l);
    CHECK(TouchardL(n, Route::ContinuedFraction) == l);
    CHECK(l.Evaluate(kOnes) == DoubleFactorial(2 * n - 1));
    CHECK(l.Swap(Var::P, Var::Q) == l);
    const MultiPoly t = TPoly(n, Route::Enumeration);
    CHECK(TPoly(n, Route::Paths) == t);
    CHECK(TPoly(n, Route::ContinuedFraction) == t);
  }
  CHECK(TouchardL(10).Evaluate(kOnes) == DoubleFactorial(19));
}

TEST_CASE("reflections") {
  const MultiPoly q = MultiPoly::Variable(Var::Q);
  CHECK(ReflectQ(1 + 2 * q, 3) == MultiPoly::Parse("2q^2+q^3"));
  CHECK_THROWS_AS(ReflectQ(q * q, 1), std::logic_error);
  CHECK(ReflectEdgeSlices(EPoly(3)) == FPoly(3, Route::Enumeration));
  CHECK_THROWS_AS(ReflectEdgeSlices(q * MultiPoly::Variable(Var::V)), std::logic_error);
}

TEST_CASE("routes and caps") {
  for (Route r : {Route::Enumeration, Route::Paths, Route::ContinuedFraction}) {
    CHECK(RouteFromName(RouteName(r)) == r);
  }
  CHECK_FALSE(RouteFromName("bogus").has_value());
  SeriesOptions small;
  small.partition_cap = 4;
  small.matching_cap = 4;
  CHECK_THROWS_AS(BellPolyEnum(5, small), CapExceeded);
  CHECK_THROWS_AS(TouchardL(3, Route::Enumeration, small), CapExceeded);
  CHECK_NOTHROW(BellPolyCf(12));
}

}  // namespace
}  // namespace pstat
