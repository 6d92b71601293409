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

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "pstat/partition.hpp"
#include "pstat/poly.hpp"

namespace pstat {
namespace {

const MultiPoly p = MultiPoly::Variable(Var::P);
const MultiPoly q = MultiPoly::Variable(Var::Q);
const MultiPoly u1 = MultiPoly::Variable(Var::U1);
const MultiPoly u2 = MultiPoly::Variable(Var::U2);
const MultiPoly v = MultiPoly::Variable(Var::V);

MultiPoly RandomPoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> exponent(0, 2);
  std::uniform_int_distribution<int> coef(-4, 4);
  MultiPoly out;
  for (int t = terms(rng); t > 0; --t) {
    Exponents e{};
    for (auto& x : e) x = static_cast<std::uint32_t>(exponent(rng));
    out.AddTerm(e, coef(rng));
  }
  return out;
}

std::array<BigInt, kVarCount> RandomPoint(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::array<BigInt, kVarCount> point;
  for (auto& x : point) x = d(rng);
  return point;
}

TEST_CASE("printing is graded lexicographic") {
  CHECK(MultiPoly().ToString() == "0");
  CHECK(MultiPoly(1).ToString() == "1");
  CHECK(MultiPoly(-3).ToString() == "-3");
  const MultiPoly l3 = 1 + 2 * p + 2 * q + 2 * p * q + p * p + q * q + 2 * p * p * q +
                       2 * p * q * q + p * p * p + q * q * q;
  CHECK(l3.ToString() == "1+2p+2q+p^2+2pq+q^2+p^3+2p^2q+2pq^2+q^3");
  CHECK((u1 * u1 * u1 + 3 * u1 * u2 + u2 * v).ToString() == "3u1u2+u2v+u1^3");
  CHECK((q - 1).ToString() == "-1+q");
  CHECK((-(p * p)).ToString() == "-p^2");
  CHECK((v * v + 3 * v + 1).ToString() == "1+3v+v^2");
}

TEST_CASE("parse accepts any term order and repeats") {
  const MultiPoly a = MultiPoly::Parse("1+2p+2q+2pq+p^2+q^2+2p^2q+2pq^2+p^3+q^3");
  const MultiPoly b = MultiPoly::Parse("1+2p+2q+p^2+2pq+q^2+p^3+2p^2q+2pq^2+q^3");
  CHECK(a == b);
  CHECK(MultiPoly::Parse("p + p - 2*p") == MultiPoly());
  CHECK(MultiPoly::Parse("u1^2 u2 - 3v") == u1 * u1 * u2 - 3 * v);
  CHECK(MultiPoly::Parse("-q^0") == MultiPoly(-1));
  CHECK(MultiPoly::Parse("0") == MultiPoly());
  CHECK_THROWS_AS(MultiPoly::Parse("x"), ParseError);
  CHECK_THROWS_AS(MultiPoly::Parse("p^"), ParseError);
  CHECK_THROWS_AS(MultiPoly::Parse("1+"), ParseError);
  CHECK_THROWS_AS(MultiPoly::Parse(""), ParseError);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20260415);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = RandomPoly(rng);
    const MultiPoly b = RandomPoly(rng);
    const MultiPoly c = RandomPoly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly());
    CHECK(a * 1 == a);
    CHECK((a * 0).is_zero());
    CHECK(MultiPoly::Parse(a.ToString()) == a);
    CHECK(MultiPoly::FromJson(a.ToJson()) == a);
    CHECK(a.Swap(Var::P, Var::Q).Swap(Var::P, Var::Q) == a);
    const auto point = RandomPoint(rng);
    CHECK((a * b).Evaluate(point) == a.Evaluate(point) * b.Evaluate(point));
    CHECK((a - b).Evaluate(point) == a.Evaluate(point) - b.Evaluate(point));
    // Substituting constants agrees with evaluation.
    std::array<MultiPoly, kVarCount> images;
    for (std::size_t k = 0; k < kVarCount; ++k) images[k] = MultiPoly(point[k]);
    const MultiPoly s = a.Substitute(images);
    CHECK(s.term_count() <= 1);
    CHECK(s.coefficient(Exponents{}) == a.Evaluate(point));
  }
}

TEST_CASE("exact big coefficients") {
  MultiPoly power(1);
  for (int k = 0; k < 100; ++k) power *= (1 + p);
  BigInt binom = 1;
  for (int k = 1; k <= 50; ++k) binom = binom * (100 - k + 1) / k;
  CHECK(power.coefficient(Exponents{50, 0, 0, 0, 0}) == binom);
  CHECK(power.Evaluate({BigInt(1), 0, 0, 0, 0}) == BigInt(1) << 100);
  CHECK(power.degree_in(Var::P) == 100);
  CHECK(power.degree_in(Var::Q) == 0);
}

TEST_CASE("pq integers") {
  CHECK(PqInteger(0).is_zero());
  CHECK(PqInteger(1) == MultiPoly(1));
  CHECK(PqInteger(3).ToString() == "p^2+pq+q^2");
  for (int k = 1; k <= 8; ++k) {
    // (p - q)[k] = p^k - q^k.
    CHECK((p - q) * PqInteger(k) ==
          MultiPoly::Variable(Var::P, k) - MultiPoly::Variable(Var::Q, k));
  }
}

TEST_CASE("substitution and swap") {
  const MultiPoly a = p * p * q + 3 * u1;
  CHECK(a.Swap(Var::P, Var::Q) == q * q * p + 3 * u1);
  std::array<MultiPoly, kVarCount> images{q, q, MultiPoly(1), v, v};
  CHECK(a.Substitute(images) == q * q * q + 3);
  CHECK(VarName(Var::U2) == "u2");
}

}  // namespace
}  // namespace pstat
