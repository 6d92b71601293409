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

// Sparse polynomials with exact integer coefficients in the five fixed
// variables p, q, u1, u2, v.

#ifndef PSTAT_POLY_HPP_
#define PSTAT_POLY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace pstat {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : std::size_t { P = 0, Q = 1, U1 = 2, U2 = 3, V = 4 };
inline constexpr std::size_t kVarCount = 5;

using Exponents = std::array<std::uint32_t, kVarCount>;

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger exponent of p first, then q, u1, u2, v.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigInt, GradedLex>;

  MultiPoly() = default;
  MultiPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const BigInt& constant);

  static MultiPoly Variable(Var var, std::uint32_t power = 1);
  static MultiPoly Monomial(const Exponents& exponents, const BigInt& coefficient = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (0 when absent).
  BigInt coefficient(const Exponents& exponents) const;

  std::uint32_t degree_in(Var var) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  /// Adds coefficient * monomial in place.
  void AddTerm(const Exponents& exponents, const BigInt& coefficient);

  /// Evaluates at integer values of (p, q, u1, u2, v).
  BigInt Evaluate(const std::array<BigInt, kVarCount>& values) const;

  /// Replaces every variable by a polynomial.
  MultiPoly Substitute(const std::array<MultiPoly, kVarCount>& images) const;

  /// Exchanges the exponents of two variables.
  MultiPoly Swap(Var a, Var b) const;

  bool operator==(const MultiPoly&) const = default;

  /// Human form, graded-lex, e.g. "1+2p+2q+p^2+2pq+q^2". Zero prints "0".
  std::string ToString() const;
  /// [{"exp":[e_p,e_q,e_u1,e_u2,e_v],"coef":"..."}] in graded-lex order.
  nlohmann::json ToJson() const;
  static MultiPoly FromJson(const nlohmann::json& json);

  /// Parses the human form: a sum of signed terms, each an optional
  /// integer coefficient followed by factors var or var^k. Terms may repeat
  /// and appear in any order. Throws ParseError.
  static MultiPoly Parse(std::string_view text);

 private:
  TermMap terms_;
};

std::string VarName(Var var);

/// [k]_{p,q} = p^{k-1} + p^{k-2} q + ... + q^{k-1}; [0] = 0.
MultiPoly PqInteger(int k);

}  // namespace pstat

#endif  // PSTAT_POLY_HPP_
