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

#include "pstat/poly.hpp"

#include <algorithm>
#include <cctype>

#include "pstat/partition.hpp"

namespace pstat {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames{"p", "q", "u1", "u2", "v"};

std::uint64_t TotalDegree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = TotalDegree(a);
  const auto db = TotalDegree(b);
  if (da != db) return da < db;
  return a > b;  // p^2 before pq before q^2
}

std::string VarName(Var var) { return std::string(kNames[static_cast<std::size_t>(var)]); }

MultiPoly::MultiPoly(long long constant) : MultiPoly(BigInt(constant)) {}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::Variable(Var var, std::uint32_t power) {
  Exponents e{};
  e[static_cast<std::size_t>(var)] = power;
  return Monomial(e);
}

MultiPoly MultiPoly::Monomial(const Exponents& exponents, const BigInt& coefficient) {
  MultiPoly m;
  m.AddTerm(exponents, coefficient);
  return m;
}

BigInt MultiPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPoly::degree_in(Var var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

void MultiPoly::AddTerm(const Exponents& exponents, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) AddTerm(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < kVarCount; ++k) e[k] = ea[k] + eb[k];
      out.AddTerm(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BigInt MultiPoly::Evaluate(const std::array<BigInt, kVarCount>& values) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      for (std::uint32_t t = 0; t < e[k]; ++t) term *= values[k];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::Substitute(const std::array<MultiPoly, kVarCount>& images) const {
  // Memoized powers of each image.
  std::array<std::vector<MultiPoly>, kVarCount> powers;
  for (std::size_t k = 0; k < kVarCount; ++k) powers[k].push_back(MultiPoly(1));
  auto power = [&](std::size_t k, std::uint32_t exp) -> const MultiPoly& {
    while (powers[k].size() <= exp) powers[k].push_back(powers[k].back() * images[k]);
    return powers[k][exp];
  };
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (e[k] != 0) term *= power(k, e[k]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::Swap(Var a, Var b) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
    out.AddTerm(f, c);
  }
  return out;
}

std::string MultiPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = TotalDegree(e) == 0;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      out.push_back('-');
    } else if (!first) {
      out.push_back('+');
    }
    first = false;
    if (constant || magnitude != 1) out += magnitude.str();
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (e[k] == 0) continue;
      out += kNames[k];
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

nlohmann::json MultiPoly::ToJson() const {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    out.push_back({{"exp", e}, {"coef", c.str()}});
  }
  return out;
}

MultiPoly MultiPoly::FromJson(const nlohmann::json& json) {
  MultiPoly out;
  for (const auto& term : json) {
    out.AddTerm(term.at("exp").get<Exponents>(), BigInt(term.at("coef").get<std::string>()));
  }
  return out;
}

MultiPoly MultiPoly::Parse(std::string_view text) {
  MultiPoly out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  skip();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    const std::size_t term_start = pos;
    BigInt coef = 1;
    if (const std::string digits = read_digits(); !digits.empty()) coef = BigInt(digits);
    Exponents e{};
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
      std::size_t matched = kVarCount;
      // Longest names first so "u1" is not read as "u".
      for (std::size_t k : {2u, 3u, 0u, 1u, 4u}) {
        if (text.substr(pos).starts_with(kNames[k])) {
          matched = k;
          break;
        }
      }
      if (matched == kVarCount) break;
      pos += kNames[matched].size();
      std::uint32_t power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        const std::size_t at = pos;
        const std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected exponent after '^'", at);
        power = static_cast<std::uint32_t>(std::stoul(digits));
      }
      e[matched] += power;
    }
    if (pos == term_start) throw ParseError("expected a term", pos);
    out.AddTerm(e, sign * coef);
  }
  return out;
}

MultiPoly PqInteger(int k) {
  if (k < 0) throw std::invalid_argument("negative (p,q)-integer index");
  MultiPoly out;
  for (int a = 0; a < k; ++a) {
    Exponents e{};
    e[static_cast<std::size_t>(Var::P)] = static_cast<std::uint32_t>(a);
    e[static_cast<std::size_t>(Var::Q)] = static_cast<std::uint32_t>(k - 1 - a);
    out.AddTerm(e, 1);
  }
  return out;
}

}  // namespace pstat
