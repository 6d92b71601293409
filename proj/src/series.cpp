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

#include "pstat/series.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "pstat/bijection.hpp"
#include "pstat/stats.hpp"

namespace pstat {

namespace {

constexpr auto kP = static_cast<std::size_t>(Var::P);
constexpr auto kQ = static_cast<std::size_t>(Var::Q);
constexpr auto kU1 = static_cast<std::size_t>(Var::U1);
constexpr auto kU2 = static_cast<std::size_t>(Var::U2);
constexpr auto kV = static_cast<std::size_t>(Var::V);

using Series = std::vector<MultiPoly>;

void CheckOrder(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

// 1 / (1 - a) for a series with a[0] == 0, truncated to a.size() terms.
Series ReciprocalOfOneMinus(const Series& a) {
  Series b(a.size());
  if (b.empty()) return b;
  b[0] = MultiPoly(1);
  for (std::size_t n = 1; n < a.size(); ++n) {
    MultiPoly acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!a[i].is_zero() && !b[n - i].is_zero()) acc += a[i] * b[n - i];
    }
    b[n] = std::move(acc);
  }
  return b;
}

// q^{k-1} times k, the p = q value of [k]_{p,q}.
MultiPoly EqualPqInteger(int k) {
  if (k == 0) return MultiPoly();
  Exponents e{};
  e[kQ] = static_cast<std::uint32_t>(k - 1);
  return MultiPoly::Monomial(e, k);
}

struct StepWeights {
  MultiPoly up;
  MultiPoly red;
  std::function<MultiPoly(int)> down;  // by starting height
  std::function<MultiPoly(int)> blue;  // by starting height
};

void ExtendWeighted(int remaining, int height, const MultiPoly& prefix, const StepWeights& w,
                    MultiPoly& total) {
  if (remaining == 0) {
    total += prefix;
    return;
  }
  auto go = [&](const MultiPoly& weight, int next_height) {
    if (weight.is_zero()) return;
    ExtendWeighted(remaining - 1, next_height, prefix * weight, w, total);
  };
  if (height + 1 <= remaining - 1) go(w.up, height + 1);
  if (height > 0) go(w.down(height), height - 1);
  if (height <= remaining - 1) {
    go(w.red, height);
    go(w.blue(height), height);
  }
}

// Sum over bicolored Motzkin paths of length n of the product of step
// weights; branches through a zero weight are pruned.
MultiPoly WeightedPathSum(int n, const StepWeights& weights) {
  MultiPoly total;
  ExtendWeighted(n, 0, MultiPoly(1), weights, total);
  return total;
}

StepWeights BellWeights() {
  return StepWeights{
      MultiPoly::Variable(Var::U2),
      MultiPoly::Variable(Var::U1),
      [](int k) { return PqInteger(k); },
      [](int k) { return MultiPoly::Variable(Var::V) * PqInteger(k); },
  };
}

void CheckPathSize(int n, int cap) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if (n > cap) {
    throw CapExceeded("size " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
}

MultiPoly FromCounts(const std::map<Exponents, std::uint64_t>& counts) {
  MultiPoly out;
  for (const auto& [e, c] : counts) out.AddTerm(e, BigInt(c));
  return out;
}

std::uint32_t Choose2(std::uint32_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

SeriesExpansion CfExpand(const CFSpec& spec, int order, std::optional<int> depth) {
  CheckOrder(order);
  const int levels = depth.value_or((order + 1) / 2 + 1);
  if (levels < 1) throw std::invalid_argument("continued fraction depth must be positive");
  const auto size = static_cast<std::size_t>(order) + 1;
  Series inner(size);  // zero: the fraction is cut below the deepest level
  for (int k = levels - 1; k >= 0; --k) {
    Series a(size);
    if (size > 1) a[1] = spec.diag(k);
    if (size > 2) {
      const MultiPoly s = spec.sub(k + 1);
      if (!s.is_zero()) {
        for (std::size_t n = 2; n < size; ++n) {
          if (!inner[n - 2].is_zero()) a[n] += s * inner[n - 2];
        }
      }
    }
    inner = ReciprocalOfOneMinus(a);
  }
  return SeriesExpansion{std::move(inner)};
}

SeriesExpansion CfExpandByPaths(const CFSpec& spec, int order) {
  CheckOrder(order);
  const auto size = static_cast<std::size_t>(order) + 1;
  SeriesExpansion out;
  out.coefficients.reserve(size);
  std::vector<MultiPoly> diag(size), sub(size + 1);
  for (std::size_t k = 0; k < size; ++k) diag[k] = spec.diag(static_cast<int>(k));
  for (std::size_t k = 1; k <= size; ++k) sub[k] = spec.sub(static_cast<int>(k));
  std::vector<MultiPoly> weight_at(size + 1);  // by current height
  weight_at[0] = MultiPoly(1);
  out.coefficients.push_back(weight_at[0]);
  for (std::size_t step = 1; step < size; ++step) {
    std::vector<MultiPoly> next(size + 1);
    for (std::size_t h = 0; h < size; ++h) {
      if (weight_at[h].is_zero()) continue;
      next[h + 1] += weight_at[h];
      if (!diag[h].is_zero()) next[h] += diag[h] * weight_at[h];
      if (h > 0 && !sub[h].is_zero()) next[h - 1] += sub[h] * weight_at[h];
    }
    weight_at = std::move(next);
    out.coefficients.push_back(weight_at[0]);
  }
  return out;
}

CFSpec BellCfSpec() {
  return CFSpec{
      [](int k) { return MultiPoly::Variable(Var::U1) + PqInteger(k) * MultiPoly::Variable(Var::V); },
      [](int k) { return MultiPoly::Variable(Var::U2) * PqInteger(k); },
  };
}

CFSpec EdgeCfSpec() {
  return CFSpec{
      [](int k) { return MultiPoly(1) + EqualPqInteger(k) * MultiPoly::Variable(Var::V); },
      [](int k) { return EqualPqInteger(k) * MultiPoly::Variable(Var::V); },
  };
}

CFSpec MatchingCfSpec() {
  return CFSpec{
      [](int) { return MultiPoly(); },
      [](int k) { return PqInteger(k); },
  };
}

std::string_view RouteName(Route route) {
  switch (route) {
    case Route::Enumeration: return "enum";
    case Route::Paths: return "paths";
    case Route::ContinuedFraction: return "cf";
  }
  return "?";
}

std::optional<Route> RouteFromName(std::string_view name) {
  if (name == "enum") return Route::Enumeration;
  if (name == "paths") return Route::Paths;
  if (name == "cf") return Route::ContinuedFraction;
  return std::nullopt;
}

MultiPoly BellPolyEnum(int n, const SeriesOptions& options) {
  std::map<Exponents, std::uint64_t> counts;
  ForEachPartition(
      n,
      [&](const SetPartition& p) {
        const StatTriple s = PatternStats(p);
        const CountStats c = CountStatsOf(p);
        Exponents e{};
        e[kP] = static_cast<std::uint32_t>(s.cr);
        e[kQ] = static_cast<std::uint32_t>(s.ne);
        e[kU1] = static_cast<std::uint32_t>(c.sg);
        e[kU2] = static_cast<std::uint32_t>(c.bl);
        e[kV] = static_cast<std::uint32_t>(c.tr);
        ++counts[e];
      },
      options.partition_cap);
  return FromCounts(counts);
}

MultiPoly BellPolyPaths(int n, const SeriesOptions& options) {
  CheckPathSize(n, options.partition_cap);
  return WeightedPathSum(n, BellWeights());
}

MultiPoly BellPolyCharlier(int n, const SeriesOptions& options) {
  std::map<Exponents, std::uint64_t> counts;
  ForEachCharlierDiagram(
      n,
      [&](const CharlierDiagram& h) {
        const auto heights = h.path().heights();
        Exponents e{};
        for (int j = 1; j <= h.length(); ++j) {
          const auto uj = static_cast<std::size_t>(j - 1);
          switch (h.path().step(j)) {
            case Step::NE: ++e[kU2]; break;
            case Step::RE: ++e[kU1]; break;
            case Step::BE: ++e[kV]; [[fallthrough]];
            case Step::SE:
              e[kP] += static_cast<std::uint32_t>(h.xi()[uj] - 1);
              e[kQ] += static_cast<std::uint32_t>(heights[uj] - h.xi()[uj]);
              break;
          }
        }
        ++counts[e];
      },
      options.partition_cap);
  return FromCounts(counts);
}

MultiPoly BellPolyCf(int n) { return CfExpand(BellCfSpec(), n).coefficients.back(); }

MultiPoly BellPoly(int n, Route route, const SeriesOptions& options) {
  switch (route) {
    case Route::Enumeration: return BellPolyEnum(n, options);
    case Route::Paths: return BellPolyPaths(n, options);
    case Route::ContinuedFraction: return BellPolyCf(n);
  }
  throw std::invalid_argument("unknown route");
}

MultiPoly TouchardL(int n, Route route, const SeriesOptions& options) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  switch (route) {
    case Route::Enumeration: {
      std::map<Exponents, std::uint64_t> counts;
      ForEachMatching(
          2 * n,
          [&](const SetPartition& m) {
            const StatTriple s = PatternStats(m);
            Exponents e{};
            e[kP] = static_cast<std::uint32_t>(s.cr);
            e[kQ] = static_cast<std::uint32_t>(s.ne);
            ++counts[e];
          },
          options.matching_cap);
      return FromCounts(counts);
    }
    case Route::Paths: {
      CheckPathSize(2 * n, options.matching_cap);
      StepWeights w = BellWeights();
      w.up = MultiPoly(1);
      w.red = MultiPoly();
      w.blue = [](int) { return MultiPoly(); };
      return WeightedPathSum(2 * n, w);
    }
    case Route::ContinuedFraction:
      return CfExpand(MatchingCfSpec(), 2 * n).coefficients.back();
  }
  throw std::invalid_argument("unknown route");
}

MultiPoly EPoly(int n, Route route, const SeriesOptions& options) {
  switch (route) {
    case Route::Enumeration: {
      std::map<Exponents, std::uint64_t> counts;
      ForEachPartition(
          n,
          [&](const SetPartition& p) {
            const StatTriple s = PatternStats(p);
            Exponents e{};
            e[kQ] = static_cast<std::uint32_t>(s.cr + s.ne);
            e[kV] = static_cast<std::uint32_t>(CountStatsOf(p).ed);
            ++counts[e];
          },
          options.partition_cap);
      return FromCounts(counts);
    }
    case Route::Paths: {
      CheckPathSize(n, options.partition_cap);
      const MultiPoly v = MultiPoly::Variable(Var::V);
      StepWeights w{v, MultiPoly(1), [](int k) { return EqualPqInteger(k); },
                    [v](int k) { return v * EqualPqInteger(k); }};
      return WeightedPathSum(n, w);
    }
    case Route::ContinuedFraction:
      if (n < 0) throw std::invalid_argument("size must be nonnegative");
      return CfExpand(EdgeCfSpec(), n).coefficients.back();
  }
  throw std::invalid_argument("unknown route");
}

MultiPoly ReflectEdgeSlices(const MultiPoly& e_poly) {
  MultiPoly out;
  for (const auto& [e, c] : e_poly.terms()) {
    if (e[kP] != 0 || e[kU1] != 0 || e[kU2] != 0) {
      throw std::logic_error("edge polynomial has a term outside q, v");
    }
    const std::uint32_t bound = Choose2(e[kV]);
    if (e[kQ] > bound) throw std::logic_error("reflection would give a negative exponent");
    Exponents f{};
    f[kQ] = bound - e[kQ];
    out.AddTerm(f, c);
  }
  return out;
}

MultiPoly ReflectQ(const MultiPoly& poly, std::uint32_t bound) {
  MultiPoly out;
  for (const auto& [e, c] : poly.terms()) {
    if (e[kQ] > bound) throw std::logic_error("reflection would give a negative exponent");
    Exponents f = e;
    f[kQ] = bound - e[kQ];
    out.AddTerm(f, c);
  }
  return out;
}

MultiPoly FPoly(int n, Route route, const SeriesOptions& options) {
  if (route != Route::Enumeration) return ReflectEdgeSlices(EPoly(n, route, options));
  std::map<Exponents, std::uint64_t> counts;
  ForEachPartition(
      n,
      [&](const SetPartition& p) {
        Exponents e{};
        e[kQ] = static_cast<std::uint32_t>(Alignments(p));
        ++counts[e];
      },
      options.partition_cap);
  return FromCounts(counts);
}

MultiPoly TPoly(int n, Route route, const SeriesOptions& options) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  if (route != Route::Enumeration) {
    const MultiPoly l = TouchardL(n, route, options);
    const MultiPoly q = MultiPoly::Variable(Var::Q);
    const MultiPoly diagonal = l.Substitute({q, q, MultiPoly::Variable(Var::U1),
                                             MultiPoly::Variable(Var::U2),
                                             MultiPoly::Variable(Var::V)});
    return ReflectQ(diagonal, Choose2(static_cast<std::uint32_t>(n)));
  }
  std::map<Exponents, std::uint64_t> counts;
  ForEachMatching(
      2 * n,
      [&](const SetPartition& m) {
        Exponents e{};
        e[kQ] = static_cast<std::uint32_t>(Alignments(m));
        ++counts[e];
      },
      options.matching_cap);
  return FromCounts(counts);
}

}  // namespace pstat
