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

// Generating polynomials of crossings, nestings and alignments, computed by
// enumeration, by weighted lattice paths and by continued fractions.
//
//   B_n(p,q,u1,u2,v) = sum over partitions of [n] of
//                      p^cr q^ne u1^sg u2^bl v^tr
//   L_n(p,q)         = sum over matchings of [2n] of p^cr q^ne
//   E_n(v,q)         = sum over partitions of [n] of q^(cr+ne) v^ed
//   F_n(q)           = sum over partitions of [n] of q^al
//   T_n(q)           = sum over matchings of [2n] of q^al

#ifndef PSTAT_SERIES_HPP_
#define PSTAT_SERIES_HPP_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pstat/partition.hpp"
#include "pstat/poly.hpp"

namespace pstat {

/// Coefficients of z^0 ... z^N.
struct SeriesExpansion {
  std::vector<MultiPoly> coefficients;
  bool operator==(const SeriesExpansion&) const = default;
};

/// J-fraction 1/(1 - diag(0) z - sub(1) z^2/(1 - diag(1) z - sub(2) z^2/...)).
struct CFSpec {
  std::function<MultiPoly(int)> diag;
  std::function<MultiPoly(int)> sub;
};

/// Bottom-up expansion: the fraction is truncated below `depth` levels
/// (default ceil(N/2) + 1) and each level is inverted as a power series.
SeriesExpansion CfExpand(const CFSpec& spec, int order, std::optional<int> depth = std::nullopt);

/// Division-free expansion of the same fraction as a sum over Motzkin paths
/// (level step at height k weighs diag(k), down step from k weighs sub(k)).
SeriesExpansion CfExpandByPaths(const CFSpec& spec, int order);

/// diag(k) = u1 + [k]_{p,q} v, sub(k) = u2 [k]_{p,q}.
CFSpec BellCfSpec();
/// The p = q, u1 = 1, u2 = v specialization: diag(k) = 1 + k q^{k-1} v,
/// sub(k) = k q^{k-1} v.
CFSpec EdgeCfSpec();
/// The u2 = 1, u1 = v = 0 specialization, as a fraction in z^2:
/// diag(k) = 0, sub(k) = [k]_{p,q}.
CFSpec MatchingCfSpec();

enum class Route { Enumeration, Paths, ContinuedFraction };

std::string_view RouteName(Route route);
std::optional<Route> RouteFromName(std::string_view name);

/// Each family supports every route; `cap` bounds the size of the ground
/// set enumerated, if any.
struct SeriesOptions {
  int partition_cap = kDefaultPartitionCap;
  int matching_cap = kDefaultMatchingCap;
};

MultiPoly BellPolyEnum(int n, const SeriesOptions& options = {});
/// Sum over bicolored Motzkin paths of the step-weight product: NE -> u2,
/// RE -> u1, SE at height k -> [k]_{p,q}, BE at height k -> v [k]_{p,q}.
MultiPoly BellPolyPaths(int n, const SeriesOptions& options = {});
/// The same sum taken over Charlier diagrams, one monomial per diagram.
MultiPoly BellPolyCharlier(int n, const SeriesOptions& options = {});
MultiPoly BellPolyCf(int n);
MultiPoly BellPoly(int n, Route route, const SeriesOptions& options = {});

/// Enumeration: over matchings of [2n]. Paths: B_{2n} paths route at
/// u2 = 1, u1 = v = 0. Continued fraction: MatchingCfSpec.
MultiPoly TouchardL(int n, Route route = Route::ContinuedFraction,
                    const SeriesOptions& options = {});

/// Enumeration: over partitions of [n]. Paths: B_n paths route at p = q,
/// u1 = 1, u2 = v. Continued fraction: EdgeCfSpec.
MultiPoly EPoly(int n, Route route = Route::ContinuedFraction, const SeriesOptions& options = {});

/// Enumeration: sum of q^al over partitions of [n]. Other routes: reflect
/// each v^k slice of E_n (computed by that route) against C(k, 2).
MultiPoly FPoly(int n, Route route = Route::ContinuedFraction, const SeriesOptions& options = {});

/// Enumeration: sum of q^al over matchings of [2n]. Other routes: reflect
/// L_n(q, q) (computed by that route) against C(n, 2).
MultiPoly TPoly(int n, Route route = Route::ContinuedFraction, const SeriesOptions& options = {});

/// Sends q^a v^k to q^{C(k,2) - a}, dropping v. Throws std::logic_error if
/// an exponent would go negative.
MultiPoly ReflectEdgeSlices(const MultiPoly& e_poly);
/// Sends q^a to q^{bound - a}. Throws std::logic_error on a negative result.
MultiPoly ReflectQ(const MultiPoly& poly, std::uint32_t bound);

}  // namespace pstat

#endif  // PSTAT_SERIES_HPP_
