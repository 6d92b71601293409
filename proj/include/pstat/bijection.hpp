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

// Lattice paths, Charlier diagrams, the crossing/nesting involution and
// the two Charlier-diagram encodings of set partitions.

#ifndef PSTAT_BIJECTION_HPP_
#define PSTAT_BIJECTION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pstat/partition.hpp"
#include "pstat/stats.hpp"

namespace pstat {

/// North-East, South-East, red East and blue East steps. Text letters are
/// U, D, R and B respectively.
enum class Step : std::uint8_t { NE, SE, RE, BE };

char StepLetter(Step step);

/// A sequence of steps starting at height 0. The height of step i is the
/// height it starts from, h_{i-1}.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Letters U/D/R/B; whitespace is ignored. Throws ParseError on any
  /// other character. Does not check the path shape.
  static LatticePath Parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int index) const { return steps_.at(static_cast<std::size_t>(index - 1)); }

  /// Starting height of step `index` (1-based). Valid for any path.
  int height_of_step(int index) const;

  /// h_0 ... h_n.
  std::vector<int> heights() const;

  /// Nonnegative and ends at zero (East steps of either color allowed).
  bool is_bicolored_motzkin() const;
  /// Bicolored Motzkin with blue East steps only at positive height.
  bool is_restricted() const;
  /// Bicolored Motzkin without blue steps.
  bool is_motzkin() const;

  std::string ToString() const;

  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// Step i is NE/SE/RE/BE for opener/closer/singleton/transient i.
LatticePath TypeToPath(const PartitionType& type);
/// Inverse of TypeToPath. Throws std::invalid_argument unless restricted.
PartitionType PathToType(const LatticePath& path);

/// A restricted path plus one choice per step: 1 at NE/RE steps and within
/// [1, k] at SE/BE steps of height k.
class CharlierDiagram {
 public:
  CharlierDiagram() = default;
  /// Throws std::invalid_argument when the path is not restricted or a
  /// choice is out of range.
  CharlierDiagram(LatticePath path, std::vector<int> xi);

  /// All choices equal to 1.
  static CharlierDiagram Unit(LatticePath path);

  /// "UUBRUBDRBDD | 1,1,2,1,1,3,2,1,1,2,1" (spaces inside the step word are
  /// ignored) or the JSON object form.
  static CharlierDiagram Parse(std::string_view text);

  const LatticePath& path() const { return path_; }
  const std::vector<int>& xi() const { return xi_; }
  int length() const { return path_.length(); }

  std::string ToString() const;
  nlohmann::json ToJson() const;
  static CharlierDiagram FromJson(const nlohmann::json& json);

  bool operator==(const CharlierDiagram&) const = default;
  auto operator<=>(const CharlierDiagram&) const = default;

 private:
  LatticePath path_;
  std::vector<int> xi_;
};

/// The involution. Sweeps left to right keeping the vacant vertices in
/// ascending order; a closer or transient i is joined to the vacant vertex
/// whose rank counted from the right equals gamma_i of the input.
SetPartition Involution(const SetPartition& partition);

/// The intermediate graphs D'_0 ... D'_n built by Involution.
std::vector<TraceGraph> InvolutionSteps(const SetPartition& partition);

/// Left encoding: joins j to the xi_j-th vacant vertex from the left.
SetPartition DecodeLeft(const CharlierDiagram& diagram);
/// Right encoding: joins j to the xi_j-th vacant vertex from the right.
SetPartition DecodeRight(const CharlierDiagram& diagram);

/// xi_j = gamma_j at closers and transients.
CharlierDiagram EncodeLeft(const SetPartition& partition);
/// xi_j = l_j - gamma_j + 1 at closers and transients.
CharlierDiagram EncodeRight(const SetPartition& partition);

/// Restricted bicolored Motzkin paths of length n, in lexicographic order
/// of the step letters NE < SE < RE < BE.
void ForEachRestrictedPath(int n, const std::function<void(const LatticePath&)>& visit,
                           int cap = kDefaultPartitionCap);
/// All bicolored Motzkin paths of length n (blue steps at height 0 allowed).
void ForEachBicoloredPath(int n, const std::function<void(const LatticePath&)>& visit,
                          int cap = kDefaultPartitionCap);
void ForEachCharlierDiagram(int n, const std::function<void(const CharlierDiagram&)>& visit,
                            int cap = kDefaultPartitionCap);

std::vector<LatticePath> RestrictedPaths(int n, int cap = kDefaultPartitionCap);
std::vector<CharlierDiagram> CharlierDiagrams(int n, int cap = kDefaultPartitionCap);

}  // namespace pstat

#endif  // PSTAT_BIJECTION_HPP_
