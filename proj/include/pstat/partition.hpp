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

// Set partitions of [n] = {1, ..., n}, their arc-diagram edges, partition
// types, and exhaustive enumeration.

#ifndef PSTAT_PARTITION_HPP_
#define PSTAT_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pstat {

inline constexpr int kDefaultPartitionCap = 14;
inline constexpr int kDefaultMatchingCap = 16;

/// Raised by the text parsers. `position()` is a 0-based byte offset into
/// the input at which the problem was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an enumeration is requested beyond its configured cap.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An arc (left, right) joining consecutive elements of a block.
struct Edge {
  int left = 0;
  int right = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Role : std::uint8_t { Opener, Closer, Singleton, Transient };

/// A partition of [n] kept in canonical form: blocks ascending internally
/// and ordered by their minimum. Equality is structural.
class SetPartition {
 public:
  /// The empty partition of [0].
  SetPartition() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument on
  /// duplicates, out-of-range elements, empty blocks or incomplete cover.
  static SetPartition FromBlocks(int n, std::vector<std::vector<int>> blocks);

  /// Builds from a restricted growth string (0-based block labels).
  static SetPartition FromRgs(std::span<const int> rgs);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// Restricted growth string: block index (0-based, canonical order) of
  /// each element 1..n, stored at positions 0..n-1.
  std::vector<int> rgs() const;

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Parses block notation such as "1,9,10/2,3,7/4/5,6,11/8". Blocks may be
/// separated by '/' or '-', elements by ',' or whitespace, and each block
/// may be wrapped in braces. An optional "n=K;" prefix fixes the ground set
/// size.
SetPartition ParsePartition(std::string_view text);

/// Canonical text: blocks joined by '/', elements by ','. The empty
/// partition formats as "n=0;".
std::string FormatPartition(const SetPartition& partition);

/// Brace form used in reports: {1,9,10}-{2,3,7}-{4}.
std::string FormatPartitionBraces(const SetPartition& partition);

nlohmann::json PartitionToJson(const SetPartition& partition);
SetPartition PartitionFromJson(const nlohmann::json& json);

/// Consecutive pairs inside each block, sorted by (left, right).
std::vector<Edge> Edges(const SetPartition& partition);

/// The 4-tuple (openers, closers, singletons, transients), stored as one
/// role per element of [n].
class PartitionType {
 public:
  PartitionType() = default;

  /// Builds from the four sets. Throws std::invalid_argument when the sets
  /// do not split [n] or the induced step word is not realizable.
  static PartitionType FromSets(int n, std::span<const int> openers,
                                std::span<const int> closers,
                                std::span<const int> singletons,
                                std::span<const int> transients);

  /// Builds from one role per element (index 0 is element 1). Same
  /// validation as FromSets.
  static PartitionType FromRoles(std::vector<Role> roles);

  int size() const { return static_cast<int>(roles_.size()); }
  Role role(int element) const { return roles_.at(static_cast<std::size_t>(element - 1)); }
  const std::vector<Role>& roles() const { return roles_; }

  std::vector<int> openers() const { return Collect(Role::Opener); }
  std::vector<int> closers() const { return Collect(Role::Closer); }
  std::vector<int> singletons() const { return Collect(Role::Singleton); }
  std::vector<int> transients() const { return Collect(Role::Transient); }

  bool is_matching_type() const;

  /// Height of the induced path before element i (= number of open
  /// blocks after i-1), for 1 <= i <= n.
  int height_before(int element) const;

  bool operator==(const PartitionType&) const = default;
  auto operator<=>(const PartitionType&) const = default;

 private:
  std::vector<int> Collect(Role role) const;
  std::vector<Role> roles_;
};

/// Whether a role word is the type of some partition: running height never
/// negative, ends at zero, transients only while a block is open.
bool IsRealizable(std::span<const Role> roles);

PartitionType TypeOf(const SetPartition& partition);

/// Assembles the partition of the given type in which every closer or
/// transient j is joined to the ranks[j-1]-th vacant vertex counted from the
/// left (1-based). Entries at openers and singletons are ignored. Throws
/// std::invalid_argument if a rank is outside [1, l_j].
SetPartition AssembleFromLeftRanks(const PartitionType& type, std::span<const int> ranks);

/// Bell(n) and (m-1)!! as unsigned 64-bit values, used for stream sizing.
std::uint64_t BellNumber(int n);

/// Iterates over the partitions of [n] in lexicographic RGS order.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int cap = kDefaultPartitionCap);
  std::optional<SetPartition> Next();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
};

/// Iterates over the perfect matchings of [m]. Each step pairs the least
/// unmatched element with a chosen partner; choices advance as an odometer.
class MatchingStream {
 public:
  explicit MatchingStream(int m, int cap = kDefaultMatchingCap);
  std::optional<SetPartition> Next();

 private:
  SetPartition Decode() const;
  int m_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> choice_;
};

/// Iterates over the partitions of a given type by choosing, at each closer
/// or transient j, one of the l_j vacant vertices.
class TypeStream {
 public:
  explicit TypeStream(PartitionType type);
  std::optional<SetPartition> Next();

 private:
  PartitionType type_;
  std::vector<int> slots_;   // elements carrying a choice
  std::vector<int> limits_;  // l_j at each slot
  std::vector<int> ranks_;   // indexed by element - 1
  bool started_ = false;
  bool done_ = false;
};

void ForEachPartition(int n, const std::function<void(const SetPartition&)>& visit,
                      int cap = kDefaultPartitionCap);
void ForEachMatching(int m, const std::function<void(const SetPartition&)>& visit,
                     int cap = kDefaultMatchingCap);
std::vector<SetPartition> AllPartitions(int n, int cap = kDefaultPartitionCap);
std::vector<SetPartition> AllMatchings(int m, int cap = kDefaultMatchingCap);
std::vector<SetPartition> PartitionsOfType(const PartitionType& type);

}  // namespace pstat

#endif  // PSTAT_PARTITION_HPP_
