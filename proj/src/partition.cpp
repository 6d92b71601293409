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

#include "pstat/partition.hpp"

#include <algorithm>
#include <cctype>

namespace pstat {

namespace {

std::string JoinInts(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

void CheckEnumerationSize(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " size must be nonnegative");
  if (n > cap) {
    throw CapExceeded(std::string(what) + " size " + std::to_string(n) +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

SetPartition SetPartition::FromBlocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n) {
        throw std::invalid_argument("element " + std::to_string(x) + " out of range [1, " +
                                    std::to_string(n) + "]");
      }
      if (seen[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("duplicate element " + std::to_string(x));
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("element " + std::to_string(x) + " missing from cover of [" +
                                  std::to_string(n) + "]");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::FromRgs(std::span<const int> rgs) {
  SetPartition p;
  p.n_ = static_cast<int>(rgs.size());
  int next_label = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const int label = rgs[i];
    if (label < 0 || label > next_label) {
      throw std::invalid_argument("not a restricted growth string at position " +
                                  std::to_string(i));
    }
    if (label == next_label) {
      p.blocks_.emplace_back();
      ++next_label;
    }
    p.blocks_[static_cast<std::size_t>(label)].push_back(static_cast<int>(i) + 1);
  }
  return p;
}

std::vector<int> SetPartition::rgs() const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int x : blocks_[b]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
  }
  return out;
}

SetPartition ParsePartition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_number = [&]() -> long long {
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return value;
  };

  std::optional<int> explicit_n;
  skip_space();
  if (pos < text.size() && text[pos] == 'n') {
    ++pos;
    skip_space();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '=' after n", pos);
    ++pos;
    skip_space();
    explicit_n = static_cast<int>(read_number());
    skip_space();
    if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';' after n=", pos);
    ++pos;
  }

  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> where;  // input offset of each element, for diagnostics
  skip_space();
  if (pos < text.size()) {
    blocks.emplace_back();
    // Braces are optional around each block, as in "{1,9,10}-{2,3,7}".
    bool braced = false;
    bool closed = false;
    while (true) {
      skip_space();
      if (pos >= text.size()) {
        if (blocks.back().empty()) throw ParseError("empty block", pos);
        if (braced && !closed) throw ParseError("expected '}'", pos);
        break;
      }
      const char c = text[pos];
      if (closed && c != '/' && c != '-') {
        throw ParseError("expected a block separator after '}'", pos);
      }
      if (c == '{') {
        if (!blocks.back().empty() || braced) throw ParseError("unexpected '{'", pos);
        braced = true;
        ++pos;
      } else if (c == '}') {
        if (!braced || blocks.back().empty()) throw ParseError("unexpected '}'", pos);
        closed = true;
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        where.push_back(pos);
        const long long v = read_number();
        blocks.back().push_back(static_cast<int>(v));
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_space();
          if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected an element after ','", pos);
          }
        }
      } else if (c == '/' || c == '-') {
        if (blocks.back().empty()) throw ParseError("empty block", pos);
        if (braced && !closed) throw ParseError("expected '}'", pos);
        ++pos;
        blocks.emplace_back();
        braced = false;
        closed = false;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
  }

  int max_element = 0;
  std::size_t k = 0;
  std::vector<std::size_t> first_seen;
  for (const auto& block : blocks) {
    for (int x : block) {
      if (x == 0) throw ParseError("element 0 out of range", where[k]);
      if (explicit_n && x > *explicit_n) {
        throw ParseError("element " + std::to_string(x) + " out of range [1, " +
                             std::to_string(*explicit_n) + "]",
                         where[k]);
      }
      if (static_cast<std::size_t>(x) >= first_seen.size()) {
        first_seen.resize(static_cast<std::size_t>(x) + 1, std::string_view::npos);
      }
      if (first_seen[static_cast<std::size_t>(x)] != std::string_view::npos) {
        throw ParseError("duplicate element " + std::to_string(x), where[k]);
      }
      first_seen[static_cast<std::size_t>(x)] = where[k];
      max_element = std::max(max_element, x);
      ++k;
    }
  }
  const int n = explicit_n.value_or(max_element);
  for (int x = 1; x <= n; ++x) {
    if (static_cast<std::size_t>(x) >= first_seen.size() ||
        first_seen[static_cast<std::size_t>(x)] == std::string_view::npos) {
      throw ParseError("element " + std::to_string(x) + " missing from cover of [" +
                           std::to_string(n) + "]",
                       text.size());
    }
  }
  return SetPartition::FromBlocks(n, std::move(blocks));
}

std::string FormatPartition(const SetPartition& partition) {
  if (partition.size() == 0) return "n=0;";
  std::string out;
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    if (b != 0) out.push_back('/');
    out += JoinInts(partition.blocks()[b], ',');
  }
  return out;
}

std::string FormatPartitionBraces(const SetPartition& partition) {
  if (partition.size() == 0) return "{}";
  std::string out;
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    if (b != 0) out.push_back('-');
    out += "{" + JoinInts(partition.blocks()[b], ',') + "}";
  }
  return out;
}

nlohmann::json PartitionToJson(const SetPartition& partition) {
  return nlohmann::json{{"n", partition.size()}, {"blocks", partition.blocks()}};
}

SetPartition PartitionFromJson(const nlohmann::json& json) {
  return SetPartition::FromBlocks(json.at("n").get<int>(),
                                  json.at("blocks").get<std::vector<std::vector<int>>>());
}

std::vector<Edge> Edges(const SetPartition& partition) {
  std::vector<Edge> out;
  for (const auto& block : partition.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) out.push_back({block[i - 1], block[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsRealizable(std::span<const Role> roles) {
  int height = 0;
  for (Role r : roles) {
    switch (r) {
      case Role::Opener:
        ++height;
        break;
      case Role::Closer:
        if (height == 0) return false;
        --height;
        break;
      case Role::Transient:
        if (height == 0) return false;
        break;
      case Role::Singleton:
        break;
    }
  }
  return height == 0;
}

PartitionType PartitionType::FromRoles(std::vector<Role> roles) {
  if (!IsRealizable(roles)) throw std::invalid_argument("role word is not a partition type");
  PartitionType t;
  t.roles_ = std::move(roles);
  return t;
}

PartitionType PartitionType::FromSets(int n, std::span<const int> openers,
                                      std::span<const int> closers,
                                      std::span<const int> singletons,
                                      std::span<const int> transients) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  std::vector<int> assigned(static_cast<std::size_t>(n), -1);
  auto place = [&](std::span<const int> set, Role role) {
    for (int x : set) {
      if (x < 1 || x > n) {
        throw std::invalid_argument("type element " + std::to_string(x) + " out of range");
      }
      auto& slot = assigned[static_cast<std::size_t>(x - 1)];
      if (slot != -1) {
        throw std::invalid_argument("type sets overlap at " + std::to_string(x));
      }
      slot = static_cast<int>(role);
    }
  };
  place(openers, Role::Opener);
  place(closers, Role::Closer);
  place(singletons, Role::Singleton);
  place(transients, Role::Transient);
  std::vector<Role> roles;
  roles.reserve(assigned.size());
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (assigned[i] == -1) {
      throw std::invalid_argument("type sets do not cover " + std::to_string(i + 1));
    }
    roles.push_back(static_cast<Role>(assigned[i]));
  }
  return FromRoles(std::move(roles));
}

std::vector<int> PartitionType::Collect(Role role) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool PartitionType::is_matching_type() const {
  return std::none_of(roles_.begin(), roles_.end(), [](Role r) {
    return r == Role::Singleton || r == Role::Transient;
  });
}

int PartitionType::height_before(int element) const {
  if (element < 1 || element > size()) throw std::out_of_range("element out of range");
  int height = 0;
  for (int i = 1; i < element; ++i) {
    const Role r = roles_[static_cast<std::size_t>(i - 1)];
    if (r == Role::Opener) ++height;
    if (r == Role::Closer) --height;
  }
  return height;
}

PartitionType TypeOf(const SetPartition& partition) {
  std::vector<Role> roles(static_cast<std::size_t>(partition.size()), Role::Singleton);
  for (const auto& block : partition.blocks()) {
    if (block.size() < 2) continue;
    for (std::size_t i = 0; i < block.size(); ++i) {
      Role r = Role::Transient;
      if (i == 0) r = Role::Opener;
      if (i + 1 == block.size()) r = Role::Closer;
      roles[static_cast<std::size_t>(block[i] - 1)] = r;
    }
  }
  return PartitionType::FromRoles(std::move(roles));
}

SetPartition AssembleFromLeftRanks(const PartitionType& type, std::span<const int> ranks) {
  const int n = type.size();
  if (ranks.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("rank sequence length does not match type");
  }
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> block_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> vacant;  // ascending
  for (int j = 1; j <= n; ++j) {
    const Role role = type.role(j);
    if (role == Role::Opener || role == Role::Singleton) {
      block_of[static_cast<std::size_t>(j)] = blocks.size();
      blocks.push_back({j});
      if (role == Role::Opener) vacant.push_back(j);
      continue;
    }
    const int rank = ranks[static_cast<std::size_t>(j - 1)];
    if (rank < 1 || rank > static_cast<int>(vacant.size())) {
      throw std::invalid_argument("rank " + std::to_string(rank) + " at " + std::to_string(j) +
                                  " outside [1, " + std::to_string(vacant.size()) + "]");
    }
    const int partner = vacant[static_cast<std::size_t>(rank - 1)];
    vacant.erase(vacant.begin() + (rank - 1));
    const std::size_t b = block_of[static_cast<std::size_t>(partner)];
    blocks[b].push_back(j);
    block_of[static_cast<std::size_t>(j)] = b;
    if (role == Role::Transient) vacant.push_back(j);
  }
  return SetPartition::FromBlocks(n, std::move(blocks));
}

std::uint64_t BellNumber(int n) {
  if (n < 0) throw std::invalid_argument("negative Bell index");
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

PartitionStream::PartitionStream(int n, int cap) : n_(n) {
  CheckEnumerationSize(n, cap, "partition");
  rgs_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<SetPartition> PartitionStream::Next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return SetPartition::FromRgs(rgs_);
  }
  // prefix_max_[i] = max(rgs_[0..i]).
  for (int i = n_ - 1; i >= 1; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rgs_[ui] <= prefix_max_[ui - 1]) {
      ++rgs_[ui];
      prefix_max_[ui] = std::max(prefix_max_[ui - 1], rgs_[ui]);
      for (std::size_t k = ui + 1; k < rgs_.size(); ++k) {
        rgs_[k] = 0;
        prefix_max_[k] = prefix_max_[ui];
      }
      return SetPartition::FromRgs(rgs_);
    }
  }
  done_ = true;
  return std::nullopt;
}

MatchingStream::MatchingStream(int m, int cap) : m_(m) {
  CheckEnumerationSize(m, cap, "matching");
  if (m % 2 != 0) throw std::invalid_argument("matchings need an even ground set, got " +
                                              std::to_string(m));
  choice_.assign(static_cast<std::size_t>(m / 2), 0);
}

SetPartition MatchingStream::Decode() const {
  std::vector<int> free(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) free[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> blocks;
  for (int c : choice_) {
    const int a = free.front();
    const int b = free[static_cast<std::size_t>(c) + 1];
    free.erase(free.begin() + c + 1);
    free.erase(free.begin());
    blocks.push_back({a, b});
  }
  return SetPartition::FromBlocks(m_, std::move(blocks));
}

std::optional<SetPartition> MatchingStream::Next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Decode();
  }
  // Level k chooses among m - 2k - 1 partners.
  for (int k = static_cast<int>(choice_.size()) - 1; k >= 0; --k) {
    auto& c = choice_[static_cast<std::size_t>(k)];
    if (c + 1 < m_ - 2 * k - 1) {
      ++c;
      for (std::size_t t = static_cast<std::size_t>(k) + 1; t < choice_.size(); ++t) choice_[t] = 0;
      return Decode();
    }
  }
  done_ = true;
  return std::nullopt;
}

TypeStream::TypeStream(PartitionType type) : type_(std::move(type)) {
  ranks_.assign(static_cast<std::size_t>(type_.size()), 1);
  int height = 0;
  for (int j = 1; j <= type_.size(); ++j) {
    const Role r = type_.role(j);
    if (r == Role::Closer || r == Role::Transient) {
      slots_.push_back(j);
      limits_.push_back(height);
    }
    if (r == Role::Opener) ++height;
    if (r == Role::Closer) --height;
  }
}

std::optional<SetPartition> TypeStream::Next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return AssembleFromLeftRanks(type_, ranks_);
  }
  for (std::size_t s = slots_.size(); s-- > 0;) {
    auto& r = ranks_[static_cast<std::size_t>(slots_[s] - 1)];
    if (r < limits_[s]) {
      ++r;
      for (std::size_t t = s + 1; t < slots_.size(); ++t) {
        ranks_[static_cast<std::size_t>(slots_[t] - 1)] = 1;
      }
      return AssembleFromLeftRanks(type_, ranks_);
    }
  }
  done_ = true;
  return std::nullopt;
}

void ForEachPartition(int n, const std::function<void(const SetPartition&)>& visit, int cap) {
  PartitionStream stream(n, cap);
  while (auto p = stream.Next()) visit(*p);
}

void ForEachMatching(int m, const std::function<void(const SetPartition&)>& visit, int cap) {
  MatchingStream stream(m, cap);
  while (auto p = stream.Next()) visit(*p);
}

std::vector<SetPartition> AllPartitions(int n, int cap) {
  std::vector<SetPartition> out;
  ForEachPartition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<SetPartition> AllMatchings(int m, int cap) {
  std::vector<SetPartition> out;
  ForEachMatching(m, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<SetPartition> PartitionsOfType(const PartitionType& type) {
  std::vector<SetPartition> out;
  TypeStream stream(type);
  while (auto p = stream.Next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace pstat
