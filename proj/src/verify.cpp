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

#include "pstat/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pstat/bijection.hpp"
#include "pstat/stats.hpp"

namespace pstat {

namespace {

// Matchings of [2n] grow as (2n-1)!!; the three-route suite stops the
// matching families here.
constexpr int kMatchingRouteLimit = 6;

// Records the first failure and stops further checks.
class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}
  bool ok() const { return report_.passed; }
  void Count() { ++report_.checked; }
  bool Expect(bool condition, const std::string& what) {
    if (!condition && report_.passed) {
      report_.passed = false;
      report_.counterexample = what;
    }
    return condition;
  }

 private:
  VerifyReport& report_;
};

std::string Describe(const SetPartition& p) { return FormatPartition(p); }

void CheckInvolution(int n, Checker& check, const SeriesOptions& options) {
  PartitionStream stream(n, options.partition_cap);
  while (auto p = stream.Next()) {
    if (!check.ok()) return;
    check.Count();
    const SetPartition image = Involution(*p);
    const std::string who = Describe(*p);
    if (!check.Expect(Involution(image) == *p, "phi(phi(pi)) != pi for " + who)) return;
    if (!check.Expect(TypeOf(image) == TypeOf(*p), "type not preserved for " + who)) return;
    const StatTriple s = PatternStats(*p);
    const StatTriple t = PatternStats(image);
    if (!check.Expect(t.cr == s.ne && t.ne == s.cr && t.al == s.al,
                      "statistics not exchanged for " + who)) {
      return;
    }
    const auto before = EndpointStatsProfile(*p);
    const auto after = EndpointStatsProfile(image);
    for (std::size_t j = 0; j < before.size(); ++j) {
      if (!check.Expect(after[j].cr == before[j].ne && after[j].ne == before[j].cr &&
                            after[j].al == before[j].al,
                        "endpoint statistics not exchanged at j=" + std::to_string(j + 1) +
                            " for " + who)) {
        return;
      }
    }
  }
}

void CheckEndpointRefinement(int n, Checker& check, const SeriesOptions& options) {
  PartitionStream stream(n, options.partition_cap);
  while (auto p = stream.Next()) {
    if (!check.ok()) return;
    check.Count();
    const std::string who = Describe(*p);
    const PartitionType type = TypeOf(*p);
    const VacancyProfile profile = SweepVacancies(*p);
    const auto at = EndpointStatsProfile(*p);
    StatTriple sum;
    for (int j = 1; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j - 1);
      const int l = profile.vacancy[uj];
      if (!check.Expect(l == type.height_before(j),
                        "l_" + std::to_string(j) + " differs from path height for " + who)) {
        return;
      }
      const Role r = type.role(j);
      if (r != Role::Closer && r != Role::Transient) continue;
      const int g = profile.gamma[uj];
      int later_left_ends = 0;
      for (int x = j; x <= n; ++x) {
        const Role rx = type.role(x);
        if (rx == Role::Opener || rx == Role::Transient) ++later_left_ends;
      }
      const std::string where = " at j=" + std::to_string(j) + " for " + who;
      if (!check.Expect(at[uj].ne == g - 1, "ne_at != gamma - 1" + where)) return;
      if (!check.Expect(at[uj].cr == l - g, "cr_at != l - gamma" + where)) return;
      if (!check.Expect(at[uj].al == later_left_ends,
                        "al_at != #openers/transients >= j" + where)) {
        return;
      }
      sum.cr += at[uj].cr;
      sum.ne += at[uj].ne;
      sum.al += at[uj].al;
    }
    if (!check.Expect(sum == PatternStats(*p), "endpoint sums differ from totals for " + who)) {
      return;
    }
    const auto steps = InvolutionSteps(*p);
    const SetPartition image = Involution(*p);
    for (int i = 0; i <= n; ++i) {
      if (!check.Expect(steps[static_cast<std::size_t>(i)] == Trace(image, i),
                        "D'_" + std::to_string(i) + " is not the trace of phi(pi) for " + who)) {
        return;
      }
    }
  }
}

void CheckStepCounts(int n, Checker& check, const SeriesOptions& options) {
  std::set<SetPartition> left_images, right_images;
  std::uint64_t diagrams = 0;
  ForEachCharlierDiagram(
      n,
      [&](const CharlierDiagram& h) {
        if (!check.ok()) return;
        check.Count();
        ++diagrams;
        const std::string who = h.ToString();
        const SetPartition left = DecodeLeft(h);
        const SetPartition right = DecodeRight(h);
        left_images.insert(left);
        right_images.insert(right);
        int ne = 0, re = 0, be = 0;
        for (Step s : h.path().steps()) {
          ne += s == Step::NE;
          re += s == Step::RE;
          be += s == Step::BE;
        }
        for (const SetPartition* p : {&left, &right}) {
          const CountStats c = CountStatsOf(*p);
          if (!check.Expect(c.sg == re && c.bl == ne && c.tr == be,
                            "step counts differ from sg/bl/tr for " + who)) {
            return;
          }
          if (!check.Expect(TypeToPath(TypeOf(*p)) == h.path(), "type mismatch for " + who)) {
            return;
          }
        }
        const VacancyProfile profile = SweepVacancies(left);
        for (int j = 1; j <= n; ++j) {
          const Step s = h.path().step(j);
          if (s != Step::SE && s != Step::BE) continue;
          if (!check.Expect(profile.gamma[static_cast<std::size_t>(j - 1)] ==
                                h.xi()[static_cast<std::size_t>(j - 1)],
                            "gamma_j != xi_j for " + who)) {
            return;
          }
        }
        if (!check.Expect(EncodeLeft(left) == h, "left encoding does not invert for " + who)) return;
        if (!check.Expect(EncodeRight(right) == h, "right encoding does not invert for " + who)) {
          return;
        }
        check.Expect(Involution(left) == right, "phi_r != phi o phi_l for " + who);
      },
      options.partition_cap);
  if (!check.ok()) return;
  const std::uint64_t bell = BellNumber(n);
  check.Expect(diagrams == bell, "|Gamma_" + std::to_string(n) + "| = " +
                                     std::to_string(diagrams) + " != Bell");
  check.Expect(left_images.size() == bell,
               "phi_l image has " + std::to_string(left_images.size()) + " partitions at n=" +
                   std::to_string(n));
  check.Expect(right_images.size() == bell,
               "phi_r image has " + std::to_string(right_images.size()) + " partitions at n=" +
                   std::to_string(n));
}

void CheckStepwise(int n, Checker& check, const SeriesOptions& options) {
  ForEachCharlierDiagram(
      n,
      [&](const CharlierDiagram& h) {
        if (!check.ok()) return;
        check.Count();
        const auto left = EndpointStatsProfile(DecodeLeft(h));
        const auto right = EndpointStatsProfile(DecodeRight(h));
        const auto heights = h.path().heights();
        for (int j = 1; j <= n; ++j) {
          const auto uj = static_cast<std::size_t>(j - 1);
          const Step s = h.path().step(j);
          if (s != Step::SE && s != Step::BE) continue;
          const int xi = h.xi()[uj];
          const int k = heights[uj];
          const std::string where = " at j=" + std::to_string(j) + " for " + h.ToString();
          if (!check.Expect(right[uj].cr == xi - 1 && left[uj].ne == xi - 1,
                            "cr_r/ne_l != xi - 1" + where)) {
            return;
          }
          if (!check.Expect(right[uj].ne == k - xi && left[uj].cr == k - xi,
                            "ne_r/cr_l != k - xi" + where)) {
            return;
          }
        }
      },
      options.partition_cap);
}

void CheckCatalan(int n, Checker& check, const SeriesOptions& options) {
  std::set<SetPartition> noncrossing, nonnesting;
  ForEachPartition(
      n,
      [&](const SetPartition& p) {
        check.Count();
        const StatTriple s = PatternStats(p);
        if (s.cr == 0) noncrossing.insert(p);
        if (s.ne == 0) nonnesting.insert(p);
      },
      options.partition_cap);
  std::set<SetPartition> right_units, left_units;
  std::uint64_t paths = 0;
  ForEachRestrictedPath(
      n,
      [&](const LatticePath& w) {
        ++paths;
        const CharlierDiagram unit = CharlierDiagram::Unit(w);
        right_units.insert(DecodeRight(unit));
        left_units.insert(DecodeLeft(unit));
      },
      options.partition_cap);
  const std::uint64_t catalan = CatalanNumber(n);
  const std::string at = " at n=" + std::to_string(n);
  if (!check.Expect(paths == catalan, "restricted path count != Catalan" + at)) return;
  if (!check.Expect(noncrossing.size() == catalan, "|NC_n| != Catalan" + at)) return;
  if (!check.Expect(nonnesting.size() == catalan, "|NN_n| != Catalan" + at)) return;
  if (!check.Expect(right_units == noncrossing, "{phi_r(w,1)} != NC_n" + at)) return;
  if (!check.Expect(left_units == nonnesting, "{phi_l(w,1)} != NN_n" + at)) return;
  std::set<SetPartition> image;
  for (const auto& p : noncrossing) image.insert(Involution(p));
  check.Expect(image == nonnesting, "phi(NC_n) != NN_n" + at);
}

void CheckSymmetry(int n, Checker& check, const SeriesOptions& options) {
  std::map<PartitionType, std::vector<SetPartition>> fibers;
  ForEachPartition(
      n, [&](const SetPartition& p) { fibers[TypeOf(p)].push_back(p); }, options.partition_cap);
  for (const auto& [type, members] : fibers) {
    if (!check.ok()) return;
    check.Count();
    const std::string who = "type of " + Describe(members.front());
    std::multiset<StatTriple> joint, swapped;
    for (const auto& p : members) {
      const StatTriple s = PatternStats(p);
      joint.insert(s);
      swapped.insert(StatTriple{s.ne, s.cr, s.al});
    }
    if (!check.Expect(joint == swapped, "(cr,ne,al) not symmetric over " + who)) return;
    std::uint64_t product = 1;
    for (int j = 1; j <= n; ++j) {
      const Role r = type.role(j);
      if (r == Role::Closer || r == Role::Transient) {
        product *= static_cast<std::uint64_t>(type.height_before(j));
      }
    }
    if (!check.Expect(product == members.size(), "fiber size != product of l_j for " + who)) {
      return;
    }
    auto generated = PartitionsOfType(type);
    std::sort(generated.begin(), generated.end());
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    check.Expect(generated == sorted, "type enumeration differs from fiber for " + who);
  }
}

void CheckThreeRoute(int n, Checker& check, const SeriesOptions& options) {
  const std::string at = " at n=" + std::to_string(n);
  auto agree = [&](const char* family, const MultiPoly& a, const MultiPoly& b, const char* ra,
                   const char* rb) {
    check.Count();
    return check.Expect(a == b, std::string(family) + " " + ra + " route " + a.ToString() +
                                    " != " + rb + " route " + b.ToString() + at);
  };
  const MultiPoly b_enum = BellPolyEnum(n, options);
  if (!agree("B", b_enum, BellPolyPaths(n, options), "enum", "paths")) return;
  if (!agree("B", b_enum, BellPolyCf(n), "enum", "cf")) return;
  if (!agree("B", b_enum, BellPolyCharlier(n, options), "enum", "charlier")) return;
  if (!check.Expect(b_enum.Evaluate({1, 1, 1, 1, 1}) == BellNumber(n), "B(1,1,1,1,1) != Bell" + at))
    return;
  if (!check.Expect(b_enum.Swap(Var::P, Var::Q) == b_enum, "B not symmetric in p, q" + at)) return;

  const MultiPoly e_enum = EPoly(n, Route::Enumeration, options);
  if (!agree("E", e_enum, EPoly(n, Route::Paths, options), "enum", "paths")) return;
  if (!agree("E", e_enum, EPoly(n, Route::ContinuedFraction, options), "enum", "cf")) return;
  const MultiPoly f_enum = FPoly(n, Route::Enumeration, options);
  if (!agree("F", f_enum, FPoly(n, Route::Paths, options), "enum", "paths")) return;
  if (!agree("F", f_enum, FPoly(n, Route::ContinuedFraction, options), "enum", "cf")) return;

  if (n <= kMatchingRouteLimit && 2 * n <= options.matching_cap) {
    const MultiPoly l_enum = TouchardL(n, Route::Enumeration, options);
    if (!agree("L", l_enum, TouchardL(n, Route::Paths, options), "enum", "paths")) return;
    if (!agree("L", l_enum, TouchardL(n, Route::ContinuedFraction, options), "enum", "cf")) return;
    const MultiPoly t_enum = TPoly(n, Route::Enumeration, options);
    if (!agree("T", t_enum, TPoly(n, Route::Paths, options), "enum", "paths")) return;
    agree("T", t_enum, TPoly(n, Route::ContinuedFraction, options), "enum", "cf");
  }
}

using SuiteFn = void (*)(int, Checker&, const SeriesOptions&);

SuiteFn Lookup(std::string_view suite) {
  if (suite == "involution") return CheckInvolution;
  if (suite == "lemma22") return CheckEndpointRefinement;
  if (suite == "prop32") return CheckStepCounts;
  if (suite == "prop35") return CheckStepwise;
  if (suite == "catalan") return CheckCatalan;
  if (suite == "symmetry") return CheckSymmetry;
  if (suite == "threeroute") return CheckThreeRoute;
  return nullptr;
}

}  // namespace

const std::vector<std::string_view>& VerifySuiteNames() {
  static const std::vector<std::string_view> names{
      "involution", "lemma22", "prop32", "prop35", "catalan", "symmetry", "threeroute"};
  return names;
}

VerifyReport RunVerifySuite(std::string_view suite, int n_max, const SeriesOptions& options) {
  const SuiteFn fn = Lookup(suite);
  if (fn == nullptr) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  if (n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
  if (n_max > options.partition_cap) {
    throw CapExceeded("n-max " + std::to_string(n_max) + " exceeds enumeration cap " +
                      std::to_string(options.partition_cap));
  }
  VerifyReport report;
  report.suite = std::string(suite);
  report.n_max = n_max;
  Checker check(report);
  for (int n = 0; n <= n_max && check.ok(); ++n) fn(n, check, options);
  return report;
}

std::uint64_t CatalanNumber(int n) {
  if (n < 0) throw std::invalid_argument("negative Catalan index");
  std::vector<std::uint64_t> c{1};
  for (int m = 1; m <= n; ++m) {
    std::uint64_t next = 0;
    for (int i = 0; i < m; ++i) {
      next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
    c.push_back(next);
  }
  return c.back();
}

}  // namespace pstat
