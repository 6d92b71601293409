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

// Exhaustive property suites over all small partitions, matchings and
// Charlier diagrams. Each suite stops at the first counterexample.

#ifndef PSTAT_VERIFY_HPP_
#define PSTAT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pstat/series.hpp"

namespace pstat {

struct VerifyReport {
  std::string suite;
  int n_max = 0;
  bool passed = true;
  std::uint64_t checked = 0;    // objects (or polynomials) examined
  std::string counterexample;   // first failure, empty when passed
};

/// involution, lemma22, prop32, prop35, catalan, symmetry, threeroute.
const std::vector<std::string_view>& VerifySuiteNames();

/// Runs a suite for every size 0..n_max. Throws std::invalid_argument for
/// an unknown suite name and CapExceeded when n_max is over the cap.
VerifyReport RunVerifySuite(std::string_view suite, int n_max,
                            const SeriesOptions& options = {});

/// Catalan numbers by the convolution recurrence.
std::uint64_t CatalanNumber(int n);

}  // namespace pstat

#endif  // PSTAT_VERIFY_HPP_
