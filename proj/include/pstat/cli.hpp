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

#ifndef PSTAT_CLI_HPP_
#define PSTAT_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pstat/series.hpp"

namespace pstat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

/// Caps from PSTAT_CAP (one integer applied to both partitions and
/// matchings); defaults when unset. Throws std::invalid_argument when the
/// value is not a positive integer.
SeriesOptions OptionsFromEnvironment();

/// Runs `pstat` with argv-style arguments (args[0] is the program name).
/// Results go to `out`, diagnostics to `err`; returns the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           std::optional<SeriesOptions> options = std::nullopt);

}  // namespace pstat

#endif  // PSTAT_CLI_HPP_
