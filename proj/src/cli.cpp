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

#include "pstat/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pstat/bijection.hpp"
#include "pstat/render.hpp"
#include "pstat/stats.hpp"
#include "pstat/verify.hpp"

namespace pstat {

namespace {

using nlohmann::json;

// Raised when a computed identity fails; maps to kExitViolation.
class Violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string SetText(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out + "}";
}

void StatsCommand(const std::string& input, const std::string& format, std::ostream& out) {
  const SetPartition p = ParsePartition(input);
  const PartitionType type = TypeOf(p);
  const StatTriple s = PatternStats(p);
  const CountStats c = CountStatsOf(p);
  const VacancyProfile profile = SweepVacancies(p);
  const auto at = EndpointStatsProfile(p);

  struct Row {
    int j, l, gamma;
    StatTriple s;
  };
  std::vector<Row> rows;
  for (int j = 1; j <= p.size(); ++j) {
    const auto uj = static_cast<std::size_t>(j - 1);
    if (profile.gamma[uj] == 0) continue;
    rows.push_back({j, profile.vacancy[uj], profile.gamma[uj], at[uj]});
  }

  if (format == "json") {
    json rows_json = json::array();
    for (const Row& r : rows) {
      rows_json.push_back({{"j", r.j}, {"l", r.l}, {"gamma", r.gamma}, {"cr_at", r.s.cr},
                           {"ne_at", r.s.ne}, {"al_at", r.s.al}});
    }
    json doc{{"partition", FormatPartition(p)},
             {"n", p.size()},
             {"blocks", p.blocks()},
             {"type",
              {{"O", type.openers()},
               {"C", type.closers()},
               {"S", type.singletons()},
               {"T", type.transients()}}},
             {"cr", s.cr},
             {"ne", s.ne},
             {"al", s.al},
             {"sg", c.sg},
             {"bl", c.bl},
             {"tr", c.tr},
             {"ed", c.ed},
             {"endpoints", rows_json}};
    out << doc.dump() << '\n';
    return;
  }
  out << "partition " << FormatPartitionBraces(p) << '\n';
  out << "n=" << p.size() << " blocks=" << p.block_count() << '\n';
  out << "O=" << SetText(type.openers()) << " C=" << SetText(type.closers())
      << " S=" << SetText(type.singletons()) << " T=" << SetText(type.transients()) << '\n';
  out << "cr=" << s.cr << " ne=" << s.ne << " al=" << s.al << '\n';
  out << "sg=" << c.sg << " bl=" << c.bl << " tr=" << c.tr << " ed=" << c.ed << '\n';
  out << "j l_j gamma_j cr_at ne_at al_at\n";
  for (const Row& r : rows) {
    out << r.j << ' ' << r.l << ' ' << r.gamma << ' ' << r.s.cr << ' ' << r.s.ne << ' '
        << r.s.al << '\n';
  }
}

void InvoluteCommand(const std::string& input, bool check, const std::string& format,
                     std::ostream& out) {
  const SetPartition p = ParsePartition(input);
  const SetPartition image = Involution(p);
  std::string failure;
  if (check) {
    const StatTriple s = PatternStats(p);
    const StatTriple t = PatternStats(image);
    if (Involution(image) != p) {
      failure = "phi(phi(pi)) != pi";
    } else if (TypeOf(image) != TypeOf(p)) {
      failure = "type not preserved";
    } else if (t.cr != s.ne || t.ne != s.cr || t.al != s.al) {
      failure = "crossings/nestings not exchanged or alignments changed";
    }
  }
  if (format == "json") {
    json doc{{"input", FormatPartition(p)}, {"image", FormatPartition(image)}};
    if (check) doc["check"] = failure.empty() ? "PASS" : "FAIL";
    if (!failure.empty()) doc["failure"] = failure;
    out << doc.dump() << '\n';
  } else {
    out << FormatPartition(image) << '\n';
    if (check) out << "check: " << (failure.empty() ? "PASS" : "FAIL: " + failure) << '\n';
  }
  if (!failure.empty()) throw Violation("involution check failed for " + FormatPartition(p));
}

void CharlierCommand(const std::string& direction, const std::string& input,
                     const std::string& format, std::ostream& out) {
  if (direction == "encode") {
    const SetPartition p = ParsePartition(input);
    const CharlierDiagram left = EncodeLeft(p);
    const CharlierDiagram right = EncodeRight(p);
    if (format == "json") {
      out << json{{"left", left.ToJson()}, {"right", right.ToJson()}}.dump() << '\n';
    } else {
      out << "left: " << left.ToString() << '\n' << "right: " << right.ToString() << '\n';
    }
    return;
  }
  const CharlierDiagram h = CharlierDiagram::Parse(input);
  const SetPartition p = direction == "decode-left" ? DecodeLeft(h) : DecodeRight(h);
  if (format == "json") {
    out << PartitionToJson(p).dump() << '\n';
  } else {
    out << FormatPartition(p) << '\n';
  }
}

MultiPoly ComputeFamily(char family, int n, Route route, const SeriesOptions& options) {
  switch (family) {
    case 'B': return BellPoly(n, route, options);
    case 'L': return TouchardL(n, route, options);
    case 'T': return TPoly(n, route, options);
    case 'E': return EPoly(n, route, options);
    case 'F': return FPoly(n, route, options);
  }
  throw std::invalid_argument(std::string("unknown family '") + family + "'");
}

void PolyCommand(const std::string& family, int n, const std::string& route_name,
                 const std::string& format, const SeriesOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const char f = family.front();
  MultiPoly result;
  if (route_name == "all") {
    const Route routes[] = {Route::Enumeration, Route::Paths, Route::ContinuedFraction};
    result = ComputeFamily(f, n, routes[0], options);
    for (std::size_t r = 1; r < std::size(routes); ++r) {
      const MultiPoly other = ComputeFamily(f, n, routes[r], options);
      if (other != result) {
        err << "route mismatch for " << family << "_" << n << ": " << RouteName(routes[0])
            << " gives " << result.ToString() << ", " << RouteName(routes[r]) << " gives "
            << other.ToString() << '\n';
        throw Violation("route mismatch");
      }
    }
  } else {
    result = ComputeFamily(f, n, *RouteFromName(route_name), options);
  }
  if (format == "json") {
    out << json{{"family", family},
                {"n", n},
                {"route", route_name},
                {"poly", result.ToString()},
                {"terms", result.ToJson()}}
               .dump()
        << '\n';
  } else {
    out << result.ToString() << '\n';
  }
}

void VerifyCommand(const std::string& suite, int n_max, const std::string& format,
                   const SeriesOptions& options, std::ostream& out) {
  const VerifyReport report = RunVerifySuite(suite, n_max, options);
  if (format == "json") {
    json doc{{"suite", report.suite},
             {"n_max", report.n_max},
             {"result", report.passed ? "PASS" : "FAIL"},
             {"checked", report.checked}};
    if (!report.passed) doc["counterexample"] = report.counterexample;
    out << doc.dump() << '\n';
  } else {
    out << report.suite << " n<=" << report.n_max << ": " << (report.passed ? "PASS" : "FAIL")
        << " (checked " << report.checked << ")\n";
    if (!report.passed) out << "counterexample: " << report.counterexample << '\n';
  }
  if (!report.passed) throw Violation(report.counterexample);
}

}  // namespace

SeriesOptions OptionsFromEnvironment() {
  SeriesOptions options;
  if (const char* raw = std::getenv("PSTAT_CAP"); raw != nullptr && *raw != '\0') {
    std::size_t used = 0;
    int cap = 0;
    try {
      cap = std::stoi(raw, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(raw).size() || cap <= 0) {
      throw std::invalid_argument(std::string("PSTAT_CAP must be a positive integer, got '") +
                                  raw + "'");
    }
    options.partition_cap = cap;
    options.matching_cap = cap;
  }
  return options;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           std::optional<SeriesOptions> options) {
  CLI::App app{"Crossings, nestings and alignments in set partitions", "pstat"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string format = "text";
  const auto text_or_json = CLI::IsMember({"text", "json"});

  auto* stats = app.add_subcommand("stats", "Statistics of a partition");
  stats->add_option("partition", input, "Partition, e.g. 1,9,10/2,3,7/4")->required();
  stats->add_option("--format", format)->check(text_or_json);

  bool check = false;
  auto* involute = app.add_subcommand("involute", "Apply the crossing/nesting involution");
  involute->add_option("partition", input)->required();
  involute->add_flag("--check", check, "Verify the involution and the statistic swap");
  involute->add_option("--format", format)->check(text_or_json);

  std::string direction;
  auto* charlier = app.add_subcommand("charlier", "Charlier diagram encode/decode");
  charlier->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"encode", "decode-left", "decode-right"}));
  charlier->add_option("input", input)->required();
  charlier->add_option("--format", format)->check(text_or_json);

  std::string family;
  int n = 0;
  std::string route = "cf";
  auto* poly = app.add_subcommand("poly", "Generating polynomial of a family");
  poly->add_option("family", family)->required()->check(CLI::IsMember({"B", "L", "T", "E", "F"}));
  poly->add_option("n", n)->required();
  poly->add_option("--route", route)->check(CLI::IsMember({"enum", "paths", "cf", "all"}));
  poly->add_option("--format", format)->check(text_or_json);

  std::string suite;
  std::optional<int> n_max_positional;
  std::optional<int> n_max_flag;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive property suite");
  std::vector<std::string> suites(VerifySuiteNames().begin(), VerifySuiteNames().end());
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("max_size", n_max_positional, "Largest ground set size (same as --n-max)");
  verify->add_option("--n-max", n_max_flag);
  verify->add_option("--format", format)->check(text_or_json);

  std::optional<int> traces;
  std::string svg_format = "svg";
  auto* render = app.add_subcommand("render", "SVG arc diagram of a partition");
  render->add_option("partition", input)->required();
  render->add_option("--traces", traces, "Draw the i-th trace with half-edges");
  render->add_option("--format", svg_format)->check(CLI::IsMember({"svg"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const SeriesOptions caps = options ? *options : OptionsFromEnvironment();
    if (stats->parsed()) {
      StatsCommand(input, format, out);
    } else if (involute->parsed()) {
      InvoluteCommand(input, check, format, out);
    } else if (charlier->parsed()) {
      CharlierCommand(direction, input, format, out);
    } else if (poly->parsed()) {
      PolyCommand(family, n, route, format, caps, out, err);
    } else if (verify->parsed()) {
      if (n_max_positional && n_max_flag && *n_max_positional != *n_max_flag) {
        err << "error: conflicting n-max values\n";
        return kExitUsage;
      }
      const int n_max = n_max_flag ? *n_max_flag : n_max_positional.value_or(6);
      VerifyCommand(suite, n_max, format, caps, out);
    } else if (render->parsed()) {
      out << RenderSvg(ParsePartition(input), traces);
    }
  } catch (const Violation& e) {
    err << "identity violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace pstat
