// Copyright 2026 The Blotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blotto/spec_io.hpp"

#include <cstdio>
#include <fstream>

#include "blotto/errors.hpp"

namespace blotto {
namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

GameFile parse_game_json(const nlohmann::json& j) {
  GameFile out;
  try {
    out.spec.players = j.at("k").get<int>();
    out.spec.battlefields = j.at("n").get<int>();
    out.spec.budget = j.at("budget").get<double>();
    out.spec.values = j.at("values").get<std::vector<double>>();
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "continuous") {
      out.spec.variant = Variant::Continuous;
    } else if (variant == "boolean") {
      out.spec.variant = Variant::Boolean;
    } else {
      fail(ErrorCode::BadSpecFile,
           "variant must be \"continuous\" or \"boolean\", got \"" + variant +
               "\"");
    }
    if (j.contains("partition")) {
      Partition pi;
      pi.labels = j.at("partition").get<std::vector<int>>();
      out.partition = std::move(pi);
    }
    if (j.contains("epsilon")) {
      out.epsilon = j.at("epsilon").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadSpecFile, e.what());
  }
  return out;
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::BadSpecFile, "cannot open " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadSpecFile, path + ": " + e.what());
  }
  return parse_game_json(j);
}

void write_samples_csv(std::ostream& os,
                       const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) return;
  const std::size_t n = samples.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    os << (j ? "," : "") << 'b' << j + 1;
  }
  os << '\n';
  for (const auto& row : samples) {
    for (std::size_t j = 0; j < n; ++j) {
      os << (j ? "," : "") << fmt17(row[j]);
    }
    os << '\n';
  }
}

nlohmann::json samples_to_json(const GameSpec& spec, std::uint64_t seed,
                               const std::vector<std::vector<double>>& samples) {
  nlohmann::json j;
  j["k"] = spec.players;
  j["n"] = spec.battlefields;
  j["budget"] = spec.budget;
  j["values"] = spec.values;
  j["variant"] =
      spec.variant == Variant::Boolean ? "boolean" : "continuous";
  j["seed"] = seed;
  j["samples"] = samples;
  return j;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statistic", c.statistic},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"sample_count", c.sample_count},
                      {"seed", c.seed},
                      {"derivation", c.derivation}});
  }
  return {{"pass", report.pass()}, {"checks", checks}};
}

void print_report_table(std::ostream& os, const VerificationReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-44s %12s %12s %9s %6s\n", "check",
                "statistic", "threshold", "samples", "ok");
  os << buf;
  for (const auto& c : report.checks) {
    std::snprintf(buf, sizeof(buf), "%-44s %12.4g %12.4g %9ld %6s\n",
                  c.name.c_str(), c.statistic, c.threshold, c.sample_count,
                  c.pass ? "pass" : "FAIL");
    os << buf;
  }
  os << (report.pass() ? "overall: pass" : "overall: FAIL") << '\n';
}

}  // namespace blotto
