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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blotto/game.hpp"
#include "blotto/partition.hpp"
#include "blotto/verify.hpp"

namespace blotto {

/// Contents of a game-spec file: required k, n, budget, values, variant
/// ("continuous" | "boolean"); optional 1-based partition labels and
/// epsilon.
struct GameFile {
  GameSpec spec;
  std::optional<Partition> partition;
  std::optional<double> epsilon;
};

GameFile parse_game_json(const nlohmann::json& j);
GameFile load_game_file(const std::string& path);

/// One row per sample, header b1..bn, 17 significant digits.
void write_samples_csv(std::ostream& os,
                       const std::vector<std::vector<double>>& samples);

nlohmann::json samples_to_json(const GameSpec& spec, std::uint64_t seed,
                               const std::vector<std::vector<double>>& samples);

nlohmann::json report_to_json(const VerificationReport& report);
void print_report_table(std::ostream& os, const VerificationReport& report);

}  // namespace blotto
