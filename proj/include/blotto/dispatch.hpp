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
#include <string>
#include <vector>

#include "blotto/boolean.hpp"
#include "blotto/game.hpp"
#include "blotto/partition.hpp"
#include "blotto/rng.hpp"
#include "blotto/verify.hpp"

namespace blotto {

enum class SamplerKind {
  PartitionCoupling,
  SphereCoupling,
  BooleanCoupling,
  TwoPlayerPure,
};

const char* to_string(SamplerKind kind);

struct SamplerSelection {
  SamplerKind kind;
  std::string reason;  // which hypothesis matched
  BidSampler sampler;  // one bid vector per call
  std::optional<Partition> partition;         // partition path only
  std::optional<BooleanEquilibrium> equilibrium;  // Boolean k >= 3 path only
};

/// Routes a validated game to the sampler whose hypothesis it satisfies:
/// Boolean games to the pure (k = 2) or coupled (k >= 3) strategy;
/// continuous games to the partition coupling when a balanced partition is
/// supplied or derivable round-robin, else to the sphere coupling when
/// k = 3 and every value is at most V/3. Throws NoKnownEquilibrium naming
/// the unmet hypothesis otherwise.
SamplerSelection dispatch_sampler(const ValidatedGame& game,
                                  const std::optional<Partition>& pi,
                                  double epsilon);

struct TournamentResult {
  std::vector<double> mean;
  std::vector<double> std_error;
  long rounds = 0;
};

/// Monte Carlo mean utilities when each player draws from their own
/// strategy every round.
TournamentResult run_payoff_tournament(const ValidatedGame& game,
                                       const std::vector<BidSampler>& players,
                                       long rounds, RngStream& stream);

}  // namespace blotto
