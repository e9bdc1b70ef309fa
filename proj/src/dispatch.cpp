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

#include "blotto/dispatch.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "blotto/errors.hpp"
#include "blotto/sphere.hpp"

namespace blotto {

const char* to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::PartitionCoupling: return "partition-coupling";
    case SamplerKind::SphereCoupling: return "sphere-coupling";
    case SamplerKind::BooleanCoupling: return "boolean-coupling";
    case SamplerKind::TwoPlayerPure: return "two-player-pure";
  }
  return "unknown";
}

SamplerSelection dispatch_sampler(const ValidatedGame& game,
                                  const std::optional<Partition>& pi,
                                  double epsilon) {
  SamplerSelection out;
  const int k = game.players();
  const int n = game.battlefields();

  if (game.variant() == Variant::Boolean) {
    if (k == 2) {
      const auto pure = two_player_pure(game);
      std::vector<double> bids(pure.begin(), pure.end());
      out.kind = SamplerKind::TwoPlayerPure;
      out.reason = "Boolean game with k=2: maximin pure strategy";
      out.sampler = [bids](RngStream&) { return bids; };
      return out;
    }
    auto eq = std::make_shared<BooleanEquilibrium>(
        solve_equilibrium(game, epsilon));
    out.kind = SamplerKind::BooleanCoupling;
    out.reason = "Boolean game with k>=3: coupled equilibrium probabilities";
    out.equilibrium = *eq;
    out.sampler = [eq](RngStream& stream) {
      const auto draw = sample_boolean_coupling(eq->probs, stream);
      return std::vector<double>(draw.begin(), draw.end());
    };
    return out;
  }

  std::optional<Partition> chosen = pi;
  std::string partition_note;
  if (chosen.has_value()) {
    chosen = validate_partition(game, *chosen);
    partition_note = "supplied balanced partition";
  } else if (n % k == 0) {
    try {
      chosen = validate_partition(game, round_robin_partition(n, k));
      partition_note = "derived round-robin partition";
    } catch (const Error&) {
      chosen.reset();
    }
  }
  if (chosen.has_value()) {
    auto shared = std::make_shared<Partition>(std::move(*chosen));
    out.kind = SamplerKind::PartitionCoupling;
    out.reason = partition_note;
    out.partition = *shared;
    out.sampler = [game, shared](RngStream& stream) {
      return sample_partition_equilibrium(game, *shared, stream);
    };
    return out;
  }

  if (k == 3) {
    const double cap =
        game.total_value() / 3.0 + 1e-12 * game.total_value();
    bool ok = true;
    for (double v : game.values()) ok = ok && v <= cap;
    if (ok) {
      auto sampler = std::make_shared<SphereSampler>(game);
      out.kind = SamplerKind::SphereCoupling;
      out.reason = "k=3 with every value at most V/3: sphere coupling";
      out.sampler = [sampler](RngStream& stream) {
        return sampler->sample(stream);
      };
      return out;
    }
    fail(ErrorCode::NoKnownEquilibrium,
         "k=3 but some battlefield value exceeds V/3, and no balanced "
         "partition is available");
  }
  fail(ErrorCode::NoKnownEquilibrium,
       "no balanced " + std::to_string(k) +
           "-partition supplied or derivable, and the sphere coupling needs "
           "k=3");
}

TournamentResult run_payoff_tournament(const ValidatedGame& game,
                                       const std::vector<BidSampler>& players,
                                       long rounds, RngStream& stream) {
  const int k = game.players();
  if (static_cast<int>(players.size()) != k) {
    fail(ErrorCode::DimensionMismatch,
         "need one strategy per player, got " +
             std::to_string(players.size()));
  }
  TournamentResult out;
  out.rounds = rounds;
  out.mean.assign(k, 0.0);
  out.std_error.assign(k, 0.0);
  std::vector<double> sum(k, 0.0), sumsq(k, 0.0);
  BidMatrix bids(k);
  for (long r = 0; r < rounds; ++r) {
    RngStream round_stream = stream.fork(static_cast<std::uint64_t>(r));
    for (int i = 0; i < k; ++i) {
      RngStream sub = round_stream.fork(static_cast<std::uint64_t>(i));
      bids[i] = players[i](sub);
    }
    const auto utilities = payoff(game, bids);
    for (int i = 0; i < k; ++i) {
      sum[i] += utilities[i];
      sumsq[i] += utilities[i] * utilities[i];
    }
  }
  for (int i = 0; i < k; ++i) {
    const double mean = sum[i] / rounds;
    const double var = std::max(0.0, sumsq[i] / rounds - mean * mean);
    out.mean[i] = mean;
    out.std_error[i] = std::sqrt(var / rounds);
  }
  return out;
}

}  // namespace blotto
