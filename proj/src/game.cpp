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

#include "blotto/game.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blotto/errors.hpp"

namespace blotto {
namespace {

// Utility shares with no feasibility checks; callers validate first. The
// Lotto evaluators also use this on bid draws that are allowed to exceed
// the hard budget.
std::vector<std::vector<double>> raw_shares(const std::vector<double>& values,
                                            const BidMatrix& bids) {
  const int k = static_cast<int>(bids.size());
  const int n = static_cast<int>(values.size());
  std::vector<std::vector<double>> shares(k, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double top = bids[0][j];
    for (int i = 1; i < k; ++i) top = std::max(top, bids[i][j]);
    int ties = 0;
    for (int i = 0; i < k; ++i) ties += bids[i][j] == top ? 1 : 0;
    const double share = values[j] / ties;
    for (int i = 0; i < k; ++i) {
      if (bids[i][j] == top) shares[i][j] = share;
    }
  }
  return shares;
}

void check_bid_matrix(const ValidatedGame& game, const BidMatrix& bids) {
  const int k = game.players();
  const int n = game.battlefields();
  if (static_cast<int>(bids.size()) != k) {
    fail(ErrorCode::DimensionMismatch,
         "bid matrix has " + std::to_string(bids.size()) + " rows, expected " +
             std::to_string(k));
  }
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(bids[i].size()) != n) {
      fail(ErrorCode::DimensionMismatch,
           "row " + std::to_string(i + 1) + " has " +
               std::to_string(bids[i].size()) + " bids, expected " +
               std::to_string(n));
    }
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = bids[i][j];
      if (game.variant() == Variant::Boolean) {
        if (a != 0.0 && a != 1.0) {
          fail(ErrorCode::BudgetViolation,
               "player " + std::to_string(i + 1) + " bid " + std::to_string(a) +
                   " is not 0 or 1");
        }
      } else if (!(a >= 0.0)) {
        fail(ErrorCode::BudgetViolation,
             "player " + std::to_string(i + 1) + " has a negative bid");
      }
      sum += a;
    }
    const double slack =
        game.variant() == Variant::Boolean ? 0.0 : kBudgetTol;
    if (sum > game.budget() + slack) {
      fail(ErrorCode::BudgetViolation,
           "player " + std::to_string(i + 1) + " bids sum to " +
               std::to_string(sum) + " > budget " +
               std::to_string(game.budget()));
    }
  }
}

}  // namespace

ValidatedGame validate_game(const GameSpec& spec) {
  if (spec.players < 2) {
    fail(ErrorCode::TooFewPlayers,
         "need at least 2 players, got " + std::to_string(spec.players));
  }
  if (spec.battlefields < 1) {
    fail(ErrorCode::EmptyGame, "need at least 1 battlefield");
  }
  if (static_cast<int>(spec.values.size()) != spec.battlefields) {
    fail(ErrorCode::DimensionMismatch,
         std::to_string(spec.values.size()) + " values for " +
             std::to_string(spec.battlefields) + " battlefields");
  }
  double total = 0.0;
  for (double v : spec.values) {
    if (spec.variant == Variant::Boolean) {
      if (!(v > 0.0)) {
        fail(ErrorCode::NonPositiveValueBoolean,
             "Boolean games need every battlefield value > 0");
      }
    } else if (!(v >= 0.0)) {
      fail(ErrorCode::NegativeValue, "battlefield values must be >= 0");
    }
    total += v;
  }
  if (spec.variant == Variant::Boolean) {
    if (std::floor(spec.budget) != spec.budget || spec.budget < 0.0 ||
        spec.budget > spec.battlefields) {
      fail(ErrorCode::BudgetOutOfRange,
           "Boolean budget must be an integer in {0,...," +
               std::to_string(spec.battlefields) + "}, got " +
               std::to_string(spec.budget));
    }
  } else {
    if (!(spec.budget > 0.0)) {
      fail(ErrorCode::BudgetOutOfRange, "continuous budget must be > 0");
    }
    if (!(total > 0.0)) {
      fail(ErrorCode::EmptyGame, "total battlefield value must be > 0");
    }
  }
  ValidatedGame game;
  game.spec_ = spec;
  game.total_value_ = total;
  return game;
}

std::vector<std::vector<double>> payoff_by_battlefield(
    const ValidatedGame& game, const BidMatrix& bids) {
  check_bid_matrix(game, bids);
  return raw_shares(game.values(), bids);
}

std::vector<double> payoff(const ValidatedGame& game, const BidMatrix& bids) {
  const auto shares = payoff_by_battlefield(game, bids);
  std::vector<double> utilities(shares.size(), 0.0);
  for (std::size_t i = 0; i < shares.size(); ++i) {
    for (double s : shares[i]) utilities[i] += s;
  }
  return utilities;
}

ExpectedUtilities boolean_lotto_expected_payoff(
    const ValidatedGame& game, const std::vector<std::vector<double>>& probs,
    long mc_samples, RngStream* stream) {
  if (game.variant() != Variant::Boolean) {
    throw std::invalid_argument("boolean_lotto_expected_payoff needs a Boolean game");
  }
  const int k = game.players();
  const int n = game.battlefields();
  if (static_cast<int>(probs.size()) != k) {
    fail(ErrorCode::DimensionMismatch, "probability matrix needs k rows");
  }
  for (const auto& row : probs) {
    if (static_cast<int>(row.size()) != n) {
      fail(ErrorCode::DimensionMismatch, "probability row needs n entries");
    }
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorCode::ProbabilityOutOfRange,
             "probability " + std::to_string(p) + " outside [0,1]");
      }
    }
  }

  ExpectedUtilities out;
  out.mean.assign(k, 0.0);
  out.std_error.assign(k, 0.0);

  if (k <= 12) {
    // Exact: enumerate the 2^(k-1) compete/abstain outcomes of the
    // opponents, per player and battlefield.
    out.exact = true;
    const std::uint32_t masks = 1u << (k - 1);
    for (int i = 0; i < k; ++i) {
      double total = 0.0;
      for (int j = 0; j < n; ++j) {
        double mean_inv_count = 0.0;  // E[1 / (1 + #competing opponents)]
        double p_none = 0.0;          // P[no opponent competes]
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
          double prob = 1.0;
          int o = 0;
          for (int other = 0; other < k; ++other) {
            if (other == i) continue;
            const double p = probs[other][j];
            prob *= (mask >> o) & 1u ? p : 1.0 - p;
            ++o;
          }
          mean_inv_count += prob / (1.0 + std::popcount(mask));
          if (mask == 0) p_none = prob;
        }
        const double q = probs[i][j];
        const double v = game.value(j);
        total += q * v * mean_inv_count + (1.0 - q) * p_none * v / k;
      }
      out.mean[i] = total;
    }
    return out;
  }

  if (stream == nullptr) {
    throw std::invalid_argument("k > 12 needs a stream for Monte Carlo");
  }
  out.exact = false;
  std::vector<double> sum(k, 0.0), sumsq(k, 0.0);
  BidMatrix bids(k, std::vector<double>(n, 0.0));
  for (long r = 0; r < mc_samples; ++r) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) {
        bids[i][j] = stream->uniform01() < probs[i][j] ? 1.0 : 0.0;
      }
    }
    const auto shares = raw_shares(game.values(), bids);
    for (int i = 0; i < k; ++i) {
      double u = 0.0;
      for (double s : shares[i]) u += s;
      sum[i] += u;
      sumsq[i] += u * u;
    }
  }
  for (int i = 0; i < k; ++i) {
    const double mean = sum[i] / mc_samples;
    const double var =
        std::max(0.0, sumsq[i] / mc_samples - mean * mean);
    out.mean[i] = mean;
    out.std_error[i] = std::sqrt(var / mc_samples);
  }
  return out;
}

}  // namespace blotto
