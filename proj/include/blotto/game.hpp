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

#include <vector>

#include "blotto/rng.hpp"

namespace blotto {

enum class Variant { Continuous, Boolean };

struct GameSpec {
  int players = 0;             // k
  int battlefields = 0;        // n
  double budget = 0.0;         // shared by all players; integer for Boolean
  std::vector<double> values;  // v_j, length n
  Variant variant = Variant::Continuous;
};

/// A GameSpec that passed validate_game, with the total value V attached.
class ValidatedGame {
 public:
  const GameSpec& spec() const { return spec_; }
  int players() const { return spec_.players; }
  int battlefields() const { return spec_.battlefields; }
  double budget() const { return spec_.budget; }
  double value(int j) const { return spec_.values[j]; }
  const std::vector<double>& values() const { return spec_.values; }
  double total_value() const { return total_value_; }
  Variant variant() const { return spec_.variant; }

 private:
  friend ValidatedGame validate_game(const GameSpec& spec);
  GameSpec spec_;
  double total_value_ = 0.0;
};

/// Checks the invariants of the chosen variant and computes V. Throws Error
/// with one of: TooFewPlayers, EmptyGame, BudgetOutOfRange, NegativeValue,
/// NonPositiveValueBoolean, DimensionMismatch.
ValidatedGame validate_game(const GameSpec& spec);

/// k x n bid matrix; row i is player i's bid vector.
using BidMatrix = std::vector<std::vector<double>>;

/// Absolute tolerance on continuous per-player bid sums.
inline constexpr double kBudgetTol = 1e-9;

/// Realized utilities: every battlefield's value is split evenly among the
/// players tied for the highest bid (exact floating-point comparison).
std::vector<double> payoff(const ValidatedGame& game, const BidMatrix& bids);

/// Per-player, per-battlefield utility shares; payoff() is its row sums.
std::vector<std::vector<double>> payoff_by_battlefield(
    const ValidatedGame& game, const BidMatrix& bids);

struct ExpectedUtilities {
  std::vector<double> mean;       // per player
  std::vector<double> std_error;  // all zero when exact
  bool exact = true;
};

/// Expected utilities of a Boolean Lotto profile: probs is k x n with entry
/// (i,j) the probability that player i competes on battlefield j, all bids
/// independent. Exact enumeration of opponent outcomes for k <= 12; Monte
/// Carlo with mc_samples rounds (and reported standard errors) beyond that.
ExpectedUtilities boolean_lotto_expected_payoff(
    const ValidatedGame& game, const std::vector<std::vector<double>>& probs,
    long mc_samples = 100000, RngStream* stream = nullptr);

}  // namespace blotto
