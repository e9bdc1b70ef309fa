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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blotto/boolean.hpp"
#include "blotto/game.hpp"
#include "blotto/rng.hpp"
#include "blotto/sphere.hpp"

namespace blotto {

struct CheckRecord {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  long sample_count = 0;
  std::uint64_t seed = 0;
  std::string derivation;  // how the threshold was obtained
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool pass() const;
  void add(CheckRecord record) { checks.push_back(std::move(record)); }
};

/// Sup distance between the empirical CDF of the (ascending) samples and
/// the reference CDF; one pass. Throws EmptySample.
double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf);

/// DKW bound: KS of n true-law samples exceeds this with probability
/// <= 3e-8. Evaluates to 0.003 at n = 1e6.
double ks_threshold(long n);

/// Four-sigma band for an empirical frequency of a Bernoulli(p).
double bernoulli_threshold(double p, long n);

/// Draws one bid vector per call.
using BidSampler = std::function<std::vector<double>(RngStream&)>;

/// Per-battlefield KS of sampled bids against the equilibrium marginals.
void check_marginals_continuous(const ValidatedGame& game,
                                const BidSampler& sampler, long n_samples,
                                RngStream& stream, VerificationReport& report,
                                const std::string& prefix = "");

/// Per-battlefield frequency of 1-bids against the target probabilities.
void check_marginals_boolean(const ValidatedGame& game,
                             const std::vector<double>& probs,
                             const BidSampler& sampler, long n_samples,
                             RngStream& stream, VerificationReport& report,
                             const std::string& prefix = "");

/// Max deviation of per-draw bid sums from the budget: tolerance 1e-9 for
/// continuous samplers, exactly zero for Boolean ones.
void check_budget(const ValidatedGame& game, const BidSampler& sampler,
                  long n_samples, RngStream& stream,
                  VerificationReport& report, const std::string& prefix = "");

/// A fixed bid vector to test against the equilibrium; an empty bid list
/// means "resample the equilibrium strategy each round".
struct Deviation {
  std::string name;
  std::vector<double> bids;
};

/// All-on-one, uniform split, top-half split, equilibrium resample, plus
/// n_random random feasible vectors.
std::vector<Deviation> standard_deviation_library(const ValidatedGame& game,
                                                  int n_random,
                                                  RngStream& stream);

/// Plays each deviation against k-1 equilibrium opponents for `rounds`
/// rounds. Emits, per deviation, the total-payoff bound check
/// (mean <= V/k + 4 SE) and the per-battlefield closed-form comparison
/// E[U_j] = v_j min(1, V d_j / (budget k v_j)) within 4 SE.
void lotto_deviation_test(const ValidatedGame& game, const BidSampler& sampler,
                          const std::vector<Deviation>& deviations,
                          long rounds, RngStream& stream,
                          VerificationReport& report);

/// Exact best-response gain against the profile: the per-battlefield payoff
/// is linear in the player's own probability, so the best response is pure
/// and the gain is sum of the budget largest marginal utilities minus the
/// profile's own expected marginal mass. Clamped at zero.
double boolean_exploitability(const ValidatedGame& game,
                              const BooleanEquilibrium& eq);

/// Column orthonormality and row-norm targets, both at 1e-9.
void check_isometry(const Isometry& iso, VerificationReport& report,
                    const std::string& prefix = "");

}  // namespace blotto
