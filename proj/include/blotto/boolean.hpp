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

#include "blotto/game.hpp"
#include "blotto/rng.hpp"

namespace blotto {

/// mu(p) = (1 - (1-p)^(k-1)) / p, extended continuously to mu(0) = k-1.
/// Strictly decreasing from k-1 to 1 on [0,1] for k >= 3, with slope <= -1.
double mu(double p, int players);

/// Inverse of mu on [1, k-1], extended with 1 below and 0 above. Binary
/// search to additive error <= tol; O(log(1/tol)) mu evaluations.
double mu_inverse(double x, int players, double tol);

/// Marginal utility of competing on a value-v battlefield when every
/// opponent competes independently with probability p: m_v(p) = (v/k) mu(p).
double marginal_utility(double p, double value, int players);

/// B(x) = sum_j mu_inverse(k x / v_j); non-increasing, from n down to 0,
/// evaluated to additive error <= tol.
double budget_fn(double x, const ValidatedGame& game, double tol);

struct BooleanEquilibrium {
  std::vector<double> probs;  // p_j, summing exactly to the budget
  double x_star = 0.0;        // common marginal-utility level
  double epsilon = 0.0;       // requested approximation level
  double achieved_tol = 0.0;  // certified per-probability additive error
};

/// Equilibrium compete probabilities. k >= 3 runs the certified two-level
/// binary search (x level, then per-battlefield inversion) and rescales the
/// result to exact integer mass; k = 2 returns the maximin pure strategy;
/// budget 0 / n short-circuit to all-zeros / all-ones.
BooleanEquilibrium solve_equilibrium(const ValidatedGame& game,
                                     double epsilon);

/// Couples Bernoulli(p_j) bids so that every draw has exactly sum(p) ones:
/// one uniform offset hits the consecutive intervals [alpha_j, alpha_j+p_j)
/// through the integer lattice. sum(p) must be within 1e-9 of an integer.
/// Internally runs on a 2^-40 fixed-point grid so the count is exact for
/// every draw; marginals are preserved to the grid resolution.
std::vector<int> sample_boolean_coupling(const std::vector<double>& probs,
                                         RngStream& stream);

/// Same coupling at an explicit offset beta in [0,1).
std::vector<int> sample_boolean_coupling_at(const std::vector<double>& probs,
                                            double beta);

/// k = 2 maximin pure strategy: compete on the `budget` highest-value
/// battlefields, ties broken toward the lowest index.
std::vector<int> two_player_pure(const ValidatedGame& game);

/// Large-k limit of the equilibrium: waterfall allocation assigning each
/// battlefield min(1, remaining budget * its share of the remaining value),
/// in decreasing value order.
std::vector<double> large_k_limit_probs(const ValidatedGame& game);

}  // namespace blotto
