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

#include "blotto/boolean.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blotto/errors.hpp"

namespace blotto {
namespace {

constexpr int kGridBits = 40;
constexpr std::uint64_t kGrid = 1ULL << kGridBits;

void require_boolean(const ValidatedGame& game, const char* who) {
  if (game.variant() != Variant::Boolean) {
    throw std::invalid_argument(std::string(who) + " needs a Boolean game");
  }
}

/// Pins the sum of p to `target` while keeping every entry in [0,1]:
/// proportional scaling of the entries not stuck at 1, clamping any entry
/// the scaling pushes past 1 and redistributing until fixed. Entries at
/// exactly 0 or 1 stay there. Returns the largest per-entry change.
double rescale_to_budget(std::vector<double>& p, double target) {
  const int n = static_cast<int>(p.size());
  const std::vector<double> before = p;
  std::vector<char> pinned(n, 0);
  for (int j = 0; j < n; ++j) pinned[j] = p[j] >= 1.0 ? 1 : 0;
  for (int pass = 0; pass <= n; ++pass) {
    double fixed = 0.0, rest = 0.0;
    for (int j = 0; j < n; ++j) {
      if (pinned[j]) {
        fixed += 1.0;
      } else {
        rest += p[j];
      }
    }
    const double want = target - fixed;
    if (rest <= 0.0 || want <= 0.0) break;
    const double c = want / rest;
    bool clamped = false;
    for (int j = 0; j < n; ++j) {
      if (pinned[j]) continue;
      p[j] *= c;
      if (p[j] >= 1.0) {
        p[j] = 1.0;
        pinned[j] = 1;
        clamped = true;
      }
    }
    if (!clamped) break;
  }
  // Absorb the remaining rounding residue into an interior entry so the
  // accumulated sum equals the target bit-exactly.
  for (int rounds = 0; rounds < 4; ++rounds) {
    double sum = 0.0;
    for (double v : p) sum += v;
    const double residue = target - sum;
    if (residue == 0.0) break;
    int pick = -1;
    double headroom = 0.0;
    for (int j = 0; j < n; ++j) {
      if (p[j] <= 0.0 || p[j] >= 1.0) continue;
      const double room = std::min(p[j], 1.0 - p[j]);
      if (room > headroom) {
        headroom = room;
        pick = j;
      }
    }
    if (pick < 0) break;
    p[pick] += residue;
  }
  double shift = 0.0;
  for (int j = 0; j < n; ++j) shift = std::max(shift, std::abs(p[j] - before[j]));
  return shift;
}

}  // namespace

double mu(double p, int players) {
  const double km1 = players - 1.0;
  if (p <= 0.0) return km1;
  if (p < 1e-8) {
    // Binomial series around 0; the direct quotient is a 0/0 cancellation.
    const double km2 = players - 2.0;
    const double km3 = players - 3.0;
    return km1 * (1.0 - km2 * p / 2.0 + km2 * km3 * p * p / 6.0);
  }
  if (p > 1.0) p = 1.0;
  return (1.0 - std::pow(1.0 - p, km1)) / p;
}

double mu_inverse(double x, int players, double tol) {
  if (x <= 1.0) return 1.0;
  if (x >= players - 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;  // mu(lo) >= x >= mu(hi)
  while (hi - lo > 2.0 * tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution reached
    if (mu(mid, players) >= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double marginal_utility(double p, double value, int players) {
  return value / players * mu(p, players);
}

double budget_fn(double x, const ValidatedGame& game, double tol) {
  require_boolean(game, "budget_fn");
  const int n = game.battlefields();
  const int k = game.players();
  const double per_term = tol / n;
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    total += mu_inverse(k * x / game.value(j), k, per_term);
  }
  return total;
}

BooleanEquilibrium solve_equilibrium(const ValidatedGame& game,
                                     double epsilon) {
  require_boolean(game, "solve_equilibrium");
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const int k = game.players();
  const int n = game.battlefields();
  const double budget = game.budget();
  const double v_max = *std::max_element(game.values().begin(),
                                         game.values().end());
  const double v_min = *std::min_element(game.values().begin(),
                                         game.values().end());

  BooleanEquilibrium out;
  out.epsilon = epsilon;

  if (k == 2) {
    const auto pure = two_player_pure(game);
    out.probs.assign(pure.begin(), pure.end());
    // Threshold between competed and skipped battlefields: the marginal
    // gain v/2 of the best battlefield left out.
    std::vector<double> sorted = game.values();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const int b = static_cast<int>(budget);
    out.x_star = b < n ? sorted[b] / 2.0 : 0.0;
    return out;
  }

  if (budget <= 0.0) {
    out.probs.assign(n, 0.0);
    out.x_star = (k - 1.0) * v_max / k;
    return out;
  }
  if (budget >= n) {
    out.probs.assign(n, 1.0);
    out.x_star = -std::numeric_limits<double>::infinity();
    return out;
  }

  // Precision schedule: |x - x*| < eps2 via bisection with B evaluated to
  // eval_tol (the worst-case slope of B near x* is -1/(V k), so eval error
  // eval_tol displaces the bracket by at most V k^2 eval_tol), then each
  // probability inverted to eps1. Altogether |p_j - p*_j| stays below
  // epsilon / (V k n^2), which caps the per-player gain of any deviation
  // at epsilon.
  const double v_total = game.total_value();
  const double eps2 = 0.5 * epsilon * v_min / (v_total * k * k * n * n);
  const double eval_tol = eps2 / (2.0 * v_total * k * k);
  const double eps1 = 0.5 * epsilon / (v_total * k * k * n * n);

  double lo = 0.0;                    // B(0) = n > budget
  double hi = (k - 1.0) * v_total;    // B(hi) = 0 <= budget
  while (hi - lo > 0.5 * eps2) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution reached
    if (budget_fn(mid, game, eval_tol) <= budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // The upper end of the bracket: queries that sit past a kink of B keep
  // their exact 0/1 inversions, so saturated battlefields come out exact.
  const double x = hi;
  out.x_star = x;
  out.probs.resize(n);
  for (int j = 0; j < n; ++j) {
    out.probs[j] = mu_inverse(k * x / game.value(j), k, eps1);
  }
  const double x_err = (hi - lo) + v_total * k * k * eval_tol;
  const double shift = rescale_to_budget(out.probs, budget);
  out.achieved_tol = eps1 + (k / v_min) * x_err + shift + 1e-15;
  return out;
}

namespace {

std::vector<int> coupling_on_grid(const std::vector<double>& probs,
                                  std::uint64_t beta) {
  const int n = static_cast<int>(probs.size());
  double mass = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      fail(ErrorCode::ProbabilityOutOfRange,
           "coupling probability " + std::to_string(p) + " outside [0,1]");
    }
    mass += p;
  }
  const double rounded = std::round(mass);
  if (std::abs(mass - rounded) > 1e-9) {
    fail(ErrorCode::NonIntegerMass,
         "probabilities sum to " + std::to_string(mass) +
             ", not an integer");
  }
  const std::uint64_t ones = static_cast<std::uint64_t>(rounded);

  // Quantize to the grid, then repair the total on interior entries so the
  // intervals tile [0, ones * kGrid) exactly. Entries at exactly 0 or 1
  // are never moved.
  std::vector<std::uint64_t> q(n);
  std::uint64_t total = 0;
  for (int j = 0; j < n; ++j) {
    q[j] = static_cast<std::uint64_t>(
        std::llround(probs[j] * static_cast<double>(kGrid)));
    q[j] = std::min(q[j], kGrid);
    total += q[j];
  }
  const std::uint64_t want = ones * kGrid;
  int guard = 0;
  while (total != want) {
    bool moved = false;
    for (int j = 0; j < n && total != want; ++j) {
      if (probs[j] <= 0.0 || probs[j] >= 1.0) continue;
      if (total < want && q[j] < kGrid - 1) {
        ++q[j];
        ++total;
        moved = true;
      } else if (total > want && q[j] > 1) {
        --q[j];
        --total;
        moved = true;
      }
    }
    if (!moved || ++guard > (1 << 20)) {
      fail(ErrorCode::NonIntegerMass,
           "could not tile the probability mass onto the grid");
    }
  }

  std::vector<int> bids(n, 0);
  if (ones == 0) return bids;
  // Walk the lattice {beta + t * kGrid} through the consecutive intervals;
  // each interval has length <= kGrid so it catches at most one point, and
  // the intervals tile [0, ones * kGrid) so every point lands somewhere.
  std::uint64_t upper = 0;
  int idx = -1;
  std::uint64_t point = beta;
  for (std::uint64_t t = 0; t < ones; ++t, point += kGrid) {
    while (upper <= point) {
      ++idx;
      upper += q[idx];
    }
    bids[idx] = 1;
  }
  return bids;
}

}  // namespace

std::vector<int> sample_boolean_coupling(const std::vector<double>& probs,
                                         RngStream& stream) {
  return coupling_on_grid(probs, stream.next_bits(kGridBits));
}

std::vector<int> sample_boolean_coupling_at(const std::vector<double>& probs,
                                            double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in [0,1)");
  }
  const auto fp = static_cast<std::uint64_t>(
      std::floor(beta * static_cast<double>(kGrid)));
  return coupling_on_grid(probs, std::min(fp, kGrid - 1));
}

std::vector<int> two_player_pure(const ValidatedGame& game) {
  require_boolean(game, "two_player_pure");
  const int n = game.battlefields();
  const int b = static_cast<int>(game.budget());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    return game.value(a) > game.value(c);
  });
  std::vector<int> bids(n, 0);
  for (int r = 0; r < b; ++r) bids[order[r]] = 1;
  return bids;
}

std::vector<double> large_k_limit_probs(const ValidatedGame& game) {
  require_boolean(game, "large_k_limit_probs");
  const int n = game.battlefields();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    return game.value(a) > game.value(c);
  });
  std::vector<double> suffix(n + 1, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    suffix[r] = suffix[r + 1] + game.value(order[r]);
  }
  std::vector<double> probs(n, 0.0);
  double remaining = game.budget();
  for (int r = 0; r < n; ++r) {
    const double p = std::min(1.0, remaining * game.value(order[r]) / suffix[r]);
    probs[order[r]] = p;
    remaining -= p;
  }
  return probs;
}

}  // namespace blotto
