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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "blotto/boolean.hpp"
#include "blotto/errors.hpp"
#include "blotto/game.hpp"
#include "blotto/verify.hpp"

using namespace blotto;

namespace {

ValidatedGame boolean_game(int k, int n, double budget,
                           std::vector<double> values) {
  GameSpec spec;
  spec.players = k;
  spec.battlefields = n;
  spec.budget = budget;
  spec.values = std::move(values);
  spec.variant = Variant::Boolean;
  return validate_game(spec);
}

// Random probabilities with an exactly integer sum: start from the uniform
// split and shuffle mass between entries.
std::vector<double> random_integer_mass(int n, int budget, RngStream& stream) {
  std::vector<double> p(n, static_cast<double>(budget) / n);
  for (int round = 0; round < 8 * n; ++round) {
    const int i = static_cast<int>(stream.next_bits(16)) % n;
    const int j = static_cast<int>(stream.next_bits(16)) % n;
    if (i == j) continue;
    const double room = std::min(p[i], 1.0 - p[j]);
    const double delta = room * stream.uniform01();
    p[i] -= delta;
    p[j] += delta;
  }
  return p;
}

}  // namespace

TEST_CASE("mu closed-form values") {
  CHECK(mu(1.0, 3) == 1.0);
  CHECK(mu(1.0, 7) == 1.0);
  CHECK(mu(0.0, 5) == 4.0);
  CHECK(mu(0.5, 3) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("mu is continuous at the series switch and decreasing") {
  for (int k : {3, 4, 10, 1000}) {
    CHECK(std::abs(mu(1e-8, k) - mu(9.999e-9, k)) < 1e-6 * (k - 1));
    double prev = mu(0.0, k);
    for (int i = 1; i <= 100; ++i) {
      const double cur = mu(i / 100.0, k);
      CHECK(cur < prev);
      // the slope is at most -1 everywhere
      CHECK(prev - cur >= 0.01 - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("mu_inverse extended domain and midpoint accuracy") {
  CHECK(mu_inverse(0.5, 4, 1e-9) == 1.0);
  CHECK(mu_inverse(5.0, 4, 1e-9) == 0.0);
  // k=3: mu(p) = 2 - p, so the inverse of 1.5 is 0.5
  CHECK(std::abs(mu_inverse(1.5, 3, 1e-9) - 0.5) <= 1e-9);
  for (int k : {3, 5, 9}) {
    for (double p : {0.1, 0.37, 0.82}) {
      CHECK(std::abs(mu_inverse(mu(p, k), k, 1e-10) - p) <= 1e-9);
    }
  }
}

TEST_CASE("budget_fn endpoints") {
  const auto g = boolean_game(3, 2, 1, {1.0, 1.0});
  CHECK(budget_fn(0.0, g, 1e-9) == 2.0);
  CHECK(budget_fn(0.5, g, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  // once k x / v_j >= k - 1 for every battlefield, nothing competes
  const auto g2 = boolean_game(4, 3, 1, {2.0, 1.0, 0.5});
  CHECK(budget_fn(3.0 * 2.0 / 4.0, g2, 1e-9) == 0.0);
  CHECK(budget_fn(10.0, g2, 1e-9) == 0.0);
}

TEST_CASE("solve_equilibrium symmetric two-battlefield game") {
  const auto g = boolean_game(3, 2, 1, {1.0, 1.0});
  const auto eq = solve_equilibrium(g, 1e-6);
  CHECK(std::abs(eq.probs[0] - 0.5) <= 1e-6);
  CHECK(std::abs(eq.probs[1] - 0.5) <= 1e-6);
  CHECK(std::abs(eq.x_star - 0.5) <= 1e-6);
  CHECK(eq.probs[0] + eq.probs[1] == 1.0);
  CHECK(boolean_exploitability(g, eq) <= 1e-6);
}

TEST_CASE("too few players leave the small battlefield alone") {
  // with v2 = 1/2 the entry threshold is k > 1/v2 + 1 = 3
  const auto g3 = boolean_game(3, 2, 1, {1.0, 0.5});
  const auto eq3 = solve_equilibrium(g3, 1e-6);
  CHECK(eq3.probs[0] == 1.0);
  CHECK(eq3.probs[1] == 0.0);
  CHECK(boolean_exploitability(g3, eq3) <= 1e-6);

  const auto g4 = boolean_game(4, 2, 1, {1.0, 0.5});
  const auto eq4 = solve_equilibrium(g4, 1e-6);
  CHECK(eq4.probs[1] > eq4.achieved_tol);
  CHECK(boolean_exploitability(g4, eq4) <= 1e-6);
}

TEST_CASE("solve_equilibrium budget edge cases") {
  const auto g0 = boolean_game(3, 3, 0, {3.0, 2.0, 1.0});
  CHECK(solve_equilibrium(g0, 1e-6).probs ==
        std::vector<double>{0.0, 0.0, 0.0});
  const auto g3 = boolean_game(3, 3, 3, {3.0, 2.0, 1.0});
  CHECK(solve_equilibrium(g3, 1e-6).probs ==
        std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("solve_equilibrium output structure") {
  RngStream stream(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 3 + static_cast<int>(stream.next_bits(2));      // 3..6
    const int n = 2 + static_cast<int>(stream.next_bits(8) % 7);  // 2..8
    std::vector<double> v(n);
    for (double& x : v) x = 0.1 + 0.9 * stream.uniform01();
    const int budget = 1 + static_cast<int>(stream.next_bits(16)) % (n - 1 + 1);
    const auto g = boolean_game(k, n, std::min(budget, n - 1), v);
    const auto eq = solve_equilibrium(g, 1e-6);

    double sum = 0.0;
    for (double p : eq.probs) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      sum += p;
    }
    CHECK(std::abs(sum - g.budget()) <= 1e-12);

    // more valuable battlefields are competed at least as often
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (g.value(a) >= g.value(b)) {
          CHECK(eq.probs[a] >= eq.probs[b] - 1e-9);
        }
      }
    }

    // interior probabilities share one marginal utility level
    for (int j = 0; j < n; ++j) {
      if (eq.probs[j] > 10 * eq.achieved_tol &&
          eq.probs[j] < 1.0 - 10 * eq.achieved_tol) {
        CHECK(std::abs(marginal_utility(eq.probs[j], g.value(j), k) -
                       eq.x_star) <= k * eq.achieved_tol * g.value(j));
      }
    }
    CHECK(boolean_exploitability(g, eq) <= 1e-6);
  }
}

TEST_CASE("coupling hand trace") {
  const auto bids = sample_boolean_coupling_at({0.7, 0.8, 0.5}, 0.6);
  CHECK(bids == std::vector<int>{1, 0, 1});
}

TEST_CASE("coupling with saturated entries is deterministic") {
  RngStream stream(52);
  for (int i = 0; i < 200; ++i) {
    RngStream sub = stream.fork(i);
    CHECK(sample_boolean_coupling({1.0, 1.0, 0.0}, sub) ==
          std::vector<int>{1, 1, 0});
  }
  for (double beta : {0.0, 0.25, 0.5, 0.9999}) {
    CHECK(sample_boolean_coupling_at({1.0, 1.0, 0.0}, beta) ==
          std::vector<int>{1, 1, 0});
  }
}

TEST_CASE("coupling marginal frequencies") {
  RngStream stream(53);
  long first = 0;
  const long rounds = 1000000;
  for (long i = 0; i < rounds; ++i) {
    RngStream sub = stream.fork(static_cast<std::uint64_t>(i));
    const auto bids = sample_boolean_coupling({0.5, 0.5}, sub);
    CHECK(bids[0] + bids[1] == 1);
    first += bids[0];
  }
  CHECK(std::abs(static_cast<double>(first) / rounds - 0.5) <= 0.002);
}

TEST_CASE("coupling count is exact for every draw") {
  RngStream stream(54);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(stream.next_bits(8) % 10);
    const int budget = 1 + static_cast<int>(stream.next_bits(16)) % n;
    const auto p = random_integer_mass(n, budget, stream);
    for (int draw = 0; draw < 200; ++draw) {
      RngStream sub = stream.fork(static_cast<std::uint64_t>(trial * 1000 + draw));
      const auto bids = sample_boolean_coupling(p, sub);
      CHECK(std::accumulate(bids.begin(), bids.end(), 0) == budget);
    }
  }
}

TEST_CASE("coupling rejects non-integer mass") {
  RngStream stream(55);
  CHECK_THROWS_AS(sample_boolean_coupling({0.5, 0.4}, stream), Error);
  try {
    sample_boolean_coupling({0.5, 0.4}, stream);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegerMass);
  }
}

TEST_CASE("two_player_pure picks top values with index tie-break") {
  CHECK(two_player_pure(boolean_game(2, 3, 2, {3.0, 1.0, 2.0})) ==
        std::vector<int>{1, 0, 1});
  CHECK(two_player_pure(boolean_game(2, 3, 1, {1.0, 1.0, 1.0})) ==
        std::vector<int>{1, 0, 0});
  CHECK(two_player_pure(boolean_game(2, 3, 0, {1.0, 1.0, 1.0})) ==
        std::vector<int>{0, 0, 0});
}

TEST_CASE("solve_equilibrium routes k=2 to the pure strategy") {
  const auto g = boolean_game(2, 3, 2, {3.0, 1.0, 2.0});
  const auto eq = solve_equilibrium(g, 1e-6);
  CHECK(eq.probs == std::vector<double>{1.0, 0.0, 1.0});
  CHECK(eq.x_star == 0.5);  // the best value left out is 1, worth 1/2
}

TEST_CASE("waterfall allocation") {
  CHECK(large_k_limit_probs(boolean_game(3, 2, 1, {1.0, 1.0})) ==
        std::vector<double>{0.5, 0.5});
  const auto p = large_k_limit_probs(boolean_game(3, 2, 1, {10.0, 1.0}));
  CHECK(p[0] == doctest::Approx(10.0 / 11.0).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(1.0 / 11.0).epsilon(1e-15));
  CHECK(large_k_limit_probs(boolean_game(3, 2, 2, {1.0, 0.5})) ==
        std::vector<double>{1.0, 1.0});
}

TEST_CASE("large k converges to the waterfall") {
  const int k = 1000;
  const auto g = boolean_game(k, 4, 2, {k * 1.0, k * 0.7, k * 0.4, k * 0.2});
  const auto eq = solve_equilibrium(g, 1e-6);
  const auto ref = large_k_limit_probs(g);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(eq.probs[j] - ref[j]) <= 0.02);
  }
}
