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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "blotto/boolean.hpp"
#include "blotto/errors.hpp"
#include "blotto/partition.hpp"
#include "blotto/sphere.hpp"
#include "blotto/verify.hpp"

using namespace blotto;

namespace {

ValidatedGame make_game(int k, int n, double budget, std::vector<double> values,
                        Variant variant) {
  GameSpec spec;
  spec.players = k;
  spec.battlefields = n;
  spec.budget = budget;
  spec.values = std::move(values);
  spec.variant = variant;
  return validate_game(spec);
}

}  // namespace

TEST_CASE("ks_statistic fixtures") {
  const auto identity = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_statistic({0.0, 0.0, 0.0}, identity) == 1.0);
  CHECK(ks_statistic({0.5}, identity) == 0.5);
  CHECK_THROWS_AS(ks_statistic({}, identity), Error);

  RngStream stream(41);
  std::vector<double> xs(1000000);
  for (auto& x : xs) x = stream.uniform01();
  std::sort(xs.begin(), xs.end());
  CHECK(ks_statistic(xs, identity) <= 0.003);
}

TEST_CASE("thresholds carry their derivations") {
  CHECK(ks_threshold(1000000) == doctest::Approx(0.003).epsilon(0.01));
  CHECK(bernoulli_threshold(0.5, 1000000) ==
        doctest::Approx(0.002).epsilon(1e-12));
  CHECK(bernoulli_threshold(0.0, 100) == 0.0);
}

TEST_CASE("marginal checks pass for the real sampler") {
  const auto game =
      make_game(3, 6, 1.0, std::vector<double>(6, 1.0), Variant::Continuous);
  const auto pi = round_robin_partition(6, 3);
  const BidSampler sampler = [game, pi](RngStream& s) {
    return sample_partition_equilibrium(game, pi, s);
  };
  VerificationReport report;
  RngStream stream(42);
  check_marginals_continuous(game, sampler, 100000, stream, report);
  CHECK(report.pass());
  CHECK(report.checks.size() == 6);
}

TEST_CASE("corrupted isometry fails the marginal check") {
  const auto game =
      make_game(3, 4, 1.0, {2.0, 1.5, 1.5, 1.0}, Variant::Continuous);
  SphereSampler good(game);
  Isometry bad = good.isometry();
  for (int c = 0; c < 3; ++c) bad.m[0 * 3 + c] *= 1.1;  // scale one row
  const SphereSampler corrupted(game, std::move(bad));
  const BidSampler sampler = [&corrupted](RngStream& s) {
    return corrupted.sample(s);
  };
  VerificationReport report;
  RngStream stream(43);
  check_marginals_continuous(game, sampler, 100000, stream, report);
  CHECK(!report.pass());
}

TEST_CASE("budget checks") {
  const auto game =
      make_game(3, 6, 1.0, std::vector<double>(6, 1.0), Variant::Continuous);
  const auto pi = round_robin_partition(6, 3);
  const BidSampler sampler = [game, pi](RngStream& s) {
    return sample_partition_equilibrium(game, pi, s);
  };
  VerificationReport report;
  RngStream stream(44);
  check_budget(game, sampler, 20000, stream, report);
  CHECK(report.pass());

  // negative control: a sampler that leaks budget must fail
  const BidSampler leaky = [&](RngStream& s) {
    auto bids = sampler(s);
    bids[0] += 1e-6;
    return bids;
  };
  VerificationReport bad;
  check_budget(game, leaky, 1000, stream, bad);
  CHECK(!bad.pass());
}

TEST_CASE("boolean budget check is exact") {
  const auto game = make_game(3, 3, 2, {1.0, 0.8, 0.6}, Variant::Boolean);
  const auto eq = solve_equilibrium(game, 1e-6);
  const BidSampler sampler = [eq](RngStream& s) {
    const auto draw = sample_boolean_coupling(eq.probs, s);
    return std::vector<double>(draw.begin(), draw.end());
  };
  VerificationReport report;
  RngStream stream(45);
  check_budget(game, sampler, 20000, stream, report);
  check_marginals_boolean(game, eq.probs, sampler, 100000, stream, report);
  CHECK(report.pass());
}

TEST_CASE("isometry audit and its negative control") {
  VerificationReport ok;
  check_isometry(construct_m({1.0, 1.0, 1.0}, 3), ok);
  check_isometry(construct_m({1.0, 0.5, 0.5}, 2), ok);
  CHECK(ok.pass());

  Isometry bad = construct_m({1.0, 0.5, 0.5}, 2);
  bad.m[3] += 1e-3;
  VerificationReport report;
  check_isometry(bad, report);
  CHECK(!report.pass());
}

TEST_CASE("boolean exploitability closed forms") {
  {
    const auto g = make_game(3, 2, 1, {1.0, 1.0}, Variant::Boolean);
    BooleanEquilibrium eq;
    eq.probs = {0.5, 0.5};
    CHECK(boolean_exploitability(g, eq) == 0.0);
  }
  {
    const auto g = make_game(3, 2, 1, {1.0, 0.5}, Variant::Boolean);
    BooleanEquilibrium eq;
    eq.probs = {1.0, 0.0};
    // m_1(1) = 1/3 equals m_{1/2}(0) = 1/3: the entry threshold case
    CHECK(boolean_exploitability(g, eq) <= 1e-15);
  }
  {
    const auto g = make_game(3, 2, 1, {1.0, 0.5}, Variant::Boolean);
    BooleanEquilibrium eq;
    eq.probs = {0.5, 0.5};
    // marginals 0.5 and 0.25; moving the half unit of mass gains 0.125
    CHECK(boolean_exploitability(g, eq) ==
          doctest::Approx(0.125).epsilon(1e-12));
  }
}

TEST_CASE("exploitability agrees with the expected-payoff route") {
  RngStream stream(46);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 3 + static_cast<int>(stream.next_bits(1));
    const int n = 2 + static_cast<int>(stream.next_bits(1));
    std::vector<double> v(n);
    for (double& x : v) x = 0.2 + stream.uniform01();
    const int budget = 1 + static_cast<int>(stream.next_bits(16)) % (n - 1);
    const auto g = make_game(k, n, budget, v, Variant::Boolean);

    // the identity holds for any profile, feasible or not
    std::vector<double> p(n);
    for (double& x : p) x = stream.uniform01();
    BooleanEquilibrium eq;
    eq.probs = p;
    const double closed = boolean_exploitability(g, eq);

    // independent route: evaluate the best pure response via the exact
    // expected-payoff enumeration
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return marginal_utility(p[a], g.value(a), k) >
             marginal_utility(p[b], g.value(b), k);
    });
    std::vector<double> best(n, 0.0);
    for (int r = 0; r < budget; ++r) best[order[r]] = 1.0;

    std::vector<std::vector<double>> all_p(k, p);
    const double base = boolean_lotto_expected_payoff(g, all_p).mean[0];
    all_p[0] = best;
    const double deviated = boolean_lotto_expected_payoff(g, all_p).mean[0];
    CHECK(std::abs(std::max(0.0, deviated - base) - closed) <= 1e-9);
  }
}

TEST_CASE("deviation test on a small partition game") {
  const auto game =
      make_game(2, 2, 1.0, {1.0, 1.0}, Variant::Continuous);
  const Partition pi{{1, 2}};
  const BidSampler sampler = [game, pi](RngStream& s) {
    return sample_partition_equilibrium(game, pi, s);
  };
  RngStream dev_stream(47);
  auto deviations = standard_deviation_library(game, 5, dev_stream);
  deviations.push_back({"zero", {0.0, 0.0}});
  VerificationReport report;
  RngStream stream(48);
  lotto_deviation_test(game, sampler, deviations, 20000, stream, report);
  CHECK(report.pass());

  // the zero deviation also earns (almost surely) nothing
  for (const auto& c : report.checks) {
    if (c.name == "deviation-zero-gain") {
      CHECK(c.statistic == doctest::Approx(-1.0).epsilon(1e-6));  // mean - V/k
    }
  }
  CHECK_THROWS_AS(
      lotto_deviation_test(game, sampler, {{"fat", {0.9, 0.2}}}, 10, stream,
                           report),
      Error);
}

TEST_CASE("reports are reproducible from the seed") {
  const auto game =
      make_game(3, 3, 1.0, std::vector<double>(3, 1.0), Variant::Continuous);
  const auto pi = round_robin_partition(3, 3);
  const BidSampler sampler = [game, pi](RngStream& s) {
    return sample_partition_equilibrium(game, pi, s);
  };
  VerificationReport a, b;
  RngStream s1(49), s2(49);
  check_marginals_continuous(game, sampler, 20000, s1, a);
  check_marginals_continuous(game, sampler, 20000, s2, b);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].statistic == b.checks[i].statistic);
    CHECK(a.checks[i].seed == b.checks[i].seed);
  }
}
