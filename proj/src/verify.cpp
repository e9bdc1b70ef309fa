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

#include "blotto/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "blotto/errors.hpp"
#include "blotto/samplers.hpp"

namespace blotto {
namespace {

constexpr double kIsometryTol = 1e-9;
// Per-check false-alarm probability for the DKW band.
constexpr double kKsAlpha = 3e-8;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

double ks_statistic(const std::vector<double>& sorted_samples,
                    const std::function<double(double)>& cdf) {
  if (sorted_samples.empty()) {
    fail(ErrorCode::EmptySample, "ks_statistic needs at least one sample");
  }
  const double n = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_threshold(long n) {
  return std::sqrt(std::log(2.0 / kKsAlpha) / (2.0 * static_cast<double>(n)));
}

double bernoulli_threshold(double p, long n) {
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

void check_marginals_continuous(const ValidatedGame& game,
                                const BidSampler& sampler, long n_samples,
                                RngStream& stream, VerificationReport& report,
                                const std::string& prefix) {
  const int n = game.battlefields();
  std::vector<std::vector<double>> columns(
      n, std::vector<double>(static_cast<std::size_t>(n_samples)));
  for (long r = 0; r < n_samples; ++r) {
    RngStream sub = stream.fork(static_cast<std::uint64_t>(r));
    const auto bids = sampler(sub);
    for (int j = 0; j < n; ++j) columns[j][r] = bids[j];
  }
  const double threshold = ks_threshold(n_samples);
  for (int j = 0; j < n; ++j) {
    std::sort(columns[j].begin(), columns[j].end());
    const MarginalSpec law = equilibrium_marginal(game, j);
    const double d =
        ks_statistic(columns[j], [&law](double x) { return law.cdf(x); });
    report.add({prefix + "marginal-" + std::to_string(j + 1), d, threshold,
                d <= threshold, n_samples, stream.seed(),
                "DKW band at false-alarm " + fmt(kKsAlpha)});
  }
}

void check_marginals_boolean(const ValidatedGame& game,
                             const std::vector<double>& probs,
                             const BidSampler& sampler, long n_samples,
                             RngStream& stream, VerificationReport& report,
                             const std::string& prefix) {
  const int n = game.battlefields();
  std::vector<long> ones(n, 0);
  for (long r = 0; r < n_samples; ++r) {
    RngStream sub = stream.fork(static_cast<std::uint64_t>(r));
    const auto bids = sampler(sub);
    for (int j = 0; j < n; ++j) ones[j] += bids[j] == 1.0 ? 1 : 0;
  }
  for (int j = 0; j < n; ++j) {
    const double freq = static_cast<double>(ones[j]) / n_samples;
    const double threshold = bernoulli_threshold(probs[j], n_samples);
    const double d = std::abs(freq - probs[j]);
    report.add({prefix + "frequency-" + std::to_string(j + 1), d, threshold,
                d <= threshold, n_samples, stream.seed(),
                "4 sigma binomial band around p=" + fmt(probs[j])});
  }
}

void check_budget(const ValidatedGame& game, const BidSampler& sampler,
                  long n_samples, RngStream& stream,
                  VerificationReport& report, const std::string& prefix) {
  double worst = 0.0;
  for (long r = 0; r < n_samples; ++r) {
    RngStream sub = stream.fork(static_cast<std::uint64_t>(r));
    const auto bids = sampler(sub);
    double sum = 0.0;
    for (double b : bids) sum += b;
    worst = std::max(worst, std::abs(sum - game.budget()));
  }
  const bool boolean = game.variant() == Variant::Boolean;
  const double threshold = boolean ? 0.0 : kBudgetTol;
  report.add({prefix + "budget-sum", worst, threshold, worst <= threshold,
              n_samples, stream.seed(),
              boolean ? "Boolean coupling is exact by construction"
                      : "absolute bid-sum tolerance 1e-9"});
}

std::vector<Deviation> standard_deviation_library(const ValidatedGame& game,
                                                  int n_random,
                                                  RngStream& stream) {
  const int n = game.battlefields();
  const double b = game.budget();
  std::vector<Deviation> lib;

  {
    Deviation d{"all-on-max", std::vector<double>(n, 0.0)};
    const int best = static_cast<int>(std::distance(
        game.values().begin(),
        std::max_element(game.values().begin(), game.values().end())));
    d.bids[best] = b;
    lib.push_back(std::move(d));
  }
  lib.push_back({"uniform-split", std::vector<double>(n, b / n)});
  {
    // Budget split evenly over the top half of the battlefields by value.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
      return game.value(a) > game.value(c);
    });
    const int half = (n + 1) / 2;
    Deviation d{"top-half-split", std::vector<double>(n, 0.0)};
    for (int r = 0; r < half; ++r) d.bids[order[r]] = b / half;
    lib.push_back(std::move(d));
  }
  lib.push_back({"equilibrium-resample", {}});
  for (int r = 0; r < n_random; ++r) {
    RngStream sub = stream.fork(static_cast<std::uint64_t>(r));
    const auto x = dirichlet_symmetric(std::max(2, n), 1.0, sub);
    Deviation d{"random-" + std::to_string(r + 1),
                std::vector<double>(n, 0.0)};
    for (int j = 0; j < n; ++j) d.bids[j] = b * x[j];
    lib.push_back(std::move(d));
  }
  return lib;
}

void lotto_deviation_test(const ValidatedGame& game, const BidSampler& sampler,
                          const std::vector<Deviation>& deviations,
                          long rounds, RngStream& stream,
                          VerificationReport& report) {
  const int k = game.players();
  const int n = game.battlefields();
  const double v_over_k = game.total_value() / k;

  std::uint64_t dev_index = 0;
  for (const auto& dev : deviations) {
    const bool resample = dev.bids.empty();
    if (!resample) {
      if (static_cast<int>(dev.bids.size()) != n) {
        fail(ErrorCode::InfeasibleDeviation,
             "deviation '" + dev.name + "' has the wrong length");
      }
      double sum = 0.0;
      for (double x : dev.bids) {
        if (!(x >= 0.0)) {
          fail(ErrorCode::InfeasibleDeviation,
               "deviation '" + dev.name + "' has a negative bid");
        }
        sum += x;
      }
      if (sum > game.budget() + kBudgetTol) {
        fail(ErrorCode::InfeasibleDeviation,
             "deviation '" + dev.name + "' spends " + std::to_string(sum));
      }
    }

    RngStream base = stream.fork(dev_index++);
    double total_sum = 0.0, total_sumsq = 0.0;
    std::vector<double> bf_sum(n, 0.0), bf_sumsq(n, 0.0);
    BidMatrix bids(k);
    for (long r = 0; r < rounds; ++r) {
      RngStream round_stream = base.fork(static_cast<std::uint64_t>(r));
      for (int i = 0; i + 1 < k; ++i) {
        RngStream sub = round_stream.fork(static_cast<std::uint64_t>(i));
        bids[i] = sampler(sub);
      }
      if (resample) {
        RngStream sub = round_stream.fork(static_cast<std::uint64_t>(k));
        bids[k - 1] = sampler(sub);
      } else {
        bids[k - 1] = dev.bids;
      }
      const auto shares = payoff_by_battlefield(game, bids);
      double u = 0.0;
      for (int j = 0; j < n; ++j) {
        const double s = shares[k - 1][j];
        u += s;
        bf_sum[j] += s;
        bf_sumsq[j] += s * s;
      }
      total_sum += u;
      total_sumsq += u * u;
    }

    const double mean = total_sum / rounds;
    const double var =
        std::max(0.0, total_sumsq / rounds - mean * mean);
    const double se = std::sqrt(var / rounds);
    report.add({"deviation-" + dev.name + "-gain", mean - v_over_k, 4.0 * se,
                mean - v_over_k <= 4.0 * se, rounds, stream.seed(),
                "equilibrium payoff bound V/k plus 4 sigma"});
    if (resample) {
      report.add({"deviation-" + dev.name + "-two-sided",
                  std::abs(mean - v_over_k), 4.0 * se,
                  std::abs(mean - v_over_k) <= 4.0 * se, rounds, stream.seed(),
                  "symmetric play earns V/k within 4 sigma"});
    }

    // Closed-form per-battlefield expectation: with atomless opponent
    // marginals, a fixed bid d_j wins with probability
    // min(1, V d_j / (budget k v_j)).
    double worst_ratio = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = game.value(j);
      double expected;
      if (resample) {
        expected = v / k;
      } else if (v <= 0.0) {
        expected = 0.0;
      } else {
        expected =
            v * std::min(1.0, game.total_value() * dev.bids[j] /
                                  (game.budget() * k * v));
      }
      const double m = bf_sum[j] / rounds;
      const double bf_var = std::max(0.0, bf_sumsq[j] / rounds - m * m);
      const double band = std::max(4.0 * std::sqrt(bf_var / rounds), 1e-12);
      worst_ratio = std::max(worst_ratio, std::abs(m - expected) / band);
    }
    report.add({"deviation-" + dev.name + "-battlefield-law", worst_ratio, 1.0,
                worst_ratio <= 1.0, rounds, stream.seed(),
                "max over battlefields of |mean - closed form| / (4 sigma)"});
  }
}

double boolean_exploitability(const ValidatedGame& game,
                              const BooleanEquilibrium& eq) {
  const int k = game.players();
  const int n = game.battlefields();
  const int budget = static_cast<int>(game.budget());
  std::vector<double> gains(n);
  double held = 0.0;
  for (int j = 0; j < n; ++j) {
    gains[j] = marginal_utility(eq.probs[j], game.value(j), k);
    held += eq.probs[j] * gains[j];
  }
  std::sort(gains.begin(), gains.end(), std::greater<>());
  double best = 0.0;
  for (int r = 0; r < budget; ++r) best += gains[r];
  return std::max(0.0, best - held);
}

void check_isometry(const Isometry& iso, VerificationReport& report,
                    const std::string& prefix) {
  double gram_dev = 0.0;
  for (int a = 0; a < iso.cols; ++a) {
    for (int b = 0; b < iso.cols; ++b) {
      double d = 0.0;
      for (int r = 0; r < iso.rows; ++r) d += iso.entry(r, a) * iso.entry(r, b);
      gram_dev = std::max(gram_dev, std::abs(d - (a == b ? 1.0 : 0.0)));
    }
  }
  report.add({prefix + "isometry-gram", gram_dev, kIsometryTol,
              gram_dev <= kIsometryTol, iso.rows, 0,
              "max |M^T M - I| entry"});
  double row_dev = 0.0;
  for (int r = 0; r < iso.rows; ++r) {
    row_dev = std::max(row_dev, std::abs(iso.row_norm2(r) - iso.targets[r]));
  }
  report.add({prefix + "isometry-rows", row_dev, kIsometryTol,
              row_dev <= kIsometryTol, iso.rows, 0,
              "max |row norm^2 - target|"});
}

}  // namespace blotto
