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

#include "blotto/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blotto/errors.hpp"

namespace blotto {
namespace {

constexpr int kMaxRetries = 100;

}  // namespace

double MarginalSpec::cdf(double x) const {
  if (scale <= 0.0) return x < 0.0 ? 0.0 : 1.0;  // point mass at zero
  if (x <= 0.0) return 0.0;
  const double r = x / scale;
  if (r >= 1.0) return 1.0;
  return std::pow(r, 1.0 / exponent_inv);
}

MarginalSpec equilibrium_marginal(const ValidatedGame& game, int battlefield) {
  MarginalSpec m;
  m.scale = game.budget() * game.players() * game.value(battlefield) /
            game.total_value();
  m.exponent_inv = game.players() - 1;
  return m;
}

double beta_power_from_uniform(double u, double theta, int players) {
  if (theta < 0.0 || players < 2) {
    throw std::invalid_argument("beta_power needs theta >= 0 and k >= 2");
  }
  return theta * std::pow(u, static_cast<double>(players - 1));
}

double beta_power(double theta, int players, RngStream& stream) {
  return beta_power_from_uniform(stream.uniform01(), theta, players);
}

double gamma_small_shape(double alpha, RngStream& stream) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("gamma_small_shape needs shape in (0,1]");
  }
  if (alpha == 1.0) {
    // Gamma(1,1) is the unit exponential.
    return -std::log1p(-stream.uniform01());
  }
  const double b = 1.0 + alpha / std::numbers::e;
  for (;;) {
    const double p = b * stream.uniform01();
    if (p <= 1.0) {
      const double x = std::pow(p, 1.0 / alpha);
      if (stream.uniform01() <= std::exp(-x)) return x;
    } else {
      const double x = -std::log((b - p) / alpha);
      if (stream.uniform01() <= std::pow(x, alpha - 1.0)) return x;
    }
  }
}

std::vector<double> dirichlet_symmetric(int m, double alpha,
                                        RngStream& stream) {
  if (m < 2) throw std::invalid_argument("dirichlet_symmetric needs m >= 2");
  std::vector<double> x(m);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      x[i] = gamma_small_shape(alpha, stream);
      sum += x[i];
    }
    if (sum > 0.0 && std::isfinite(sum)) {
      for (int i = 0; i < m; ++i) x[i] /= sum;
      return x;
    }
  }
  fail(ErrorCode::DegenerateDraw, "all Gamma draws underflowed to zero");
}

std::array<double, 2> gaussian_pair(RngStream& stream) {
  // 1 - u is in (0,1], so the log is finite.
  const double r = std::sqrt(-2.0 * std::log1p(-stream.uniform01()));
  const double theta = 2.0 * std::numbers::pi * stream.uniform01();
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::array<double, 3> unit_sphere3(RngStream& stream) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const auto [g0, g1] = gaussian_pair(stream);
    const auto [g2, g3] = gaussian_pair(stream);
    (void)g3;  // fixed consumption of four uniforms per attempt
    const double norm2 = g0 * g0 + g1 * g1 + g2 * g2;
    if (norm2 > 0.0 && std::isfinite(norm2)) {
      const double inv = 1.0 / std::sqrt(norm2);
      return {g0 * inv, g1 * inv, g2 * inv};
    }
  }
  fail(ErrorCode::DegenerateDraw, "Gaussian triple collapsed to zero");
}

}  // namespace blotto
