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

#include <array>
#include <vector>

#include "blotto/game.hpp"
#include "blotto/rng.hpp"

namespace blotto {

/// Per-battlefield equilibrium bid law: scale * Beta(1/(k-1), 1), i.e.
/// CDF F(x) = min(1, (x/scale)^(1/(k-1))) on [0, scale].
struct MarginalSpec {
  double scale = 0.0;    // theta_j = budget * k * v_j / V
  int exponent_inv = 1;  // k - 1

  double cdf(double x) const;
  double mean() const { return scale / (exponent_inv + 1); }
};

/// Marginal of battlefield j (0-based) in the symmetric equilibrium.
MarginalSpec equilibrium_marginal(const ValidatedGame& game, int battlefield);

/// Inverse-CDF transform u -> theta * u^(k-1); maps [0,1] onto [0,theta].
double beta_power_from_uniform(double u, double theta, int players);

/// One draw from theta * Beta(1/(k-1), 1).
double beta_power(double theta, int players, RngStream& stream);

/// Gamma(alpha, 1) for shape alpha in (0,1]: Ahrens-Dieter rejection below
/// one, exponential inverse CDF at one.
double gamma_small_shape(double alpha, RngStream& stream);

/// Symmetric Dirichlet(alpha,...,alpha) on the (m-1)-simplex via Gamma
/// normalization; the components sum to 1.
std::vector<double> dirichlet_symmetric(int m, double alpha, RngStream& stream);

/// Two independent standard Gaussians from one Box-Muller transform.
std::array<double, 2> gaussian_pair(RngStream& stream);

/// Uniform point on the unit sphere in R^3 (normalized Gaussian triple).
std::array<double, 3> unit_sphere3(RngStream& stream);

}  // namespace blotto
