// Copyright 2026 The mstent Authors
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
#ifndef MSTENT_BOUNDS_HPP
#define MSTENT_BOUNDS_HPP

#include <optional>
#include <vector>

#include "mstent/compositions.hpp"
#include "mstent/distributions.hpp"
#include "mstent/quadrature.hpp"
#include "mstent/readings.hpp"

namespace mstent {

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  double approx = 0.0;      ///< (lower + upper) / 2
  double half_width = 0.0;  ///< (upper - lower) / 2
  std::vector<double> per_component;
  std::optional<int> alpha;  ///< empty for Shannon
  /// lower > upper: the two sides contradict each other.
  bool crossed = false;
};

/// Lower: weighted component Shannon entropies. Upper: Gaussian entropy of the
/// mixture covariance.
BoundsReport shannon_bounds(const MixtureParams& m, const QuadratureSpec& q = {},
                            const FormulaReadings& r = {});

/// Throws DomainError unless alpha is an integer >= 2.
int require_integer_order(double alpha);

/**
 * Telescoping bound from cumulative weights. Components are sorted by
 * non-decreasing R_alpha (non-increasing int f_i^alpha) first so every
 * telescoping difference is non-negative.
 */
double renyi_upper_from(const std::vector<double>& weights,
                        const std::vector<double>& component_renyi, int alpha);

/// Multinomial expansion of (sum e_i f_i)^alpha with the generalized Holder
/// inequality applied to every product term.
double renyi_lower_from(const std::vector<double>& weights,
                        const std::vector<double>& component_renyi, int alpha,
                        std::size_t cap = kDefaultCompositionCap);

std::vector<double> component_renyi(const MixtureParams& m, int alpha,
                                    const QuadratureSpec& q = {},
                                    const FormulaReadings& r = {});

double renyi_upper(const MixtureParams& m, int alpha, const QuadratureSpec& q = {},
                   const FormulaReadings& r = {});
double renyi_lower(const MixtureParams& m, int alpha, const QuadratureSpec& q = {},
                   const FormulaReadings& r = {}, std::size_t cap = kDefaultCompositionCap);
BoundsReport renyi_bounds(const MixtureParams& m, int alpha, const QuadratureSpec& q = {},
                          const FormulaReadings& r = {},
                          std::size_t cap = kDefaultCompositionCap);

/**
 * Large-order approximation over compositions with all parts positive:
 * (1/(1-a)) ln sum prod (k_i/a)^{-k_i} e_i^{k_i} int f_i^{k_i}.
 * Parts equal to 1 contribute int f_i = 1. Requires alpha >= m.
 */
double renyi_large_alpha_approx(const MixtureParams& m, int alpha,
                                const QuadratureSpec& q = {}, const FormulaReadings& r = {},
                                std::size_t cap = kDefaultCompositionCap);

}  // namespace mstent

#endif  // MSTENT_BOUNDS_HPP
