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
#ifndef MSTENT_ENTROPY_HPP
#define MSTENT_ENTROPY_HPP

#include <cstdint>

#include "mstent/distributions.hpp"
#include "mstent/estimate.hpp"
#include "mstent/quadrature.hpp"
#include "mstent/readings.hpp"

namespace mstent {

/// Orders above this are rejected: the power expectation degenerates.
inline constexpr double kMaxRenyiOrder = 1e4;

/// Samples used when quadrature fails and a Monte Carlo fallback is taken.
inline constexpr std::size_t kFallbackSamples = 1000000;
inline constexpr std::uint64_t kFallbackSeed = 20240601;

/// Throws DomainError unless 0 < alpha <= kMaxRenyiOrder, alpha != 1 and
/// alpha (v + d) > d.
void check_renyi_order(double alpha, double dof, int d);

/// Shannon entropy of the multivariate t with the same (mu, S, v).
double mt_shannon(const SkewTParams& p, DigammaArgs reading = DigammaArgs::halved);

/// Renyi entropy of the multivariate t with the same (mu, S, v).
double mt_renyi(const SkewTParams& p, double alpha);

/// ln of the alpha-power constant: the integral of the symmetric t density to
/// the power alpha, so that int f^alpha = C E{(2G)^alpha}.
double log_power_integral_constant(const SkewTParams& p, double alpha);

/// Skewness correction: H(skew-t) = H(t) - correction.
Estimate skew_correction_estimate(const SkewTParams& p, const QuadratureSpec& q = {},
                                  ShannonWeight reading = ShannonWeight::exact);
double skew_correction(const SkewTParams& p, const QuadratureSpec& q = {},
                       ShannonWeight reading = ShannonWeight::exact);

/// ln E{(2G(.; v+d))^alpha}, the shape term of the Renyi entropy.
Estimate log_power_expectation(const SkewTParams& p, double alpha,
                               const QuadratureSpec& q = {},
                               PowerExpectation reading = PowerExpectation::exact);

Estimate skewt_shannon_estimate(const SkewTParams& p, const QuadratureSpec& q = {},
                                const FormulaReadings& r = {});
double skewt_shannon(const SkewTParams& p, const QuadratureSpec& q = {},
                     const FormulaReadings& r = {});

Estimate skewt_renyi_estimate(const SkewTParams& p, double alpha,
                              const QuadratureSpec& q = {}, const FormulaReadings& r = {});
double skewt_renyi(const SkewTParams& p, double alpha, const QuadratureSpec& q = {},
                   const FormulaReadings& r = {});

}  // namespace mstent

#endif  // MSTENT_ENTROPY_HPP
