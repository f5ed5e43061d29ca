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
#ifndef MSTENT_MC_HPP
#define MSTENT_MC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mstent/distributions.hpp"
#include "mstent/estimate.hpp"

namespace mstent {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kDefaultSamples = 1000000;

/// A density together with a sampler for it. Both must be thread-safe.
struct Law {
  int dim = 0;
  std::function<double(const Eigen::Ref<const Vector>&)> logpdf;
  std::function<void(Stream&, Eigen::Ref<Vector>)> sample;
};

Law skewt_law(const SkewTParams& p);
Law mixture_law(const MixtureParams& m);
Law gaussian_law(const Vector& mean, const Matrix& cov);

/// Same family with every dof replaced by max(1, v/2): heavier tails.
Law default_proposal(const SkewTParams& p);
Law default_proposal(const MixtureParams& m);

struct McOptions {
  std::size_t n = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;  ///< 0 = hardware concurrency; never changes results
};

/// Shannon and several Renyi orders from one set of draws.
struct EntropyProfile {
  Estimate shannon;
  std::vector<double> alphas;
  std::vector<Estimate> renyi;
};

EntropyProfile mc_profile(const Law& law, const std::vector<double>& alphas,
                          const McOptions& opt = {});

/// -(1/n) sum ln f(x_i).
Estimate mc_shannon(const Law& law, const McOptions& opt = {});

/// (1/(1-a)) ln (1/n) sum f(x_i)^(a-1), delta-method standard error.
Estimate mc_renyi(const Law& law, double alpha, const McOptions& opt = {});

/// (1/(1-a)) ln (1/n) sum f(x_i)^a / g(x_i) with x_i ~ g. Flags low_ess when the
/// effective sample size falls below 1% of n.
Estimate is_renyi(const Law& target, const Law& proposal, double alpha,
                  const McOptions& opt = {});

}  // namespace mstent

#endif  // MSTENT_MC_HPP
