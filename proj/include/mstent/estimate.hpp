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
#ifndef MSTENT_ESTIMATE_HPP
#define MSTENT_ESTIMATE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

namespace mstent {

enum class Method { closed_form, quadrature, plain_mc, importance };

std::string to_string(Method m);

/// A value in nats plus how it was obtained and how far it can be trusted.
struct Estimate {
  double value = 0.0;
  /// Standard error for Monte Carlo methods, error bound for quadrature.
  double std_error = 0.0;
  std::size_t n = 0;  ///< samples or integrand evaluations
  std::uint64_t seed = 0;
  Method method = Method::closed_form;
  /// Effective sample size of the importance weights (NaN otherwise).
  double ess = std::numeric_limits<double>::quiet_NaN();
  bool low_ess = false;
};

}  // namespace mstent

#endif  // MSTENT_ESTIMATE_HPP
