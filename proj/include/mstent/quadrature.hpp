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
#ifndef MSTENT_QUADRATURE_HPP
#define MSTENT_QUADRATURE_HPP

#include <functional>

namespace mstent {

/// Tolerances for the one-dimensional expectations over the real line.
struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  unsigned max_depth = 15;          ///< bisection depth of the adaptive rule
  double domain_half_width = 60.0;  ///< central window, standardized units

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  double l1 = 0.0;     ///< integral of |f|
  bool converged = false;
};

/**
 * Integral of f over the real line: adaptive Gauss-Kronrod on
 * [center - w, center + w] plus the two tails, each mapped by
 * x = center +/- w e^u so algebraic decay becomes exponential in u.
 */
QuadratureResult integrate_line(const std::function<double(double)>& f, double center,
                                const QuadratureSpec& spec);

/// Integral of exp(log_f) on the real line, returned as a logarithm.
struct LogQuadratureResult {
  double log_value = 0.0;
  double rel_error = 0.0;
  double argmax = 0.0;
  bool converged = false;
};

/// Locates the mode of log_f first, then integrates exp(log_f - max).
LogQuadratureResult integrate_log_line(const std::function<double(double)>& log_f,
                                       const QuadratureSpec& spec);

}  // namespace mstent

#endif  // MSTENT_QUADRATURE_HPP
