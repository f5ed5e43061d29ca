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

#ifndef MSTENT_SPECFN_HPP
#define MSTENT_SPECFN_HPP

namespace mstent {

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ψ(x) = d/dx ln Γ(x) for x > 0.
double digamma(double x);

/// ln B(a, b).
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x);

/// ln I_x(a, b); stays finite where I_x underflows.
double log_reg_inc_beta(double a, double b, double x);

/// CDF of the standard Student t with v degrees of freedom.
double student_t_cdf(double x, double v);

/// ln of student_t_cdf, accurate deep in the lower tail.
double student_t_logcdf(double x, double v);

double student_t_logpdf(double x, double v);

}  // namespace mstent

#endif  // MSTENT_SPECFN_HPP
