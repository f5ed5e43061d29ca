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
#include "mstent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"

namespace mstent {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
  double top = kNegInf;
  for (double t : terms) top = std::max(top, t);
  if (top == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

void check_inputs(const std::vector<double>& w, const std::vector<double>& rv) {
  if (w.empty() || w.size() != rv.size()) {
    throw DomainError("weights and component entropies must be non-empty and equal length");
  }
}

BoundsReport finish(double lower, double upper, std::vector<double> per, std::optional<int> a) {
  BoundsReport b;
  b.lower = lower;
  b.upper = upper;
  b.approx = 0.5 * (lower + upper);
  b.half_width = 0.5 * (upper - lower);
  b.per_component = std::move(per);
  b.alpha = a;
  b.crossed = lower > upper;
  return b;
}

}  // namespace

BoundsReport shannon_bounds(const MixtureParams& m, const QuadratureSpec& q,
                            const FormulaReadings& r) {
  std::vector<double> h;
  double lower = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    h.push_back(skewt_shannon(m.components[i], q, r));
    lower += m.weights[i] * h.back();
  }
  const SpdMatrix cov(mixture_cov(m, r.covariance));
  const double d = m.dim();
  const double upper = 0.5 * (d * std::log(2.0 * std::numbers::pi * std::numbers::e) +
                              cov.log_det());
  return finish(lower, upper, std::move(h), std::nullopt);
}

int require_integer_order(double alpha) {
  if (!std::isfinite(alpha) || alpha != std::floor(alpha) || alpha < 2.0) {
    throw DomainError("integer α required for mixture bounds (α >= 2), got " +
                      std::to_string(alpha));
  }
  if (alpha > kMaxRenyiOrder) {
    throw DomainError("Renyi order exceeds the cap " + std::to_string(kMaxRenyiOrder));
  }
  return static_cast<int>(alpha);
}

double renyi_upper_from(const std::vector<double>& weights,
                        const std::vector<double>& component_renyi, int alpha) {
  check_inputs(weights, component_renyi);
  require_integer_order(alpha);
  const std::size_t m = weights.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return component_renyi[a] < component_renyi[b];
  });
  const double a1 = 1.0 - alpha;
  // ln I_i with I_i = int f_i^alpha, non-increasing along the sorted order.
  std::vector<double> log_i(m);
  for (std::size_t j = 0; j < m; ++j) log_i[j] = a1 * component_renyi[order[j]];

  std::vector<double> terms{log_i[m - 1]};
  double cumulative = 0.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    cumulative += weights[order[j]];
    const double gap = log_i[j + 1] - log_i[j];
    if (gap > 1e-12) {
      throw DomainError("telescoping difference is negative after sorting");
    }
    if (cumulative <= 0.0 || gap == 0.0) continue;
    terms.push_back(alpha * std::log(cumulative) + log_i[j] + std::log1p(-std::exp(gap)));
  }
  return log_sum_exp(terms) / a1;
}

double renyi_lower_from(const std::vector<double>& weights,
                        const std::vector<double>& component_renyi, int alpha,
                        std::size_t cap) {
  check_inputs(weights, component_renyi);
  require_integer_order(alpha);
  const int m = static_cast<int>(weights.size());
  const double a1 = 1.0 - alpha;
  std::vector<double> log_w(m);
  for (int i = 0; i < m; ++i) log_w[i] = weights[i] > 0 ? std::log(weights[i]) : kNegInf;

  std::vector<double> terms;
  for_each_composition(m, alpha, false, [&](const Composition& c) {
    double t = c.log_coefficient();
    double exponent = 0.0;
    for (int i = 0; i < m; ++i) {
      if (c.parts[i] == 0) continue;
      if (log_w[i] == kNegInf) return;
      t += c.parts[i] * log_w[i];
      exponent += c.parts[i] * component_renyi[i];
    }
    terms.push_back(t + a1 / alpha * exponent);
  }, cap);
  return log_sum_exp(terms) / a1;
}

std::vector<double> component_renyi(const MixtureParams& m, int alpha,
                                    const QuadratureSpec& q, const FormulaReadings& r) {
  std::vector<double> out;
  out.reserve(m.components.size());
  for (const auto& c : m.components) out.push_back(skewt_renyi(c, alpha, q, r));
  return out;
}

double renyi_upper(const MixtureParams& m, int alpha, const QuadratureSpec& q,
                   const FormulaReadings& r) {
  require_integer_order(alpha);
  return renyi_upper_from(m.weights, component_renyi(m, alpha, q, r), alpha);
}

double renyi_lower(const MixtureParams& m, int alpha, const QuadratureSpec& q,
                   const FormulaReadings& r, std::size_t cap) {
  require_integer_order(alpha);
  return renyi_lower_from(m.weights, component_renyi(m, alpha, q, r), alpha, cap);
}

BoundsReport renyi_bounds(const MixtureParams& m, int alpha, const QuadratureSpec& q,
                          const FormulaReadings& r, std::size_t cap) {
  require_integer_order(alpha);
  std::vector<double> rv = component_renyi(m, alpha, q, r);
  const double lower = renyi_lower_from(m.weights, rv, alpha, cap);
  const double upper = renyi_upper_from(m.weights, rv, alpha);
  return finish(lower, upper, std::move(rv), alpha);
}

double renyi_large_alpha_approx(const MixtureParams& m, int alpha, const QuadratureSpec& q,
                                const FormulaReadings& r, std::size_t cap) {
  if (alpha < 2) throw DomainError("large-order approximation needs integer alpha >= 2");
  if (alpha < m.size()) {
    throw DomainError("large-order approximation needs alpha >= m (alpha=" +
                      std::to_string(alpha) + ", m=" + std::to_string(m.size()) + ")");
  }
  const int parts = m.size();
  const int kmax = alpha - parts + 1;
  // log_power[i][k] = ln int f_i^k = (1 - k) R_k(f_i); zero at k = 1.
  std::vector<std::vector<double>> log_power(parts, std::vector<double>(kmax + 1, 0.0));
  for (int i = 0; i < parts; ++i) {
    for (int k = 2; k <= kmax; ++k) {
      log_power[i][k] = (1.0 - k) * skewt_renyi(m.components[i], k, q, r);
    }
  }
  std::vector<double> terms;
  const double la = std::log(static_cast<double>(alpha));
  for_each_composition(parts, alpha, true, [&](const Composition& c) {
    double t = 0.0;
    for (int i = 0; i < parts; ++i) {
      const int k = c.parts[i];
      if (m.weights[i] <= 0.0) return;
      t += -k * (std::log(static_cast<double>(k)) - la) + k * std::log(m.weights[i]) +
           log_power[i][k];
    }
    terms.push_back(t);
  }, cap);
  return log_sum_exp(terms) / (1.0 - alpha);
}

}  // namespace mstent
