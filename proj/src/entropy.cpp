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
#include "mstent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <numbers>
#include <string>

#include "mstent/errors.hpp"
#include "mstent/rng.hpp"
#include "mstent/specfn.hpp"

namespace mstent {
namespace {

// ln Gamma(v/2) + (d/2) ln(v pi) - ln Gamma((v+d)/2) + (1/2) ln det S
double log_normalizer(const SkewTParams& p) {
  const double v = p.dof;
  const double d = p.dim();
  return log_gamma(0.5 * v) + 0.5 * d * std::log(v * std::numbers::pi) -
         log_gamma(0.5 * (v + d)) + 0.5 * p.scale.log_det();
}

// Draws from the standard t(nu) for the Monte Carlo fallbacks.
template <class Fn>
void for_each_t_draw(double nu, std::size_t n, std::uint64_t seed, Fn&& fn) {
  for (std::size_t c = 0, done = 0; done < n; ++c) {
    Stream s(seed, c);
    const std::size_t count = std::min(kChunkSize, n - done);
    for (std::size_t i = 0; i < count; ++i) {
      const double w = s.gamma(0.5 * nu, 0.5 * nu);
      fn(s.gaussian() / std::sqrt(w));
    }
    done += count;
  }
}

}  // namespace

void check_renyi_order(double alpha, double dof, int d) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw DomainError("Renyi order must be finite and positive, got " +
                      std::to_string(alpha));
  }
  if (alpha == 1.0) {
    throw DomainError("Renyi order 1 is the Shannon entropy; use the Shannon routine");
  }
  if (alpha > kMaxRenyiOrder) {
    throw DomainError("Renyi order " + std::to_string(alpha) + " exceeds the cap " +
                      std::to_string(kMaxRenyiOrder));
  }
  if (!(alpha * (dof + d) > d)) {
    throw DomainError("Renyi order too small for tail: need alpha (v+d) > d, got alpha=" +
                      std::to_string(alpha) + ", v=" + std::to_string(dof) +
                      ", d=" + std::to_string(d));
  }
}

double mt_shannon(const SkewTParams& p, DigammaArgs reading) {
  const double v = p.dof;
  const double d = p.dim();
  const double psi = reading == DigammaArgs::halved
                         ? digamma(0.5 * (v + d)) - digamma(0.5 * v)
                         : digamma(v + d) - digamma(v);
  return log_normalizer(p) + 0.5 * (v + d) * psi;
}

double mt_renyi(const SkewTParams& p, double alpha) {
  const double v = p.dof;
  const double d = p.dim();
  check_renyi_order(alpha, v, p.dim());
  const double ratio = log_gamma(0.5 * (v + d)) + log_gamma(0.5 * (alpha * v + (alpha - 1) * d)) -
                       log_gamma(0.5 * v) - log_gamma(0.5 * alpha * (v + d));
  return log_normalizer(p) + ratio / (1.0 - alpha);
}

double log_power_integral_constant(const SkewTParams& p, double alpha) {
  const double v = p.dof;
  const double d = p.dim();
  check_renyi_order(alpha, v, p.dim());
  const double a = 1.0 - alpha;
  return a * (log_gamma(0.5 * v) - log_gamma(0.5 * (v + d))) +
         0.5 * d * a * std::log(v * std::numbers::pi) + 0.5 * a * p.scale.log_det() +
         log_gamma(0.5 * (v + d)) + log_gamma(0.5 * (alpha * (v + d) - d)) -
         log_gamma(0.5 * v) - log_gamma(0.5 * alpha * (v + d));
}

Estimate skew_correction_estimate(const SkewTParams& p, const QuadratureSpec& q,
                                  ShannonWeight reading) {
  const DerivedShape sh = derive_shape(p);
  Estimate out;
  if (sh.lambda_norm == 0.0) return out;

  const double v = p.dof;
  const double d = p.dim();
  const double lam = sh.lambda_norm;
  const double nu = v + d - 1.0;
  const double dof_g = v + d;
  const auto log_skew = [&](double y) {
    return std::numbers::ln2 +
           student_t_logcdf(std::sqrt(dof_g) * lam * y / std::sqrt(nu + y * y), dof_g);
  };
  const auto weight = [&](double y) {
    switch (reading) {
      case ShannonWeight::exact:
        return std::exp(log_skew(y));
      case ShannonWeight::printed:
      case ShannonWeight::printed_v1: {
        const double c = std::sqrt(sh.dd) / (sh.beta * sh.beta);
        const double b = c * y * std::sqrt((v + 1.0) / (v + y * y));
        return 2.0 * student_t_cdf(b, reading == ShannonWeight::printed ? dof_g : v + 1.0);
      }
    }
    return 0.0;
  };
  const auto integrand = [&](double y) {
    const double dens = std::exp(student_t_logpdf(y, nu));
    return dens == 0.0 ? 0.0 : dens * weight(y) * log_skew(y);
  };

  const QuadratureResult r = integrate_line(integrand, 0.0, q);
  if (r.converged) {
    out.value = r.value;
    out.std_error = r.error;
    out.method = Method::quadrature;
    return out;
  }
  double sum = 0.0;
  double sum2 = 0.0;
  for_each_t_draw(nu, kFallbackSamples, kFallbackSeed, [&](double y) {
    const double g = weight(y) * log_skew(y);
    sum += g;
    sum2 += g * g;
  });
  const double n = static_cast<double>(kFallbackSamples);
  out.value = sum / n;
  out.std_error = std::sqrt(std::max(0.0, sum2 / n - out.value * out.value) / (n - 1.0));
  out.n = kFallbackSamples;
  out.seed = kFallbackSeed;
  out.method = Method::plain_mc;
  return out;
}

double skew_correction(const SkewTParams& p, const QuadratureSpec& q, ShannonWeight reading) {
  return skew_correction_estimate(p, q, reading).value;
}

Estimate log_power_expectation(const SkewTParams& p, double alpha, const QuadratureSpec& q,
                               PowerExpectation reading) {
  const double v = p.dof;
  const double d = p.dim();
  check_renyi_order(alpha, v, p.dim());
  const DerivedShape sh = derive_shape(p);
  Estimate out;
  if (sh.lambda_norm == 0.0) return out;

  const double a = alpha * (v + d);
  const double nu = reading == PowerExpectation::exact ? a - 1.0 : a - d;
  const double den = reading == PowerExpectation::alt ? a - d : a - 1.0;
  const double s = std::sqrt(v + d) * sh.lambda_norm;
  const auto log_power = [&](double x) {
    return alpha * (std::numbers::ln2 + student_t_logcdf(s * x / std::sqrt(den + x * x), v + d));
  };
  const auto log_integrand = [&](double x) { return student_t_logpdf(x, nu) + log_power(x); };

  const LogQuadratureResult r = integrate_log_line(log_integrand, q);
  if (r.converged) {
    out.value = r.log_value;
    out.std_error = r.rel_error;
    out.method = Method::quadrature;
    return out;
  }
  // Fallback: log-mean-exp of alpha ln 2G over t(nu) draws, shifted by its max.
  std::vector<double> logs;
  logs.reserve(kFallbackSamples);
  for_each_t_draw(nu, kFallbackSamples, kFallbackSeed, [&](double x) { logs.push_back(log_power(x)); });
  double top = -std::numeric_limits<double>::infinity();
  for (double l : logs) top = std::max(top, l);
  double s1 = 0.0;
  double s2 = 0.0;
  for (double l : logs) {
    const double e = std::exp(l - top);
    s1 += e;
    s2 += e * e;
  }
  const double n = static_cast<double>(kFallbackSamples);
  const double mean = s1 / n;
  out.value = top + std::log(mean);
  out.std_error = std::sqrt(std::max(0.0, s2 / n - mean * mean) / (n - 1.0)) / mean;
  out.n = kFallbackSamples;
  out.seed = kFallbackSeed;
  out.method = Method::plain_mc;
  return out;
}

Estimate skewt_shannon_estimate(const SkewTParams& p, const QuadratureSpec& q,
                                const FormulaReadings& r) {
  Estimate corr = skew_correction_estimate(p, q, r.weight);
  corr.value = mt_shannon(p, r.digamma) - corr.value;
  return corr;
}

double skewt_shannon(const SkewTParams& p, const QuadratureSpec& q, const FormulaReadings& r) {
  return skewt_shannon_estimate(p, q, r).value;
}

Estimate skewt_renyi_estimate(const SkewTParams& p, double alpha, const QuadratureSpec& q,
                              const FormulaReadings& r) {
  Estimate e = log_power_expectation(p, alpha, q, r.power);
  e.value = mt_renyi(p, alpha) + e.value / (1.0 - alpha);
  e.std_error /= std::fabs(1.0 - alpha);
  return e;
}

double skewt_renyi(const SkewTParams& p, double alpha, const QuadratureSpec& q,
                   const FormulaReadings& r) {
  return skewt_renyi_estimate(p, alpha, q, r).value;
}

}  // namespace mstent
