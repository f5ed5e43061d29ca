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
// Test-side reference implementations. These use Boost.Math and plain
// std::mt19937_64 so they share no numerical code with the library.

#ifndef MSTENT_TESTS_ORACLES_HPP
#define MSTENT_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace oracle {

inline double t_pdf(double x, double v) {
  return boost::math::pdf(boost::math::students_t(v), x);
}

inline double t_cdf(double x, double v) {
  return boost::math::cdf(boost::math::students_t(v), x);
}

/// Univariate skew-t density written out directly:
/// 2/sqrt(s) t_v(z) T_{v+1}(delta (x - mu)/s sqrt((v+1)/(v+z^2))), z = (x-mu)/sqrt(s).
inline double skewt1_pdf(double x, double mu, double s, double delta, double v) {
  const double z = (x - mu) / std::sqrt(s);
  const double arg = delta * (x - mu) / s * std::sqrt((v + 1.0) / (v + z * z));
  return 2.0 / std::sqrt(s) * t_pdf(z, v) * t_cdf(arg, v + 1.0);
}

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

inline double skewt1_cdf(double x, double mu, double s, double delta, double v) {
  const double inf = std::numeric_limits<double>::infinity();
  return integrate([&](double t) { return skewt1_pdf(t, mu, s, delta, v); }, -inf, x);
}

/// Multivariate Cauchy-type envelope t_d(0 + c, scale, dof) used as an
/// importance proposal for normalization checks.
struct MvtEnvelope {
  Eigen::VectorXd center;
  Eigen::MatrixXd scale;
  double dof;

  double logpdf(const Eigen::VectorXd& x) const {
    const int d = static_cast<int>(center.size());
    Eigen::LLT<Eigen::MatrixXd> llt(scale);
    const Eigen::VectorXd z = llt.matrixL().solve(x - center);
    double logdet = 0.0;
    for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    return std::lgamma(0.5 * (dof + d)) - std::lgamma(0.5 * dof) -
           0.5 * d * std::log(dof * std::numbers::pi) - 0.5 * logdet -
           0.5 * (dof + d) * std::log1p(z.squaredNorm() / dof);
  }

  Eigen::VectorXd draw(std::mt19937_64& rng) const {
    const int d = static_cast<int>(center.size());
    std::normal_distribution<double> n;
    std::chi_squared_distribution<double> chi(dof);
    Eigen::VectorXd g(d);
    for (int i = 0; i < d; ++i) g(i) = n(rng);
    Eigen::LLT<Eigen::MatrixXd> llt(scale);
    return center + llt.matrixL() * g / std::sqrt(chi(rng) / dof);
  }
};

/// Running mean and standard error.
struct Moments {
  double n = 0, mean = 0, m2 = 0;
  void add(double x) {
    n += 1;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double se() const { return std::sqrt(m2 / (n - 1) / n); }
};

}  // namespace oracle

#endif  // MSTENT_TESTS_ORACLES_HPP
