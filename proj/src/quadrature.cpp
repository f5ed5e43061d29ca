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
#include "mstent/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "mstent/errors.hpp"

namespace mstent {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr double kInf = std::numeric_limits<double>::infinity();

double argmax_line(const std::function<double(double)>& g) {
  // Coarse sinh-spaced scan reaches |x| ~ 4000, then golden-section refine.
  double best_u = 0.0;
  double best = g(0.0);
  for (int i = -450; i <= 450; ++i) {
    const double u = 0.02 * i;
    const double val = g(std::sinh(u));
    if (val > best) {
      best = val;
      best_u = u;
    }
  }
  double a = best_u - 0.02;
  double b = best_u + 0.02;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double gc = g(std::sinh(c));
  double gd = g(std::sinh(d));
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - r * (b - a);
      gc = g(std::sinh(c));
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + r * (b - a);
      gd = g(std::sinh(d));
    }
  }
  const double u = 0.5 * (a + b);
  return g(std::sinh(u)) >= best ? std::sinh(u) : std::sinh(best_u);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0) || !(domain_half_width > 0) || max_depth == 0) {
    throw DomainError("quadrature tolerances, depth and half width must be positive");
  }
}

QuadratureResult integrate_line(const std::function<double(double)>& f, double center,
                                const QuadratureSpec& spec) {
  spec.validate();
  const double w = spec.domain_half_width;
  QuadratureResult out;
  const auto add = [&](const auto& g, double a, double b) {
    double err = 0.0;
    double l1 = 0.0;
    out.value += Rule::integrate(g, a, b, spec.max_depth, spec.rel_tol, &err, &l1);
    out.error += err;
    out.l1 += l1;
  };
  add(f, center - w, center + w);
  // Tails: x = center +- w e^u turns algebraic decay into exponential decay in u.
  for (const double side : {-1.0, 1.0}) {
    const auto tail = [&](double u) {
      const double jac = w * std::exp(u);
      const double x = center + side * jac;
      if (!std::isfinite(x)) return 0.0;
      const double val = f(x);
      return val == 0.0 ? 0.0 : val * jac;
    };
    add(tail, 0.0, kInf);
  }
  out.converged = std::isfinite(out.value) &&
                  out.error <= std::max(spec.abs_tol, spec.rel_tol * out.l1);
  return out;
}

LogQuadratureResult integrate_log_line(const std::function<double(double)>& log_f,
                                       const QuadratureSpec& spec) {
  LogQuadratureResult out;
  out.argmax = argmax_line(log_f);
  const double top = log_f(out.argmax);
  if (!std::isfinite(top)) {
    throw QuadratureError("integrand has no finite maximum", kInf);
  }
  const auto shifted = [&](double x) {
    const double v = log_f(x) - top;
    return v < -745.0 ? 0.0 : std::exp(v);
  };
  const QuadratureResult q = integrate_line(shifted, out.argmax, spec);
  if (!(q.value > 0.0)) throw QuadratureError("integral is not positive", q.error);
  out.log_value = top + std::log(q.value);
  out.rel_error = q.error / q.value;
  out.converged = q.converged;
  return out;
}

}  // namespace mstent
