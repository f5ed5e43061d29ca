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
#include <gtest/gtest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"
#include "mstent/mc.hpp"
#include "mstent/tables.hpp"
#include "oracles.hpp"

namespace {

using namespace mstent;
constexpr double kInf = std::numeric_limits<double>::infinity();

SkewTParams uni(double mu, double s, double delta, double v) {
  return SkewTParams::univariate(mu, s, delta, v);
}

// Direct quadrature of -int f ln f for a univariate skew-t.
double shannon_by_quadrature(double mu, double s, double delta, double v) {
  return oracle::integrate(
      [&](double x) {
        const double f = oracle::skewt1_pdf(x, mu, s, delta, v);
        return f > 0 ? -f * std::log(f) : 0.0;
      },
      -kInf, kInf);
}

// Direct quadrature of ln(int f^a) / (1 - a).
double renyi_by_quadrature(double mu, double s, double delta, double v, double a) {
  const double integral = oracle::integrate(
      [&](double x) { return std::pow(oracle::skewt1_pdf(x, mu, s, delta, v), a); }, -kInf, kInf);
  return std::log(integral) / (1.0 - a);
}

TEST(MtShannon, KnownValues) {
  const double closed = std::log(std::sqrt(3.0) * std::numbers::pi / 2.0) +
                        2.0 * (boost::math::digamma(2.0) - boost::math::digamma(1.5)) +
                        0.5 * std::log(1.5);
  EXPECT_NEAR(mt_shannon(uni(0.0, 1.5, 0.0, 3.0)), closed, 1e-12);
  EXPECT_NEAR(mt_shannon(uni(0.0, 1.5, 0.0, 3.0)), 1.9762, 5e-5);
  EXPECT_NEAR(mt_shannon(uni(0.0, 1.5, 0.0, 3.0)), shannon_by_quadrature(0, 1.5, 0, 3), 1e-8);
  EXPECT_NEAR(mt_shannon(uni(0.0, 1.0, 0.0, 1e6)), 0.5 * std::log(2 * std::numbers::pi * std::numbers::e),
              1e-3);
  EXPECT_EQ(mt_shannon(uni(0.0, 1.5, 0.0, 3.0)), mt_shannon(uni(7.0, 1.5, 2.0, 3.0)));
}

TEST(MtShannon, PrintedDigammaArgumentsDisagreeWithQuadrature) {
  const SkewTParams p = uni(0.0, 1.5, 0.0, 3.0);
  EXPECT_GT(std::fabs(mt_shannon(p, DigammaArgs::printed) - shannon_by_quadrature(0, 1.5, 0, 3)),
            0.05);
}

TEST(MtRenyi, KnownValuesAndLimit) {
  const SkewTParams p = uni(0.0, 1.0, 0.0, 3.0);
  EXPECT_NEAR(mt_renyi(p, 2.0), renyi_by_quadrature(0, 1, 0, 3, 2), 1e-9);
  EXPECT_NEAR(mt_renyi(uni(0, 1.5, 0, 3), 1.0001), mt_shannon(uni(0, 1.5, 0, 3)), 1e-3);
  EXPECT_NEAR(mt_renyi(uni(0, 1.5, 0, 3), 0.9999), mt_shannon(uni(0, 1.5, 0, 3)), 1e-3);
  double prev = kInf;
  for (double a : {0.5, 0.9, 1.5, 2.0, 3.0, 7.0, 30.0}) {
    const double r = mt_renyi(p, a);
    EXPECT_LT(r, prev) << a;
    prev = r;
  }
}

TEST(MtRenyi, MultivariateAgainstMonteCarlo) {
  const SkewTParams base = example1(3, 4.0);
  const SkewTParams p(base.mu, base.scale, Vector::Zero(3), base.dof);
  const Estimate e = mc_renyi(skewt_law(p), 2.0, {400000, 5, 0});
  EXPECT_NEAR(mt_renyi(p, 2.0), e.value, 3 * e.std_error);
}

TEST(RenyiOrder, DomainErrors) {
  const SkewTParams p = uni(0.0, 1.0, 0.5, 3.0);
  EXPECT_THROW(mt_renyi(p, 1.0), DomainError);
  EXPECT_THROW(mt_renyi(p, 0.0), DomainError);
  EXPECT_THROW(mt_renyi(p, 0.25), DomainError);  // alpha (v+1) = 1
  EXPECT_NO_THROW(mt_renyi(p, 0.26));
  EXPECT_THROW(skewt_renyi(p, 2e4), DomainError);
  try {
    mt_renyi(p, 0.1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("too small for tail"), std::string::npos);
  }
}

TEST(PowerIntegralConstant, Properties) {
  const SkewTParams p = uni(0.0, 1.0, 0.0, 3.0);
  const double integral = oracle::integrate(
      [](double x) { return std::pow(oracle::t_pdf(x, 3.0), 2.0); }, -kInf, kInf);
  EXPECT_NEAR(std::exp(log_power_integral_constant(p, 2.0)), integral, 1e-10);
  EXPECT_NEAR(log_power_integral_constant(p, 1.0 + 1e-9), 0.0, 1e-8);
  const double c = 2.7;
  const SkewTParams q(example1(2, 3).mu, SpdMatrix(c * example1(2, 3).scale.matrix()),
                      example1(2, 3).delta, 3.0);
  for (double a : {0.5, 2.0, 5.0}) {
    EXPECT_NEAR(log_power_integral_constant(q, a) - log_power_integral_constant(example1(2, 3), a),
                (1 - a) * 0.5 * 2 * std::log(c), 1e-12);
  }
}

TEST(SkewCorrection, ZeroShapeAndSign) {
  EXPECT_EQ(skew_correction(uni(0.3, 1.5, 0.0, 3.0)), 0.0);
  for (double delta : {0.3, 1.0, 5.0, -2.0}) {
    EXPECT_GT(skew_correction(uni(0.3, 1.5, delta, 3.0)), 0.0) << delta;
  }
  // Entropy is even in the shape.
  EXPECT_NEAR(skew_correction(example1(2, 3)),
              skew_correction(SkewTParams(example1(2, 3).mu, example1(2, 3).scale,
                                          -example1(2, 3).delta, 3.0)),
              1e-12);
}

TEST(SkewCorrection, ReferenceCase) {
  const double corr = skew_correction(uni(0.3, 1.5, 0.3, 3.0));
  EXPECT_NEAR(corr, mt_shannon(uni(0.3, 1.5, 0.3, 3.0)) - shannon_by_quadrature(0.3, 1.5, 0.3, 3), 1e-8);
  EXPECT_NEAR(corr, 0.017, 0.002);
}

TEST(SkewTShannon, MatchesDirectQuadrature) {
  for (double v : {1.5, 3.0, 8.0}) {
    for (double delta : {0.3, 2.0, -6.0}) {
      EXPECT_NEAR(skewt_shannon(uni(0.3, 1.5, delta, v)), shannon_by_quadrature(0.3, 1.5, delta, v),
                  1e-7)
          << v << " " << delta;
    }
  }
}

TEST(SkewTShannon, PublishedValues) {
  EXPECT_NEAR(skewt_shannon(uni(0.3, 1.5, 0.3, 3.0)), 1.9590, 0.005);
  EXPECT_NEAR(skewt_shannon(uni(0.3, 1.5, 0.3, 12.0)), 1.6871, 0.005);
}

TEST(SkewTShannon, MultivariateAgainstMonteCarlo) {
  for (int c : {2, 3}) {
    const SkewTParams p = example1(c, 3.0);
    const Estimate e = mc_shannon(skewt_law(p), {400000, 11, 0});
    EXPECT_NEAR(skewt_shannon(p), e.value, 3 * e.std_error) << c;
  }
}

TEST(SkewTShannon, FallsBackToMonteCarlo) {
  QuadratureSpec hard;
  hard.abs_tol = 1e-300;
  hard.rel_tol = 1e-300;
  hard.max_depth = 1;
  const SkewTParams p = uni(0.3, 1.5, 2.0, 3.0);
  const Estimate e = skewt_shannon_estimate(p, hard);
  EXPECT_EQ(e.method, Method::plain_mc);
  EXPECT_EQ(e.n, kFallbackSamples);
  EXPECT_NEAR(e.value, skewt_shannon(p), 4 * e.std_error + 1e-12);
  const Estimate r = skewt_renyi_estimate(p, 3.0, hard);
  EXPECT_EQ(r.method, Method::plain_mc);
  EXPECT_NEAR(r.value, skewt_renyi(p, 3.0), 4 * r.std_error + 1e-12);
}

TEST(SkewTRenyi, MatchesDirectQuadrature) {
  for (double v : {1.5, 3.0, 8.0}) {
    for (double delta : {0.3, 2.0, -6.0}) {
      for (double a : {0.7, 2.0, 3.5, 10.0}) {
        EXPECT_NEAR(skewt_renyi(uni(0.3, 1.5, delta, v), a),
                    renyi_by_quadrature(0.3, 1.5, delta, v, a), 1e-7)
            << v << " " << delta << " " << a;
      }
    }
  }
}

TEST(SkewTRenyi, PublishedValues) {
  const SkewTParams p = uni(0.3, 1.5, 0.3, 3.0);
  EXPECT_NEAR(skewt_renyi(p, 2.0), 1.6571, 0.005);
  EXPECT_NEAR(skewt_renyi(p, 10.0), 1.3371, 0.005);
  EXPECT_NEAR(skewt_renyi(p, 200.0), 1.2311, 0.03);
  EXPECT_GT(skewt_renyi(p, 10.0), skewt_renyi(p, 30.0));
  EXPECT_GT(skewt_renyi(p, 30.0), skewt_renyi(p, 100.0));
  EXPECT_GT(skewt_renyi(p, 100.0), skewt_renyi(p, 200.0));
}

TEST(SkewTRenyi, MultivariateAgainstMonteCarlo) {
  for (int c : {2, 3}) {
    const SkewTParams p = example1(c, 3.0);
    const EntropyProfile prof = mc_profile(skewt_law(p), {2.0, 5.0}, {400000, 12, 0});
    for (std::size_t k = 0; k < prof.alphas.size(); ++k) {
      EXPECT_NEAR(skewt_renyi(p, prof.alphas[k]), prof.renyi[k].value,
                  3 * prof.renyi[k].std_error)
          << c << " " << prof.alphas[k];
    }
  }
}

// Deterministic oracle for d = 2: nested adaptive quadrature of the density.
template <class G>
double plane_integral(const SkewTParams& p, G g) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  const auto inner = [&](double x) {
    return Rule::integrate(
        [&](double y) {
          Vector z(2);
          z << x, y;
          return g(skewt_logpdf(p, z));
        },
        -kInf, kInf, 15, 1e-11);
  };
  return Rule::integrate(inner, -kInf, kInf, 15, 1e-11);
}

TEST(Bivariate, AgreesWithPlaneCubature) {
  const SkewTParams p = example1(2, 3.0);
  const double h = plane_integral(p, [](double l) { return -l * std::exp(l); });
  EXPECT_NEAR(skewt_shannon(p), h, 1e-6);
  for (double a : {2.0, 3.0}) {
    const double r = std::log(plane_integral(p, [&](double l) { return std::exp(a * l); })) / (1 - a);
    EXPECT_NEAR(skewt_renyi(p, a), r, 1e-6) << a;
    FormulaReadings printed;
    printed.power = PowerExpectation::printed;
    EXPECT_GT(std::fabs(skewt_renyi(p, a, {}, printed) - r), 5e-4) << a;
  }
}

class EntropyGrid : public ::testing::TestWithParam<int> {};

// Example 1 cases over the published dof range.
SkewTParams grid_point(int i) {
  const double dofs[] = {3.0, 5.0, 8.0, 12.0};
  const int c = i % 3 + 1;
  const double v = dofs[i / 3];
  return example1(c, v);
}

TEST_P(EntropyGrid, ZeroShapeReduction) {
  const SkewTParams p = grid_point(GetParam());
  const SkewTParams sym(p.mu, p.scale, Vector::Zero(p.dim()), p.dof);
  EXPECT_EQ(skewt_shannon(sym), mt_shannon(sym));
  for (double a : {0.8, 2.0, 5.0}) EXPECT_NEAR(skewt_renyi(sym, a), mt_renyi(sym, a), 1e-8);
}

TEST_P(EntropyGrid, ContinuityAtOrderOne) {
  const SkewTParams p = grid_point(GetParam());
  const double h = skewt_shannon(p);
  EXPECT_LE(std::fabs(skewt_renyi(p, 1.001) - h), 5e-3);
  EXPECT_LE(std::fabs(skewt_renyi(p, 0.999) - h), 5e-3);
  EXPECT_LT(skewt_renyi(p, 1.001), h);
  EXPECT_GT(skewt_renyi(p, 0.999), h);
}

TEST_P(EntropyGrid, MonotoneInOrder) {
  const SkewTParams p = grid_point(GetParam());
  double prev = kInf;
  for (double a : {1.5, 2.0, 3.0, 5.0, 10.0, 30.0}) {
    const double r = skewt_renyi(p, a);
    EXPECT_LT(r, prev) << a;
    prev = r;
  }
}

TEST_P(EntropyGrid, LocationInvariance) {
  const SkewTParams p = grid_point(GetParam());
  const SkewTParams q(p.mu.array() + 123.25, p.scale, p.delta, p.dof);
  EXPECT_NEAR(skewt_shannon(q), skewt_shannon(p), 1e-12);
  EXPECT_NEAR(skewt_renyi(q, 2.0), skewt_renyi(p, 2.0), 1e-12);
  EXPECT_NEAR(skewt_renyi(q, 7.5), skewt_renyi(p, 7.5), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(TwelvePoints, EntropyGrid, ::testing::Range(0, 12));

TEST(HeavyTails, ReductionMonotonicityLocation) {
  for (int c : {1, 2, 3}) {
    const SkewTParams p = example1(c, 1.5);
    const SkewTParams sym(p.mu, p.scale, Vector::Zero(p.dim()), p.dof);
    EXPECT_NEAR(skewt_renyi(sym, 2.0), mt_renyi(sym, 2.0), 1e-8);
    double prev = kInf;
    for (double a : {1.5, 2.0, 3.0, 5.0, 10.0, 30.0}) {
      const double r = skewt_renyi(p, a);
      EXPECT_LT(r, prev) << a;
      prev = r;
    }
    const SkewTParams q(p.mu.array() - 9.5, p.scale, p.delta, p.dof);
    EXPECT_NEAR(skewt_shannon(q), skewt_shannon(p), 1e-12);
  }
}

TEST(HeavyTails, GapNearOrderOneIsHalfLogDensityVariance) {
  // R_a = H - (a - 1) Var(ln f) / 2 + O((a - 1)^2), with Var(ln f) from draws.
  for (int c : {1, 2, 3}) {
    const SkewTParams p = example1(c, 1.5);
    const Matrix x = sample_skewt(p, 400000, 31);
    oracle::Moments logf;
    for (Eigen::Index i = 0; i < x.rows(); ++i) logf.add(skewt_logpdf(p, x.row(i).transpose()));
    const double var = logf.m2 / (logf.n - 1);
    const double slope = (skewt_shannon(p) - skewt_renyi(p, 1.001)) / 1e-3;
    EXPECT_NEAR(slope, 0.5 * var, 0.03 * var) << c;
  }
}

TEST(SkewNormalLimit, EntropiesConverge) {
  for (int c : {1, 2, 3}) {
    const SkewTParams a = example1(c, 1e4);
    const SkewTParams b = example1(c, 1e6);
    EXPECT_NEAR(skewt_shannon(a), skewt_shannon(b), 0.01) << c;
    EXPECT_NEAR(skewt_renyi(a, 2.0), skewt_renyi(b, 2.0), 0.01) << c;
  }
}

}  // namespace
