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

#include <cmath>
#include <limits>
#include <numbers>

#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"
#include "mstent/mc.hpp"
#include "mstent/tables.hpp"

namespace {

using namespace mstent;

const double kLog2Pi = std::log(2 * std::numbers::pi);

Law standard_normal() { return gaussian_law(Vector::Zero(1), Matrix::Identity(1, 1)); }

bool same(const Estimate& a, const Estimate& b) {
  return a.value == b.value && a.std_error == b.std_error && a.n == b.n && a.seed == b.seed &&
         a.method == b.method;
}

TEST(McShannon, GaussianClosedForm) {
  const Estimate e = mc_shannon(standard_normal(), {1000000, 1, 0});
  EXPECT_NEAR(e.value, 0.5 * (kLog2Pi + 1.0), 3 * e.std_error);
  EXPECT_EQ(e.method, Method::plain_mc);
  EXPECT_EQ(e.n, 1000000u);
  EXPECT_EQ(e.seed, 1u);
}

TEST(McShannon, MultivariateGaussianClosedForm) {
  Matrix cov(2, 2);
  cov << 2.0, 0.5, 0.5, 1.0;
  const Estimate e = mc_shannon(gaussian_law(Vector::Ones(2), cov), {400000, 2, 0});
  EXPECT_NEAR(e.value, 0.5 * (2 * (kLog2Pi + 1.0) + std::log(cov.determinant())),
              3 * e.std_error);
}

TEST(McShannon, MultivariateT) {
  const SkewTParams p = SkewTParams::univariate(0.0, 1.5, 0.0, 3.0);
  const Estimate e = mc_shannon(skewt_law(p), {1000000, 3, 0});
  EXPECT_NEAR(e.value, mt_shannon(p), 3 * e.std_error);
}

TEST(McShannon, PublishedSkewT) {
  const Estimate e = mc_shannon(skewt_law(example1(1, 3.0)), {1000000, 4, 0});
  EXPECT_NEAR(e.value, 1.9590, std::max(3 * e.std_error, 0.01));
}

TEST(McRenyi, GaussianClosedForm) {
  const Estimate e = mc_renyi(standard_normal(), 2.0, {1000000, 5, 0});
  EXPECT_NEAR(e.value, 0.5 * kLog2Pi + 0.5 * std::log(2.0), 3 * e.std_error);
  const Estimate e5 = mc_renyi(standard_normal(), 5.0, {1000000, 5, 0});
  EXPECT_NEAR(e5.value, 0.5 * kLog2Pi + std::log(5.0) / 8.0, 3 * e5.std_error);
}

TEST(McRenyi, PublishedSkewT) {
  const Estimate e = mc_renyi(skewt_law(example1(1, 3.0)), 2.0, {1000000, 6, 0});
  EXPECT_NEAR(e.value, 1.6571, std::max(3 * e.std_error, 0.01));
}

TEST(McRenyi, BracketsShannonNearOrderOne) {
  const Law law = skewt_law(example1(2, 4.0));
  const McOptions opt{100000, 7, 0};
  const double h = mc_shannon(law, opt).value;
  EXPECT_LE(mc_renyi(law, 1.001, opt).value, h);
  EXPECT_GE(mc_renyi(law, 0.999, opt).value, h);
  EXPECT_NEAR(mc_renyi(law, 1.001, opt).value, h, 5e-3);
}

TEST(McRenyi, RejectsBadOrders) {
  EXPECT_THROW(mc_renyi(standard_normal(), 1.0, {100, 1, 0}), DomainError);
  EXPECT_THROW(mc_renyi(standard_normal(), -2.0, {100, 1, 0}), DomainError);
  EXPECT_THROW(mc_renyi(standard_normal(), 2.0, {1, 1, 0}), DomainError);
}

TEST(McRenyi, ProfileMatchesSingleCalls) {
  const Law law = mixture_law(example2(1, 3));
  const McOptions opt{50000, 8, 0};
  const EntropyProfile prof = mc_profile(law, {2.0, 3.0}, opt);
  EXPECT_TRUE(same(prof.shannon, mc_shannon(law, opt)));
  EXPECT_NEAR(prof.renyi[1].value, mc_renyi(law, 3.0, opt).value, 1e-12);
}

TEST(McErrors, NonFiniteLogDensityNamesDraw) {
  Law bad = standard_normal();
  bad.logpdf = [](const Eigen::Ref<const Vector>& x) {
    return x(0) > 2.5 ? std::numeric_limits<double>::quiet_NaN() : -0.5 * x(0) * x(0);
  };
  try {
    mc_shannon(bad, {10000, 9, 1});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("at draw"), std::string::npos) << e.what();
  }
}

TEST(McDeterminism, BitIdenticalAcrossRunsAndThreads) {
  const Law law = mixture_law(example2(2, 4));
  const std::size_t n = 5 * kChunkSize + 3;
  const Estimate a = mc_renyi(law, 3.0, {n, 42, 1});
  const Estimate b = mc_renyi(law, 3.0, {n, 42, 1});
  const Estimate c = mc_renyi(law, 3.0, {n, 42, 4});
  EXPECT_TRUE(same(a, b));
  EXPECT_TRUE(same(a, c));
  const Estimate d = mc_shannon(law, {n, 42, 3});
  EXPECT_TRUE(same(d, mc_shannon(law, {n, 42, 1})));
  const Law prop = default_proposal(example2(2, 4));
  EXPECT_TRUE(same(is_renyi(law, prop, 2.0, {n, 42, 1}), is_renyi(law, prop, 2.0, {n, 42, 2})));
}

TEST(McStdError, HalvesWithFourfoldSamples) {
  const Law law = standard_normal();
  const double s1 = mc_renyi(law, 2.0, {250000, 10, 0}).std_error;
  const double s2 = mc_renyi(law, 2.0, {500000, 10, 0}).std_error;
  EXPECT_NEAR(s1 / s2, std::sqrt(2.0), 0.15 * std::sqrt(2.0));
  const double h1 = mc_shannon(law, {250000, 10, 0}).std_error;
  const double h2 = mc_shannon(law, {500000, 10, 0}).std_error;
  EXPECT_NEAR(h1 / h2, std::sqrt(2.0), 0.15 * std::sqrt(2.0));
}

TEST(IsRenyi, IdentityProposalReducesToPlainMc) {
  const Law law = skewt_law(example1(1, 3.0));
  const McOptions opt{100000, 11, 0};
  const Estimate plain = mc_renyi(law, 2.0, opt);
  const Estimate is = is_renyi(law, law, 2.0, opt);
  EXPECT_NEAR(is.value, plain.value, 1e-12);
  EXPECT_NEAR(is.std_error, plain.std_error, 1e-12);
  EXPECT_EQ(is.method, Method::importance);
  EXPECT_FALSE(is.low_ess);
  EXPECT_GT(is.ess, 0.5 * 100000);
}

TEST(IsRenyi, MultivariateTWithCauchyProposal) {
  const SkewTParams target = SkewTParams::univariate(0.0, 1.0, 0.0, 3.0);
  const SkewTParams proposal = SkewTParams::univariate(0.0, 1.0, 0.0, 1.0);
  const Estimate e = is_renyi(skewt_law(target), skewt_law(proposal), 5.0, {1000000, 12, 0});
  EXPECT_NEAR(e.value, mt_renyi(target, 5.0), 3 * e.std_error);
}

TEST(IsRenyi, SkewTBivariate) {
  const SkewTParams p = example1(2, 3.0);
  const Estimate e = is_renyi(skewt_law(p), default_proposal(p), 2.0, {400000, 13, 0});
  EXPECT_NEAR(e.value, skewt_renyi(p, 2.0), 3 * e.std_error);
}

TEST(IsRenyi, AgreesWithPlainMcOnTestLaws) {
  struct Case {
    Law target;
    Law proposal;
  };
  const SkewTParams mt = SkewTParams::univariate(1.0, 2.0, 0.0, 4.0);
  const SkewTParams st = example1(3, 5.0);
  const Case cases[] = {
      {standard_normal(), gaussian_law(Vector::Zero(1), 2.0 * Matrix::Identity(1, 1))},
      {skewt_law(mt), default_proposal(mt)},
      {skewt_law(st), default_proposal(st)},
      {mixture_law(example2(1, 3)), default_proposal(example2(1, 3))},
  };
  for (const auto& c : cases) {
    for (double a : {2.0, 4.0}) {
      const Estimate x = mc_renyi(c.target, a, {400000, 14, 0});
      const Estimate y = is_renyi(c.target, c.proposal, a, {400000, 15, 0});
      EXPECT_NEAR(x.value, y.value, 3 * (x.std_error + y.std_error)) << a;
    }
  }
}

TEST(IsRenyi, FlagsLowEffectiveSampleSize) {
  const Law target = gaussian_law(Vector::Constant(1, 6.0), 0.01 * Matrix::Identity(1, 1));
  const Estimate e = is_renyi(target, standard_normal(), 2.0, {20000, 16, 0});
  EXPECT_TRUE(e.low_ess);
  EXPECT_LT(e.ess, 0.01 * 20000);
}

TEST(DefaultProposal, HalvesDegreesOfFreedom) {
  const SkewTParams p = example1(1, 6.0);
  const Law prop = default_proposal(p);
  const SkewTParams fat = SkewTParams::univariate(0.3, 1.5, 0.3, 3.0);
  Vector x(1);
  x << 2.5;
  EXPECT_DOUBLE_EQ(prop.logpdf(x), skewt_logpdf(fat, x));
  const Law floor = default_proposal(example1(1, 1.5));
  EXPECT_DOUBLE_EQ(floor.logpdf(x), skewt_logpdf(SkewTParams::univariate(0.3, 1.5, 0.3, 1.0), x));
}

}  // namespace
