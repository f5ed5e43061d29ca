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
#include "mstent/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "mstent/errors.hpp"
#include "mstent/rng.hpp"

namespace mstent {

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
    case Method::plain_mc: return "plain_mc";
    case Method::importance: return "importance";
  }
  return "?";
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming mean and centred second moment.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * o.n / total;
    m2 += o.m2 + delta * delta * n * o.n / total;
    n = total;
  }
};

// Sums of exp(t) and exp(2t) held relative to a running maximum.
struct ExpSums {
  double top = kNegInf;
  double s1 = 0.0;
  double s2 = 0.0;

  void add(double t) {
    if (t > top) {
      const double r = std::exp(top - t);
      s1 *= r;
      s2 *= r * r;
      top = t;
    }
    const double e = std::exp(t - top);
    s1 += e;
    s2 += e * e;
  }
  void merge(const ExpSums& o) {
    if (o.top == kNegInf) return;
    if (o.top > top) {
      const double r = std::exp(top - o.top);
      s1 *= r;
      s2 *= r * r;
      top = o.top;
    }
    const double r = std::exp(o.top - top);
    s1 += o.s1 * r;
    s2 += o.s2 * r * r;
  }
};

// ln of the sample mean of exp(t_i) and the standard error of that log.
void log_mean(const ExpSums& s, double n, double& value, double& se_log, double& ess) {
  if (s.top == kNegInf || !(s.s1 > 0.0)) {
    throw DomainError("all Monte Carlo summands are zero");
  }
  const double mean = s.s1 / n;
  const double var = std::max(0.0, (s.s2 / n - mean * mean) * n / (n - 1.0));
  value = s.top + std::log(mean);
  se_log = std::sqrt(var / n) / mean;
  ess = s.s1 * s.s1 / s.s2;
}

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || alpha == 1.0) {
    throw DomainError("Renyi order must be positive, finite and != 1, got " +
                      std::to_string(alpha));
  }
}

void check_n(std::size_t n) {
  if (n < 2) throw DomainError("Monte Carlo needs at least 2 samples");
}

[[noreturn]] void non_finite(std::size_t index, double value) {
  throw DomainError("non-finite log-density " + std::to_string(value) + " at draw " +
                    std::to_string(index));
}

Law make_law(int dim, std::shared_ptr<const MixtureDensity> dens,
             std::shared_ptr<const MixtureSampler> samp) {
  Law law;
  law.dim = dim;
  law.logpdf = [dens](const Eigen::Ref<const Vector>& x) { return (*dens)(x); };
  law.sample = [samp](Stream& s, Eigen::Ref<Vector> out) { samp->draw(s, out); };
  return law;
}

SkewTParams fatter(const SkewTParams& p) {
  return SkewTParams(p.mu, p.scale, p.delta, std::max(1.0, 0.5 * p.dof));
}

}  // namespace

Law mixture_law(const MixtureParams& m) {
  return make_law(m.dim(), std::make_shared<const MixtureDensity>(m),
                  std::make_shared<const MixtureSampler>(m));
}

Law skewt_law(const SkewTParams& p) { return mixture_law(MixtureParams::single(p)); }

Law gaussian_law(const Vector& mean, const Matrix& cov) {
  const SpdMatrix s(cov);
  const Matrix l = s.cholesky_factor();
  const double d = static_cast<double>(mean.size());
  const double norm = -0.5 * (d * std::log(2.0 * std::numbers::pi) + s.log_det());
  Law law;
  law.dim = static_cast<int>(mean.size());
  law.logpdf = [mean, l, norm](const Eigen::Ref<const Vector>& x) {
    return norm - 0.5 * l.triangularView<Eigen::Lower>().solve(x - mean).squaredNorm();
  };
  law.sample = [mean, l](Stream& st, Eigen::Ref<Vector> out) {
    Vector z(mean.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) z[j] = st.gaussian();
    out = mean + l * z;
  };
  return law;
}

Law default_proposal(const SkewTParams& p) { return skewt_law(fatter(p)); }

Law default_proposal(const MixtureParams& m) {
  std::vector<SkewTParams> comps;
  for (const auto& c : m.components) comps.push_back(fatter(c));
  return mixture_law(MixtureParams(std::move(comps), m.weights));
}

EntropyProfile mc_profile(const Law& law, const std::vector<double>& alphas,
                          const McOptions& opt) {
  check_n(opt.n);
  for (double a : alphas) check_alpha(a);
  const std::size_t chunks = chunk_count(opt.n);
  const std::size_t k = alphas.size();
  std::vector<Moments> moments(chunks);
  std::vector<ExpSums> sums(chunks * k);

  for_each_chunk(opt.n, opt.threads, [&](std::size_t c, std::size_t begin, std::size_t count) {
    Stream s(opt.seed, c);
    Vector x(law.dim);
    for (std::size_t i = 0; i < count; ++i) {
      law.sample(s, x);
      const double lp = law.logpdf(x);
      if (!std::isfinite(lp)) non_finite(begin + i, lp);
      moments[c].add(-lp);
      for (std::size_t j = 0; j < k; ++j) sums[c * k + j].add((alphas[j] - 1.0) * lp);
    }
  });

  const double n = static_cast<double>(opt.n);
  EntropyProfile out;
  out.alphas = alphas;
  Moments total;
  for (const auto& m : moments) total.merge(m);
  out.shannon.value = total.mean;
  out.shannon.std_error = std::sqrt(total.m2 / (n - 1.0) / n);
  out.shannon.n = opt.n;
  out.shannon.seed = opt.seed;
  out.shannon.method = Method::plain_mc;
  for (std::size_t j = 0; j < k; ++j) {
    ExpSums agg;
    for (std::size_t c = 0; c < chunks; ++c) agg.merge(sums[c * k + j]);
    double value = 0.0, se = 0.0, ess = 0.0;
    log_mean(agg, n, value, se, ess);
    Estimate e;
    e.value = value / (1.0 - alphas[j]);
    e.std_error = se / std::fabs(1.0 - alphas[j]);
    e.n = opt.n;
    e.seed = opt.seed;
    e.method = Method::plain_mc;
    out.renyi.push_back(e);
  }
  return out;
}

Estimate mc_shannon(const Law& law, const McOptions& opt) {
  return mc_profile(law, {}, opt).shannon;
}

Estimate mc_renyi(const Law& law, double alpha, const McOptions& opt) {
  return mc_profile(law, {alpha}, opt).renyi.front();
}

Estimate is_renyi(const Law& target, const Law& proposal, double alpha,
                  const McOptions& opt) {
  check_n(opt.n);
  check_alpha(alpha);
  if (target.dim != proposal.dim) throw DomainError("target and proposal dimensions differ");
  const std::size_t chunks = chunk_count(opt.n);
  std::vector<ExpSums> sums(chunks);
  for_each_chunk(opt.n, opt.threads, [&](std::size_t c, std::size_t begin, std::size_t count) {
    Stream s(opt.seed, c);
    Vector x(proposal.dim);
    for (std::size_t i = 0; i < count; ++i) {
      proposal.sample(s, x);
      const double lt = target.logpdf(x);
      const double lq = proposal.logpdf(x);
      if (!std::isfinite(lq)) non_finite(begin + i, lq);
      if (std::isnan(lt) || lt == std::numeric_limits<double>::infinity()) {
        non_finite(begin + i, lt);
      }
      sums[c].add(alpha * lt - lq);
    }
  });
  ExpSums agg;
  for (const auto& s : sums) agg.merge(s);
  const double n = static_cast<double>(opt.n);
  double value = 0.0, se = 0.0, ess = 0.0;
  log_mean(agg, n, value, se, ess);
  Estimate e;
  e.value = value / (1.0 - alpha);
  e.std_error = se / std::fabs(1.0 - alpha);
  e.n = opt.n;
  e.seed = opt.seed;
  e.method = Method::importance;
  e.ess = ess;
  e.low_ess = ess < 0.01 * n;
  return e;
}

}  // namespace mstent
