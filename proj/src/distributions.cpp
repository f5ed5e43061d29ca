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
#include "mstent/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mstent/errors.hpp"
#include "mstent/specfn.hpp"

namespace mstent {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_dof(const SkewTParams& p, double min, const char* what, int index = -1) {
  if (p.dof > min) return;
  std::string msg = std::string(what) + " undefined for dof " + std::to_string(p.dof) +
                    " (requires dof > " + std::to_string(static_cast<int>(min)) + ")";
  if (index >= 0) msg = "component " + std::to_string(index) + ": " + msg;
  throw DomainError(msg);
}

}  // namespace

SkewTParams::SkewTParams(Vector mu_, SpdMatrix scale_, Vector delta_, double dof_)
    : mu(std::move(mu_)), scale(std::move(scale_)), delta(std::move(delta_)), dof(dof_) {
  const auto d = scale.dim();
  if (mu.size() != d || delta.size() != d) {
    throw ParameterError("dimension mismatch: scale is " + std::to_string(d) + "x" +
                         std::to_string(d) + ", mu has length " +
                         std::to_string(mu.size()) + ", delta has length " +
                         std::to_string(delta.size()));
  }
  if (!mu.allFinite() || !delta.allFinite()) {
    throw ParameterError("location and shape must be finite");
  }
  if (!std::isfinite(dof) || !(dof > 0.0)) {
    throw ParameterError("degrees of freedom must be finite and positive, got " +
                         std::to_string(dof));
  }
}

SkewTParams SkewTParams::univariate(double mu, double scale, double delta, double dof) {
  return SkewTParams(Vector::Constant(1, mu), SpdMatrix::scalar(scale),
                     Vector::Constant(1, delta), dof);
}

DerivedShape derive_shape(const SkewTParams& p) {
  DerivedShape s;
  const int d = p.dim();
  if (p.delta.isZero(0.0)) {
    s.delta_hat = Vector::Zero(d);
    s.delta_tilde = Vector::Zero(d);
    s.lambda = Vector::Zero(d);
    return s;
  }
  const double q = p.scale.quad_form(p.delta);
  s.lambda = p.scale.inv_sqrt() * p.delta;
  s.lambda_norm = std::sqrt(q);
  const double root = std::sqrt(1.0 + q);
  s.beta = 1.0 / root;
  s.delta_tilde = s.lambda / root;
  s.delta_hat = p.delta / root;
  s.dd = q / (1.0 + q);
  if (!std::isfinite(q) || !s.lambda.allFinite() || !s.delta_hat.allFinite() ||
      !(s.beta > 0.0)) {
    throw ParameterError("derived shape is not finite (delta' S^-1 delta = " +
                         std::to_string(q) + ")");
  }
  return s;
}

MixtureParams::MixtureParams(std::vector<SkewTParams> components_,
                             std::vector<double> weights_)
    : components(std::move(components_)), weights(std::move(weights_)) {
  if (components.empty()) throw ParameterError("mixture needs at least one component");
  if (weights.size() != components.size()) {
    throw ParameterError("mixture has " + std::to_string(components.size()) +
                         " components but " + std::to_string(weights.size()) +
                         " weights");
  }
  const int d = components.front().dim();
  double total = 0.0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].dim() != d) {
      throw ParameterError("component " + std::to_string(i) + " has dimension " +
                           std::to_string(components[i].dim()) + ", expected " +
                           std::to_string(d));
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw ParameterError("weight " + std::to_string(i) + " must be non-negative");
    }
    total += weights[i];
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw ParameterError("weights must sum to 1, got " + std::to_string(total));
  }
}

MixtureParams MixtureParams::single(SkewTParams p) {
  return MixtureParams({std::move(p)}, {1.0});
}

SkewTDensity::SkewTDensity(const SkewTParams& p, bool ignore_shape)
    : mu_(p.mu), chol_(p.scale.cholesky_factor()), dof_(p.dof) {
  const double d = p.dim();
  log_norm_ = log_gamma(0.5 * (dof_ + d)) - log_gamma(0.5 * dof_) -
              0.5 * d * std::log(dof_ * std::numbers::pi) - 0.5 * p.scale.log_det();
  skewed_ = !ignore_shape && !p.delta.isZero(0.0);
  shape_ = skewed_ ? p.scale.solve(p.delta) : Vector::Zero(p.dim());
}

double SkewTDensity::operator()(const Eigen::Ref<const Vector>& x) const {
  if (x.size() != mu_.size()) {
    throw ParameterError("dimension mismatch: density is " + std::to_string(mu_.size()) +
                         "-dimensional, point has length " + std::to_string(x.size()));
  }
  const Vector diff = x - mu_;
  const double q = chol_.triangularView<Eigen::Lower>().solve(diff).squaredNorm();
  const double d = static_cast<double>(mu_.size());
  double lp = log_norm_ - 0.5 * (dof_ + d) * std::log1p(q / dof_);
  if (skewed_) {
    const double arg = shape_.dot(diff) * std::sqrt((dof_ + d) / (dof_ + q));
    lp += std::numbers::ln2 + student_t_logcdf(arg, dof_ + d);
  }
  return lp;
}

MixtureDensity::MixtureDensity(const MixtureParams& m) {
  components_.reserve(m.components.size());
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    components_.emplace_back(m.components[i]);
    log_weights_.push_back(m.weights[i] > 0 ? std::log(m.weights[i]) : kNegInf);
  }
}

double MixtureDensity::operator()(const Eigen::Ref<const Vector>& x) const {
  if (components_.size() == 1) return components_.front()(x);
  double terms[64];
  std::vector<double> spill;
  double* t = terms;
  if (components_.size() > 64) {
    spill.resize(components_.size());
    t = spill.data();
  }
  double top = kNegInf;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    t[i] = log_weights_[i] == kNegInf ? kNegInf : log_weights_[i] + components_[i](x);
    top = std::max(top, t[i]);
  }
  if (top == kNegInf) return kNegInf;
  double sum = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) sum += std::exp(t[i] - top);
  return top + std::log(sum);
}

double skewt_logpdf(const SkewTParams& p, const Vector& x) { return SkewTDensity(p)(x); }

double mt_logpdf(const SkewTParams& p, const Vector& x) {
  return SkewTDensity(p, true)(x);
}

double mixture_logpdf(const MixtureParams& m, const Vector& x) {
  return MixtureDensity(m)(x);
}

double mean_shape_factor(double dof) {
  return std::exp(log_gamma(0.5 * (dof - 1.0)) - log_gamma(0.5 * dof)) *
         std::sqrt(dof / std::numbers::pi);
}

Vector skewt_mean(const SkewTParams& p) {
  require_dof(p, 1.0, "mean");
  return p.mu + mean_shape_factor(p.dof) * derive_shape(p).delta_hat;
}

Matrix skewt_cov(const SkewTParams& p) {
  require_dof(p, 2.0, "covariance");
  const Vector m = mean_shape_factor(p.dof) * derive_shape(p).delta_hat;
  Matrix cov = p.dof / (p.dof - 2.0) * p.scale.matrix() - m * m.transpose();
  try {
    SpdMatrix check(cov);
  } catch (const MatrixError& e) {
    throw ParameterError(std::string("covariance is not valid: ") + e.what());
  }
  return cov;
}

Vector mixture_mean(const MixtureParams& m) {
  Vector out = Vector::Zero(m.dim());
  for (int i = 0; i < m.size(); ++i) {
    require_dof(m.components[i], 1.0, "mean", i);
    out += m.weights[i] * skewt_mean(m.components[i]);
  }
  return out;
}

Matrix mixture_cov(const MixtureParams& m, MixtureCovariance reading) {
  const int d = m.dim();
  for (int i = 0; i < m.size(); ++i) require_dof(m.components[i], 2.0, "covariance", i);
  Matrix out = Matrix::Zero(d, d);
  if (reading == MixtureCovariance::printed) {
    Vector shift = Vector::Zero(d);
    for (int i = 0; i < m.size(); ++i) {
      const auto& c = m.components[i];
      out += m.weights[i] * c.dof / (c.dof - 2.0) * c.scale.matrix();
      shift += m.weights[i] * mean_shape_factor(c.dof) * derive_shape(c).delta_hat;
    }
    out -= shift * shift.transpose();
  } else {
    const Vector bar = mixture_mean(m);
    for (int i = 0; i < m.size(); ++i) {
      const Vector mi = skewt_mean(m.components[i]) - bar;
      out += m.weights[i] * (skewt_cov(m.components[i]) + mi * mi.transpose());
    }
  }
  try {
    SpdMatrix check(out);
  } catch (const MatrixError& e) {
    throw ParameterError(std::string("mixture covariance is not valid: ") + e.what());
  }
  return out;
}

SkewTSampler::SkewTSampler(const SkewTParams& p) : mu_(p.mu), dof_(p.dof) {
  delta_hat_ = derive_shape(p).delta_hat;
  const Matrix rest = p.scale.matrix() - delta_hat_ * delta_hat_.transpose();
  Eigen::LLT<Matrix> llt(rest);
  if (llt.info() != Eigen::Success) {
    throw ParameterError("S - delta_hat delta_hat' is not positive definite");
  }
  b_ = llt.matrixL();
}

void SkewTSampler::draw(Stream& s, Eigen::Ref<Vector> out) const {
  const int d = dim();
  const double w = s.gamma(0.5 * dof_, 0.5 * dof_);
  const double u0 = std::fabs(s.gaussian());
  Vector u1(d);
  for (int j = 0; j < d; ++j) u1[j] = s.gaussian();
  out = mu_ + (delta_hat_ * u0 + b_ * u1) / std::sqrt(w);
}

MixtureSampler::MixtureSampler(const MixtureParams& m) {
  double acc = 0.0;
  int last_positive = 0;
  for (int i = 0; i < m.size(); ++i) {
    components_.emplace_back(m.components[i]);
    acc += m.weights[i];
    cumulative_.push_back(acc);
    if (m.weights[i] > 0) last_positive = i;
  }
  cumulative_[last_positive] = std::numeric_limits<double>::infinity();
}

int MixtureSampler::draw(Stream& s, Eigen::Ref<Vector> out) const {
  int k = 0;
  if (components_.size() > 1) {
    const double u = s.uniform();
    k = static_cast<int>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                         cumulative_.begin());
  }
  components_[k].draw(s, out);
  return k;
}

Matrix sample_skewt(const SkewTParams& p, std::size_t n, std::uint64_t seed,
                    unsigned threads) {
  return sample_mixture(MixtureParams::single(p), n, seed, threads);
}

Matrix sample_mixture(const MixtureParams& m, std::size_t n, std::uint64_t seed,
                      unsigned threads, std::vector<int>* labels) {
  if (n == 0) throw DomainError("sample count must be at least 1");
  const MixtureSampler sampler(m);
  Matrix out(n, m.dim());
  if (labels) labels->assign(n, 0);
  for_each_chunk(n, threads, [&](std::size_t chunk, std::size_t begin, std::size_t count) {
    Stream s(seed, chunk);
    Vector x(m.dim());
    for (std::size_t i = 0; i < count; ++i) {
      const int k = sampler.draw(s, x);
      out.row(static_cast<Eigen::Index>(begin + i)) = x.transpose();
      if (labels) (*labels)[begin + i] = k;
    }
  });
  return out;
}

}  // namespace mstent
