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
#ifndef MSTENT_DISTRIBUTIONS_HPP
#define MSTENT_DISTRIBUTIONS_HPP

#include <cstdint>
#include <vector>

#include "mstent/linalg.hpp"
#include "mstent/readings.hpp"
#include "mstent/rng.hpp"

namespace mstent {

/**
 * One multivariate skew-t component.
 *
 * Density: f(x) = 2 t_d(x; mu, S, v) G(delta' S^{-1} (x - mu) sqrt((v+d)/(v+Q)); v+d)
 * with Q = (x-mu)' S^{-1} (x-mu) and G the standard univariate t CDF. The shape
 * vector is unbounded; delta = 0 gives the multivariate t.
 */
struct SkewTParams {
  Vector mu;
  SpdMatrix scale;
  Vector delta;
  double dof;

  SkewTParams(Vector mu_, SpdMatrix scale_, Vector delta_, double dof_);
  /// Scalar (d = 1) convenience constructor.
  static SkewTParams univariate(double mu, double scale, double delta, double dof);

  int dim() const { return static_cast<int>(mu.size()); }
};

/// Shape quantities derived from (S, delta).
struct DerivedShape {
  double beta = 1.0;   ///< sqrt(1 - dd) = 1/sqrt(1 + |lambda|^2)
  Vector delta_hat;    ///< S^{1/2} delta_tilde, enters the moments
  Vector delta_tilde;  ///< lambda / sqrt(1 + |lambda|^2)
  double dd = 0.0;     ///< delta_tilde' delta_tilde
  Vector lambda;       ///< S^{-1/2} delta, the standardized shape
  double lambda_norm = 0.0;
};

DerivedShape derive_shape(const SkewTParams& p);

struct MixtureParams {
  std::vector<SkewTParams> components;
  std::vector<double> weights;

  MixtureParams(std::vector<SkewTParams> components_, std::vector<double> weights_);
  static MixtureParams single(SkewTParams p);

  int dim() const { return components.front().dim(); }
  int size() const { return static_cast<int>(components.size()); }
};

/// Precomputed evaluator for repeated skew-t log-density calls.
class SkewTDensity {
 public:
  explicit SkewTDensity(const SkewTParams& p, bool ignore_shape = false);
  double operator()(const Eigen::Ref<const Vector>& x) const;
  int dim() const { return static_cast<int>(mu_.size()); }

 private:
  Vector mu_;
  Matrix chol_;
  Vector shape_;  // S^{-1} delta
  double dof_;
  double log_norm_;
  bool skewed_;
};

class MixtureDensity {
 public:
  explicit MixtureDensity(const MixtureParams& m);
  double operator()(const Eigen::Ref<const Vector>& x) const;
  int dim() const { return components_.front().dim(); }

 private:
  std::vector<SkewTDensity> components_;
  std::vector<double> log_weights_;
};

double skewt_logpdf(const SkewTParams& p, const Vector& x);
/// Multivariate t log-density; the shape vector is ignored.
double mt_logpdf(const SkewTParams& p, const Vector& x);
double mixture_logpdf(const MixtureParams& m, const Vector& x);

/// Gamma((v-1)/2) sqrt(v/pi) / Gamma(v/2), the scale of E|Z|/sqrt(w).
double mean_shape_factor(double dof);

Vector skewt_mean(const SkewTParams& p);
Matrix skewt_cov(const SkewTParams& p);
Vector mixture_mean(const MixtureParams& m);
Matrix mixture_cov(const MixtureParams& m,
                   MixtureCovariance reading = MixtureCovariance::total);

/// Draws component samples into the columns of a d x count block.
class SkewTSampler {
 public:
  explicit SkewTSampler(const SkewTParams& p);
  void draw(Stream& s, Eigen::Ref<Vector> out) const;
  int dim() const { return static_cast<int>(mu_.size()); }

 private:
  Vector mu_;
  Vector delta_hat_;
  Matrix b_;  // B B' = S - delta_hat delta_hat'
  double dof_;
};

class MixtureSampler {
 public:
  explicit MixtureSampler(const MixtureParams& m);
  /// Returns the component index that produced the draw.
  int draw(Stream& s, Eigen::Ref<Vector> out) const;
  int dim() const { return components_.front().dim(); }

 private:
  std::vector<SkewTSampler> components_;
  std::vector<double> cumulative_;
};

/// n x d matrix of draws; bit-identical for a fixed seed regardless of threads.
Matrix sample_skewt(const SkewTParams& p, std::size_t n, std::uint64_t seed,
                    unsigned threads = 0);
Matrix sample_mixture(const MixtureParams& m, std::size_t n, std::uint64_t seed,
                      unsigned threads = 0, std::vector<int>* labels = nullptr);

}  // namespace mstent

#endif  // MSTENT_DISTRIBUTIONS_HPP
