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

#ifndef MSTENT_LINALG_HPP
#define MSTENT_LINALG_HPP

#include <Eigen/Dense>

namespace mstent {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/**
 * Symmetric positive-definite matrix with a cached Cholesky factor.
 *
 * Construction tolerates asymmetry up to kSymmetryTolerance (relative to the
 * largest entry), which is removed by averaging with the transpose. Anything
 * larger, a non-positive pivot, or a reciprocal condition number below
 * kMinRcond is rejected with MatrixError.
 */
class SpdMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-8;
  static constexpr double kMinRcond = 1e-13;

  explicit SpdMatrix(const Matrix& s);
  static SpdMatrix identity(int d);
  static SpdMatrix scalar(double s) { return SpdMatrix(Matrix::Constant(1, 1, s)); }

  int dim() const { return static_cast<int>(s_.rows()); }
  const Matrix& matrix() const { return s_; }
  /// Lower-triangular L with S = L L'.
  const Matrix& cholesky_factor() const { return l_; }

  double log_det() const;
  Vector solve(const Vector& b) const;
  /// z' S^{-1} z
  double quad_form(const Vector& z) const;
  /// Symmetric M with M M = S.
  SpdMatrix sqrt() const;
  /// Symmetric S^{-1/2}.
  Matrix inv_sqrt() const;

 private:
  Matrix s_;
  Matrix l_;
};

Matrix cholesky(const SpdMatrix& s);
double log_det(const SpdMatrix& s);
Vector solve(const SpdMatrix& s, const Vector& b);
double quad_form(const SpdMatrix& s, const Vector& z);
SpdMatrix sqrt_spd(const SpdMatrix& s);

}  // namespace mstent

#endif  // MSTENT_LINALG_HPP
