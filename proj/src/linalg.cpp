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

#include "mstent/linalg.hpp"

#include <cmath>
#include <string>

#include "mstent/errors.hpp"

namespace mstent {

SpdMatrix::SpdMatrix(const Matrix& s) {
  if (s.rows() == 0 || s.rows() != s.cols()) {
    throw MatrixError("scale matrix must be square and non-empty, got " +
                      std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  }
  if (!s.allFinite()) throw MatrixError("scale matrix has non-finite entries");
  const double scale = s.cwiseAbs().maxCoeff();
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    throw MatrixError("scale matrix is not symmetric (max |S - S'| = " +
                      std::to_string(asym) + ")");
  }
  s_ = 0.5 * (s + s.transpose());

  Eigen::LLT<Matrix> llt(s_);
  if (llt.info() != Eigen::Success) {
    throw MatrixError("scale matrix is not positive definite");
  }
  l_ = llt.matrixL();
  if ((l_.diagonal().array() <= 0.0).any()) {
    throw MatrixError("scale matrix is not positive definite");
  }
  if (dim() > 1) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(s_, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0) {
      throw MatrixError("scale matrix is not positive definite");
    }
    if (ev.minCoeff() / ev.maxCoeff() < kMinRcond) {
      throw MatrixError("scale matrix is ill-conditioned (rcond " +
                        std::to_string(ev.minCoeff() / ev.maxCoeff()) + ")");
    }
  }
}

SpdMatrix SpdMatrix::identity(int d) { return SpdMatrix(Matrix::Identity(d, d)); }

double SpdMatrix::log_det() const {
  return 2.0 * l_.diagonal().array().log().sum();
}

Vector SpdMatrix::solve(const Vector& b) const {
  if (b.size() != s_.rows()) {
    throw MatrixError("dimension mismatch: matrix is " + std::to_string(dim()) +
                      "-dimensional, vector has length " + std::to_string(b.size()));
  }
  Vector y = l_.triangularView<Eigen::Lower>().solve(b);
  return l_.transpose().triangularView<Eigen::Upper>().solve(y);
}

double SpdMatrix::quad_form(const Vector& z) const {
  if (z.size() != s_.rows()) {
    throw MatrixError("dimension mismatch: matrix is " + std::to_string(dim()) +
                      "-dimensional, vector has length " + std::to_string(z.size()));
  }
  return l_.triangularView<Eigen::Lower>().solve(z).squaredNorm();
}

SpdMatrix SpdMatrix::sqrt() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s_);
  return SpdMatrix(es.operatorSqrt());
}

Matrix SpdMatrix::inv_sqrt() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s_);
  return es.operatorInverseSqrt();
}

Matrix cholesky(const SpdMatrix& s) { return s.cholesky_factor(); }
double log_det(const SpdMatrix& s) { return s.log_det(); }
Vector solve(const SpdMatrix& s, const Vector& b) { return s.solve(b); }
double quad_form(const SpdMatrix& s, const Vector& z) { return s.quad_form(z); }
SpdMatrix sqrt_spd(const SpdMatrix& s) { return s.sqrt(); }

}  // namespace mstent
