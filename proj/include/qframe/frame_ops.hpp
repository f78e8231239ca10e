// Copyright 2026 The qframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFRAME_FRAME_OPS_HPP_
#define QFRAME_FRAME_OPS_HPP_

#include <qframe/core.hpp>

#include <algorithm>

namespace qframe {

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// S = sum_k x_k x_k^*.
inline SelfAdjointOperator frame_operator(const Frame& frame) {
  const Matrix& x = frame.vectors();
  return SelfAdjointOperator(frame.field(), x.transpose() * x.conjugate());
}

inline FrameBounds frame_bounds(const Frame& frame) {
  const RealVector ev = frame_operator(frame).eigenvalues();
  return {std::max(0.0, ev(0)), std::max(0.0, ev(ev.size() - 1))};
}

// S^{-1/2} through the eigendecomposition of S. Rejects
// lambda_min < 1e-12 lambda_max.
inline Matrix inverse_sqrt(const SelfAdjointOperator& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.entries());
  const RealVector& ev = es.eigenvalues();
  const double top = ev(ev.size() - 1);
  if (!(top > 0.0) || ev(0) < 1e-12 * top)
    throw RankError("frame operator is singular or too ill-conditioned for S^{-1/2}");
  const RealVector scale = ev.array().rsqrt();
  Matrix out = es.eigenvectors() * scale.cast<Scalar>().asDiagonal() * es.eigenvectors().adjoint();
  if (s.field() == Field::Real) out = detail::realify(out);
  return out;
}

// {S^{-1/2} x_k}.
inline Frame canonical_parseval(const Frame& frame) {
  return frame.transformed(inverse_sqrt(frame_operator(frame)));
}

// Largest squared singular value of the synthesis matrix.
inline double bessel_bound(const Frame& family) {
  const Eigen::JacobiSVD<Matrix> svd(family.vectors());
  const double top = svd.singularValues()(0);
  return top * top;
}

// Smallest squared singular value of the synthesis map on the m-dimensional
// coefficient space; zero whenever m exceeds the ambient dimension.
inline double lower_riesz_bound(const Frame& family) {
  if (family.size() > family.dim()) return 0.0;
  const Eigen::JacobiSVD<Matrix> svd(family.vectors());
  const RealVector& sv = svd.singularValues();
  const double low = sv(sv.size() - 1);
  return low * low;
}

// Same quantities for families already embedded as real row vectors.
inline double bessel_bound(const RealMatrix& rows) {
  if (rows.size() == 0) return 0.0;
  const Eigen::JacobiSVD<RealMatrix> svd(rows);
  const double top = svd.singularValues()(0);
  return top * top;
}

inline double lower_riesz_bound(const RealMatrix& rows) {
  if (rows.rows() > rows.cols()) return 0.0;
  const Eigen::JacobiSVD<RealMatrix> svd(rows);
  const RealVector& sv = svd.singularValues();
  const double low = sv(sv.size() - 1);
  return low * low;
}

// Sum_k |x_k - y_k|^2 between equally sized frames.
inline double frame_distance_squared(const Frame& x, const Frame& y) {
  if (x.size() != y.size() || x.dim() != y.dim())
    throw DimensionError("frame distance needs frames of the same shape");
  return (x.vectors() - y.vectors()).squaredNorm();
}

}  // namespace qframe

#endif  // QFRAME_FRAME_OPS_HPP_
