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

#ifndef QFRAME_TESTS_ORACLES_HPP_
#define QFRAME_TESTS_ORACLES_HPP_

// Independent reference computations. Nothing here calls the tilde layer or
// the rank helpers of the library.

#include <qframe/core.hpp>

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using qframe::Index;
using qframe::Matrix;
using qframe::RealMatrix;
using qframe::RealVector;
using qframe::Scalar;
using qframe::Vector;

// sum_ij conj(x_i) T_ij x_j by explicit loops.
inline Scalar quadratic_form(const Matrix& t, const Vector& x) {
  Scalar s = 0.0;
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = 0; j < x.size(); ++j) s += std::conj(x(i)) * t(i, j) * x(j);
  return s;
}

// Rank-one operator x x^* flattened into real coordinates (Re, Im of every
// entry, n^2 * 2 numbers). Two frames have the same injectivity status as
// the span of these vectors, computed without the tilde layer.
inline RealMatrix outer_product_rows(const Matrix& vectors) {
  const Index m = vectors.rows();
  const Index n = vectors.cols();
  RealMatrix out(m, 2 * n * n);
  for (Index k = 0; k < m; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Scalar z = vectors(k, i) * std::conj(vectors(k, j));
        out(k, 2 * (i * n + j)) = z.real();
        out(k, 2 * (i * n + j) + 1) = z.imag();
      }
  return out;
}

// Rank by complete orthogonal decomposition with an explicit relative
// threshold.
inline Index rank(const RealMatrix& a, double rel = 1e-9) {
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(a);
  cod.setThreshold(rel);
  return cod.rank();
}

inline RealMatrix pinv(const RealMatrix& a) {
  return Eigen::CompleteOrthogonalDecomposition<RealMatrix>(a).pseudoInverse();
}

inline Matrix random_matrix(Index r, Index c, bool complex, std::mt19937_64& g) {
  std::normal_distribution<double> d;
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Scalar(d(g), complex ? d(g) : 0.0);
  return m;
}

inline Matrix random_hermitian(Index n, bool complex, std::mt19937_64& g) {
  const Matrix a = random_matrix(n, n, complex, g);
  return (a + a.adjoint()) * 0.5;
}

}  // namespace oracle

#endif  // QFRAME_TESTS_ORACLES_HPP_
