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

#ifndef QFRAME_RANDOM_HPP_
#define QFRAME_RANDOM_HPP_

#include <qframe/core.hpp>

#include <cstdint>
#include <random>

namespace qframe {

using Rng = std::mt19937_64;

// Counter-based seed split: stream `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

// i.i.d. standard Gaussian entries; complex draws have independent re/im.
inline Matrix gaussian_matrix(Index rows, Index cols, Field field, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = gaussian(rng);
      const double im = field == Field::Complex ? gaussian(rng) : 0.0;
      m(i, j) = Scalar(re, im);
    }
  return m;
}

// Haar-distributed orthogonal/unitary matrix from the QR factorization of a
// Gaussian matrix with the phases of diag(R) absorbed. Degenerate draws
// (|R_ii| tiny) are redrawn.
inline Matrix haar_unitary(Index n, Field field, Rng& rng) {
  for (;;) {
    const Matrix g = gaussian_matrix(n, n, field, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    bool degenerate = false;
    Matrix q = qr.householderQ();
    for (Index i = 0; i < n; ++i) {
      const double mag = std::abs(r(i, i));
      if (mag < 1e-12) {
        degenerate = true;
        break;
      }
      q.col(i) *= r(i, i) / mag;
    }
    if (degenerate) continue;
    if (field == Field::Real) q = detail::realify(q);
    return q;
  }
}

// Hermitian operator with Gaussian entries (GUE/GOE-like, unnormalized).
inline SelfAdjointOperator random_hermitian(Index n, Field field, Rng& rng) {
  const Matrix g = gaussian_matrix(n, n, field, rng);
  return SelfAdjointOperator(field, g);
}

}  // namespace qframe

#endif  // QFRAME_RANDOM_HPP_
