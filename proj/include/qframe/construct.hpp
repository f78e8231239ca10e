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

#ifndef QFRAME_CONSTRUCT_HPP_
#define QFRAME_CONSTRUCT_HPP_

// Generators for injective frame families.
//
// The staircase families are built block by block: block i holds vectors
// supported on coordinates i..n whose i-th coordinate is nonzero (and real),
// linearly independent over R. Stacking the blocks yields exactly
// n(n+1)/2 (real) or n^2 (complex) vectors whose embeddings are triangular
// with respect to the block order, hence a basis.

#include <qframe/core.hpp>
#include <qframe/random.hpp>

#include <cmath>
#include <optional>
#include <vector>

namespace qframe {

// {e_i} followed by {e_i + e_j : i < j} in lexicographic order.
inline Frame sum_pairs(Index n) {
  if (n < 1) throw ValidationError("sum_pairs needs n >= 1");
  RealMatrix rows = RealMatrix::Zero(n * (n + 1) / 2, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) rows(k++, i) = 1.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      rows(k, i) = 1.0;
      rows(k, j) = 1.0;
      ++k;
    }
  return Frame::real(rows);
}

namespace detail {

// d x d basis of R^d whose rows all have a nonzero first coordinate. The
// deterministic choice is {f_1, f_1 + f_2, ..., f_1 + f_d}; the seeded one is
// a random orthogonal matrix whose first column stays away from zero, which
// keeps the stacked tilde matrix well conditioned.
inline RealMatrix leading_basis(Index d, std::optional<Rng>& rng) {
  if (!rng) {
    RealMatrix b = RealMatrix::Zero(d, d);
    for (Index t = 0; t < d; ++t) {
      b(t, 0) = 1.0;
      if (t > 0) b(t, t) = 1.0;
    }
    return b;
  }
  const double floor = 0.5 / std::sqrt(static_cast<double>(d));
  for (;;) {
    const RealMatrix q = haar_unitary(d, Field::Real, *rng).real();
    if (q.col(0).cwiseAbs().minCoeff() >= floor) return q;
  }
}

}  // namespace detail

// Real staircase frame with m = n(n+1)/2. Without a seed the block bases are
// the deterministic "identity plus first-coordinate-one" vectors.
inline Frame staircase_real(Index n, std::optional<std::uint64_t> seed = std::nullopt) {
  if (n < 1) throw ValidationError("staircase_real needs n >= 1");
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  RealMatrix rows = RealMatrix::Zero(n * (n + 1) / 2, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) {
    const Index d = n - i;
    const RealMatrix block = detail::leading_basis(d, rng);
    rows.block(k, i, d, d) = block;
    k += d;
  }
  return Frame::real(rows);
}

// Complex staircase frame with m = n^2. Block i is a basis of R^{2d-1},
// d = n - i + 1, read as (u_i, u_{i+1}, v_{i+1}, ..., u_n, v_n) and mapped to
// z = (0, ..., 0, u_i, u_{i+1} + i v_{i+1}, ..., u_n + i v_n).
inline Frame staircase_complex(Index n, std::optional<std::uint64_t> seed = std::nullopt) {
  if (n < 1) throw ValidationError("staircase_complex needs n >= 1");
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  Matrix rows = Matrix::Zero(n * n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) {
    const Index d = n - i;
    const Index width = 2 * d - 1;
    const RealMatrix block = detail::leading_basis(width, rng);
    for (Index t = 0; t < width; ++t, ++k) {
      rows(k, i) = Scalar(block(t, 0), 0.0);
      for (Index c = 1; c < d; ++c) rows(k, i + c) = Scalar(block(t, 2 * c - 1), block(t, 2 * c));
    }
  }
  return Frame(Field::Complex, std::move(rows));
}

// lambda_ij >= 0 with lambda_ij == 0 exactly when j < i and unit column sums.
// Row i is the spectrum prescribed for staircase block i.
class EigenvalueSchedule {
 public:
  explicit EigenvalueSchedule(RealMatrix lambda) : lambda_(std::move(lambda)) {
    const Index n = lambda_.rows();
    if (n < 1 || lambda_.cols() != n) throw ValidationError("schedule must be a square n x n grid");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const double v = lambda_(i, j);
        if (!std::isfinite(v) || v < 0.0) throw ValidationError("schedule entries must be >= 0");
        if (j < i && v != 0.0) throw ValidationError("schedule entry below the diagonal is nonzero");
        if (j >= i && v == 0.0) throw ValidationError("schedule entry on/above the diagonal is zero");
      }
    for (Index j = 0; j < n; ++j)
      if (std::abs(lambda_.col(j).sum() - 1.0) > 1e-12)
        throw ValidationError("schedule column " + std::to_string(j + 1) + " does not sum to 1");
  }

  // lambda_ij = 1/j for i <= j.
  static EigenvalueSchedule uniform(Index n) {
    RealMatrix l = RealMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i <= j; ++i) l(i, j) = 1.0 / static_cast<double>(j + 1);
    return EigenvalueSchedule(std::move(l));
  }

  Index dim() const noexcept { return lambda_.rows(); }
  const RealMatrix& values() const noexcept { return lambda_; }

 private:
  RealMatrix lambda_;
};

namespace detail {

// Symmetric reflection of R^d that sends f_1 to (1, ..., 1)/sqrt(d); every
// column then has first coordinate 1/sqrt(d).
inline RealMatrix leading_reflection(Index d) {
  if (d == 1) return RealMatrix::Ones(1, 1);
  RealVector w = RealVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  w(0) -= 1.0;
  return RealMatrix::Identity(d, d) - 2.0 * w * w.transpose() / w.squaredNorm();
}

// Rows of a K x d matrix with orthonormal columns (a Parseval frame for C^d)
// whose first column is real and bounded away from zero, and whose real
// coordinates (u_1, u_2, v_2, ..., u_d, v_d) are linearly independent.
inline Matrix complex_parseval_block(Index d, Rng& rng) {
  const Index k = 2 * d - 1;
  for (;;) {
    const Matrix g = gaussian_matrix(k, d, Field::Complex, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(k, d);
    bool ok = true;
    for (Index r = 0; r < k; ++r) {
      const double mag = std::abs(q(r, 0));
      if (mag < 1e-2) {
        ok = false;
        break;
      }
      q.row(r) *= std::conj(q(r, 0)) / mag;
      q(r, 0) = Scalar(q(r, 0).real(), 0.0);
    }
    if (!ok) continue;
    RealMatrix coords(k, k);
    for (Index r = 0; r < k; ++r) {
      coords(r, 0) = q(r, 0).real();
      for (Index c = 1; c < d; ++c) {
        coords(r, 2 * c - 1) = q(r, c).real();
        coords(r, 2 * c) = q(r, c).imag();
      }
    }
    const RankInfo rk = numerical_rank(coords);
    if (rk.rank == k && rk.smallest_kept > 1e-3 * rk.largest) return q;
  }
}

}  // namespace detail

// Parseval staircase: block i is {D_i^{1/2} u_k} with {u_k} an orthonormal
// basis (real case) or Parseval frame (complex case) of span{e_i..e_n}
// having nonzero leading coordinates, and D_i = diag(lambda_i.). Block frame
// operators are then exactly D_i and they sum to the identity.
inline Frame parseval_staircase(const EigenvalueSchedule& schedule, Field field,
                                std::optional<std::uint64_t> seed = std::nullopt) {
  const Index n = schedule.dim();
  const RealMatrix& lambda = schedule.values();
  Rng rng(seed.value_or(0x5eed5eedULL));
  const Index m = field == Field::Real ? n * (n + 1) / 2 : n * n;
  Matrix rows = Matrix::Zero(m, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) {
    const Index d = n - i;
    const RealVector root = lambda.row(i).segment(i, d).transpose().cwiseSqrt();
    if (field == Field::Real) {
      RealMatrix basis;
      if (seed) {
        for (;;) {
          basis = haar_unitary(d, Field::Real, rng).real();
          if (basis.row(0).cwiseAbs().minCoeff() > 1e-2) break;
        }
      } else {
        basis = detail::leading_reflection(d);
      }
      // columns of `basis` are the u_k; row form is u_k^T D^{1/2}
      const RealMatrix block = basis.transpose() * root.asDiagonal();
      rows.block(k, i, d, d) = block.cast<Scalar>();
      k += d;
    } else {
      const Matrix q = detail::complex_parseval_block(d, rng);
      // Parseval rows z with sum z z^* = conj(q^* q) = I; scale columns.
      const Matrix block = q * root.cast<Scalar>().asDiagonal();
      rows.block(k, i, 2 * d - 1, d) = block;
      k += 2 * d - 1;
    }
  }
  return Frame(field, std::move(rows));
}

// Truncated shift frame on R^N (or C^N):
//   {e_1..e_N} and 2^{-i} a_k (e_{1+i} + e_{1+i+k}), i >= 0, k >= 1,
//   1 + i + k <= N; complex mode adds 2^{-i} b_k (e_{1+i} + i e_{1+i+k}).
struct ShiftFrameConfig {
  Index truncation = 2;
  Field field = Field::Real;
  std::vector<double> a;  // a_1, a_2, ...; default 2^{-k}
  std::vector<double> b;  // complex branch; default 2^{-k}
};

namespace detail {

inline double coefficient(const std::vector<double>& c, Index k) {
  const auto idx = static_cast<std::size_t>(k - 1);
  if (idx < c.size()) return c[idx];
  return std::ldexp(1.0, -static_cast<int>(k));
}

}  // namespace detail

inline Frame shift_frame(const ShiftFrameConfig& config) {
  const Index n = config.truncation;
  if (n < 2) throw ValidationError("shift_frame needs truncation N >= 2");
  for (double c : config.a)
    if (c == 0.0 || !std::isfinite(c)) throw ValidationError("shift_frame coefficients must be nonzero");
  for (double c : config.b)
    if (c == 0.0 || !std::isfinite(c)) throw ValidationError("shift_frame coefficients must be nonzero");
  const bool complex = config.field == Field::Complex;
  std::vector<Vector> vs;
  for (Index i = 0; i < n; ++i) vs.push_back(Vector::Unit(n, i));
  for (Index i = 0; i + 1 < n; ++i) {
    const double shift = std::ldexp(1.0, -static_cast<int>(i));
    for (Index k = 1; i + k < n; ++k) {
      Vector x = Vector::Zero(n);
      const double c = shift * detail::coefficient(config.a, k);
      x(i) = c;
      x(i + k) = c;
      vs.push_back(x);
      if (complex) {
        Vector z = Vector::Zero(n);
        const double cb = shift * detail::coefficient(config.b, k);
        z(i) = cb;
        z(i + k) = Scalar(0.0, cb);
        vs.push_back(z);
      }
    }
  }
  return Frame::from_vectors(config.field, vs);
}

inline Frame shift_frame(Index truncation, Field field = Field::Real) {
  ShiftFrameConfig config;
  config.truncation = truncation;
  config.field = field;
  return shift_frame(config);
}

// Output of boundedize: the new frame plus the fresh coordinate n_k chosen
// for each non-basis input vector (0-based).
struct BoundedFrame {
  Frame frame;
  Index source_dim = 0;
  std::vector<Index> fresh_index;
};

// Replaces every non-basis vector x_k by the pair x_k + e_{n_k},
// x_k - e_{n_k}, with fresh indices n_k = N0 + k past the input support N0.
// Canonical basis vectors of the input are kept, and the basis of the new
// coordinates N0..N-1 is appended (it holds every e_{n_k}).
inline BoundedFrame boundedize(const Frame& frame, Index truncation) {
  const Index n0 = frame.dim();
  std::vector<Index> basis, others;
  for (Index k = 0; k < frame.size(); ++k) {
    const Vector x = frame.vector(k);
    Index nonzero = 0, at = 0;
    for (Index i = 0; i < n0; ++i)
      if (x(i) != Scalar(0.0)) {
        ++nonzero;
        at = i;
      }
    if (nonzero == 1 && x(at) == Scalar(1.0)) {
      basis.push_back(k);
    } else {
      others.push_back(k);
    }
  }
  const Index needed = n0 + static_cast<Index>(others.size());
  if (truncation < needed)
    throw ValidationError("boundedize needs truncation >= " + std::to_string(needed));
  const Index n = truncation;
  auto lift = [&](Index k) {
    Vector x = Vector::Zero(n);
    x.head(n0) = frame.vector(k);
    return x;
  };
  std::vector<Vector> out;
  std::vector<Index> fresh;
  for (Index k : basis) out.push_back(lift(k));
  for (Index i = n0; i < n; ++i) out.push_back(Vector::Unit(n, i));
  for (std::size_t t = 0; t < others.size(); ++t) {
    const Index nk = n0 + static_cast<Index>(t);
    const Vector x = lift(others[t]);
    out.push_back(x + Vector::Unit(n, nk));
    out.push_back(x - Vector::Unit(n, nk));
    fresh.push_back(nk);
  }
  return {Frame::from_vectors(frame.field(), out), n0, std::move(fresh)};
}

// i.i.d. standard Gaussian frame.
inline Frame random_frame(Index m, Index n, Field field, std::uint64_t seed) {
  if (m < 1 || n < 1) throw ValidationError("random_frame needs m, n >= 1");
  Rng rng(seed);
  return Frame(field, gaussian_matrix(m, n, field, rng));
}

}  // namespace qframe

#endif  // QFRAME_CONSTRUCT_HPP_
