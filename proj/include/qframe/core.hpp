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

#ifndef QFRAME_CORE_HPP_
#define QFRAME_CORE_HPP_

// Scalar-field-generic vectors, frames and Hermitian operators.
//
// Every vector and operator is stored with complex entries; a real object is
// one whose imaginary parts are exactly zero and whose Field tag is Real. The
// tag travels with the data, so one code path serves both fields.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qframe {

using Index = Eigen::Index;
using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// errors

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error("dimension", w) {}
};
struct FieldError : Error {
  explicit FieldError(const std::string& w) : Error("field", w) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& w) : Error("validation", w) {}
};
struct RankError : Error {
  explicit RankError(const std::string& w) : Error("rank", w) {}
};
struct NumericalError : Error {
  explicit NumericalError(const std::string& w) : Error("numerical", w) {}
};

// ---------------------------------------------------------------------------
// scalar field

enum class Field { Real, Complex };

inline const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

inline Field field_from_string(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw ValidationError("unknown field '" + s + "'");
}

namespace detail {

inline bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

inline bool all_finite(const RealVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

inline bool has_imaginary_part(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return true;
  return false;
}

// Drops imaginary parts for real-field results of complex arithmetic.
inline Matrix realify(const Matrix& m) { return m.real().cast<Scalar>(); }

}  // namespace detail

// ---------------------------------------------------------------------------
// numerical rank

struct RankInfo {
  Index rank = 0;
  double tolerance = 0.0;
  // Smallest singular value counted in the rank, 0 when rank == 0.
  double smallest_kept = 0.0;
  double largest = 0.0;
  RealVector singular_values;
};

// rank = #{sigma > max(rows, cols) * eps * sigma_max}
inline double rank_tolerance(Index rows, Index cols, double sigma_max) {
  return static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() *
         sigma_max;
}

inline RankInfo rank_from_singular_values(const RealVector& sv, Index rows, Index cols) {
  RankInfo info;
  info.singular_values = sv;
  info.largest = sv.size() > 0 ? sv(0) : 0.0;
  info.tolerance = rank_tolerance(rows, cols, info.largest);
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > info.tolerance) {
      ++info.rank;
      info.smallest_kept = sv(i);
    }
  }
  return info;
}

inline RankInfo numerical_rank(const RealMatrix& a) {
  if (a.size() == 0) return rank_from_singular_values(RealVector(), a.rows(), a.cols());
  Eigen::JacobiSVD<RealMatrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), a.rows(), a.cols());
}

inline RankInfo numerical_rank(const Matrix& a) {
  if (a.size() == 0) return rank_from_singular_values(RealVector(), a.rows(), a.cols());
  Eigen::JacobiSVD<Matrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), a.rows(), a.cols());
}

// Minimum-norm least-squares solution of a x = b, truncating singular values
// with the same tolerance rule as numerical_rank.
inline RealVector min_norm_solve(const RealMatrix& a, const RealVector& b) {
  if (a.rows() != b.size()) throw DimensionError("min_norm_solve: row count mismatch");
  if (a.size() == 0) return RealVector::Zero(a.cols());
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double tol = rank_tolerance(a.rows(), a.cols(), sv(0));
  RealVector coeff = svd.matrixU().transpose() * b;
  for (Index i = 0; i < sv.size(); ++i) coeff(i) = sv(i) > tol ? coeff(i) / sv(i) : 0.0;
  return svd.matrixV() * coeff;
}

// ---------------------------------------------------------------------------
// frames

// Ordered family of m vectors in an n-dimensional real or complex space.
// Row k of vectors() is x_k.
class Frame {
 public:
  Frame(Field field, Matrix vectors) : field_(field), vectors_(std::move(vectors)) {
    if (vectors_.rows() < 1) throw ValidationError("frame must contain at least one vector");
    if (vectors_.cols() < 1) throw ValidationError("frame dimension must be at least 1");
    if (!detail::all_finite(vectors_)) throw ValidationError("frame entries must be finite");
    if (field_ == Field::Real && detail::has_imaginary_part(vectors_))
      throw FieldError("real frame has entries with nonzero imaginary part");
  }

  static Frame real(const RealMatrix& rows) { return Frame(Field::Real, rows.cast<Scalar>()); }

  static Frame from_vectors(Field field, const std::vector<Vector>& vs) {
    if (vs.empty()) throw ValidationError("frame must contain at least one vector");
    Matrix m(static_cast<Index>(vs.size()), vs.front().size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k].size() != m.cols()) throw DimensionError("frame vectors have different lengths");
      m.row(static_cast<Index>(k)) = vs[k].transpose();
    }
    return Frame(field, std::move(m));
  }

  Field field() const noexcept { return field_; }
  Index dim() const noexcept { return vectors_.cols(); }
  Index size() const noexcept { return vectors_.rows(); }
  const Matrix& vectors() const noexcept { return vectors_; }
  Vector vector(Index k) const { return vectors_.row(k).transpose(); }

  // The same vectors regarded as a family in C^n.
  Frame as_complex() const { return Frame(Field::Complex, vectors_); }

  // Image {F x_k} under a linear map F.
  Frame transformed(const Matrix& f) const {
    if (f.cols() != dim()) throw DimensionError("transform column count must equal frame dimension");
    Matrix out = vectors_ * f.transpose();
    if (field_ == Field::Real) {
      if (detail::has_imaginary_part(f)) throw FieldError("complex transform applied to real frame");
      out = detail::realify(out);
    }
    return Frame(field_, std::move(out));
  }

  Frame without(Index k) const {
    if (size() < 2) throw ValidationError("cannot remove the only vector of a frame");
    Matrix out(size() - 1, dim());
    out << vectors_.topRows(k), vectors_.bottomRows(size() - k - 1);
    return Frame(field_, std::move(out));
  }

  Frame appended(const Frame& other) const {
    if (other.dim() != dim() || other.field() != field_)
      throw DimensionError("appended frame must share field and dimension");
    Matrix out(size() + other.size(), dim());
    out << vectors_, other.vectors_;
    return Frame(field_, std::move(out));
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.field_ == b.field_ && a.vectors_.rows() == b.vectors_.rows() &&
           a.vectors_.cols() == b.vectors_.cols() && a.vectors_ == b.vectors_;
  }

 private:
  Field field_;
  Matrix vectors_;
};

// ---------------------------------------------------------------------------
// self-adjoint operators

enum class Strictness { Symmetrize, Strict };

class SelfAdjointOperator {
 public:
  // Square input is replaced by (M + M*) / 2. Under Strict, an asymmetry
  // larger than 1e-12 (1 + |M|_F) is rejected instead.
  SelfAdjointOperator(Field field, const Matrix& m, Strictness strictness = Strictness::Symmetrize)
      : field_(field) {
    if (m.rows() != m.cols()) throw DimensionError("operator matrix must be square");
    if (m.rows() < 1) throw DimensionError("operator dimension must be at least 1");
    if (!detail::all_finite(m)) throw ValidationError("operator entries must be finite");
    if (field == Field::Real && detail::has_imaginary_part(m)) {
      if (strictness == Strictness::Strict)
        throw FieldError("real operator has entries with nonzero imaginary part");
    }
    if (strictness == Strictness::Strict) {
      const double asym = (m - m.adjoint()).norm();
      if (asym > 1e-12 * (1.0 + m.norm())) throw ValidationError("operator is not self-adjoint");
    }
    Matrix sym = (m + m.adjoint()) * 0.5;
    if (field == Field::Real) sym = detail::realify(sym);
    for (Index i = 0; i < sym.rows(); ++i) sym(i, i) = Scalar(sym(i, i).real(), 0.0);
    entries_ = std::move(sym);
  }

  static SelfAdjointOperator real(const RealMatrix& m,
                                  Strictness strictness = Strictness::Symmetrize) {
    return SelfAdjointOperator(Field::Real, m.cast<Scalar>(), strictness);
  }

  static SelfAdjointOperator zero(Field field, Index n) {
    return SelfAdjointOperator(field, Matrix::Zero(n, n));
  }

  static SelfAdjointOperator identity(Field field, Index n) {
    return SelfAdjointOperator(field, Matrix::Identity(n, n));
  }

  Field field() const noexcept { return field_; }
  Index dim() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  Scalar operator()(Index i, Index j) const { return entries_(i, j); }

  double trace() const { return entries_.trace().real(); }
  double frobenius_norm() const { return entries_.norm(); }

  // Ascending eigenvalues.
  RealVector eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

 private:
  Field field_;
  Matrix entries_;
};

// Real-valued observation a_k, one per frame vector.
class MeasurementRecord {
 public:
  MeasurementRecord() = default;
  explicit MeasurementRecord(RealVector values) : values_(std::move(values)) {
    if (!detail::all_finite(values_)) throw ValidationError("measurements must be finite");
  }

  Index size() const noexcept { return values_.size(); }
  const RealVector& values() const noexcept { return values_; }
  double operator[](Index k) const { return values_(k); }

 private:
  RealVector values_;
};

// ---------------------------------------------------------------------------
// operations

// <T x, x> = sum_ij conj(x_i) T_ij x_j.
inline double quadratic_form(const SelfAdjointOperator& t, const Vector& x) {
  if (x.size() != t.dim()) throw DimensionError("quadratic_form: vector length != operator dimension");
  const Scalar value = x.dot(t.entries() * x);  // conjugates the first argument
  if (std::abs(value.imag()) > 1e-10 * (1.0 + std::abs(value)))
    throw NumericalError("quadratic_form: imaginary part too large for a Hermitian operator");
  return value.real();
}

// <T x_k, x_k> for every frame vector.
inline RealVector measure(const SelfAdjointOperator& t, const Frame& frame) {
  if (frame.dim() != t.dim()) throw DimensionError("measure: frame and operator dimensions differ");
  RealVector out(frame.size());
  for (Index k = 0; k < frame.size(); ++k) out(k) = quadratic_form(t, frame.vector(k));
  return out;
}

struct SpanCheck {
  bool spans = false;
  Index rank = 0;
};

inline SpanCheck frame_span_check(const Frame& frame) {
  const RankInfo r = numerical_rank(frame.vectors());
  return {r.rank == frame.dim(), r.rank};
}

}  // namespace qframe

#endif  // QFRAME_CORE_HPP_
