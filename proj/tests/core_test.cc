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

#include <qframe/core.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"

using namespace qframe;

TEST(core, frame_rejects_bad_input) {
  EXPECT_THROW(Frame(Field::Real, Matrix(0, 2)), ValidationError);
  EXPECT_THROW(Frame(Field::Real, Matrix(2, 0)), ValidationError);
  Matrix nan = Matrix::Zero(2, 2);
  nan(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Frame(Field::Real, nan), ValidationError);
  Matrix imag = Matrix::Identity(2, 2);
  imag(1, 0) = Scalar(0.0, 1.0);
  EXPECT_THROW(Frame(Field::Real, imag), FieldError);
  EXPECT_NO_THROW(Frame(Field::Complex, imag));
}

TEST(core, frame_accessors) {
  RealMatrix rows(3, 2);
  rows << 1, 0, 0, 1, 1, 1;
  const Frame f = Frame::real(rows);
  EXPECT_EQ(f.size(), 3);
  EXPECT_EQ(f.dim(), 2);
  EXPECT_EQ(f.vector(2), Vector::Ones(2));
  EXPECT_EQ(f.without(0).vector(0), Vector::Unit(2, 1));
  EXPECT_EQ(f.without(2).size(), 2);
  EXPECT_EQ(f.appended(f).size(), 6);
  EXPECT_THROW(f.appended(f.as_complex()), DimensionError);
  EXPECT_EQ(f.as_complex().field(), Field::Complex);
  EXPECT_EQ(Frame::from_vectors(Field::Real, {Vector::Unit(2, 0), Vector::Unit(2, 1), Vector::Ones(2)}),
            f);
}

TEST(core, transformed_applies_map_to_each_vector) {
  std::mt19937_64 g(1);
  const Frame f(Field::Complex, oracle::random_matrix(5, 3, true, g));
  const Matrix t = oracle::random_matrix(3, 3, true, g);
  const Frame h = f.transformed(t);
  for (Index k = 0; k < f.size(); ++k) EXPECT_LT((h.vector(k) - t * f.vector(k)).norm(), 1e-12);
  const Frame real = Frame::real(RealMatrix::Identity(2, 2));
  EXPECT_THROW(real.transformed(Matrix::Identity(2, 2) * Scalar(0.0, 1.0)), FieldError);
  EXPECT_THROW(f.transformed(Matrix::Identity(2, 2)), DimensionError);
}

TEST(core, operator_symmetrizes_and_strict_rejects) {
  Matrix m(2, 2);
  m << 1, 2, 0, 3;
  const SelfAdjointOperator t(Field::Real, m);
  EXPECT_EQ(t(0, 1), Scalar(1.0));
  EXPECT_EQ(t(1, 0), Scalar(1.0));
  EXPECT_THROW(SelfAdjointOperator(Field::Real, m, Strictness::Strict), ValidationError);
  EXPECT_THROW(SelfAdjointOperator(Field::Real, Matrix(2, 3)), DimensionError);
  Matrix c(2, 2);
  c << 1, Scalar(0, 1), Scalar(0, -1), 2;
  EXPECT_NO_THROW(SelfAdjointOperator(Field::Complex, c, Strictness::Strict));
  EXPECT_THROW(SelfAdjointOperator(Field::Real, c, Strictness::Strict), FieldError);
  EXPECT_DOUBLE_EQ(SelfAdjointOperator(Field::Complex, c).trace(), 3.0);
}

TEST(core, eigenvalues_ascending) {
  RealMatrix m(2, 2);
  m << 2, 1, 1, 1;
  const RealVector ev = SelfAdjointOperator::real(m).eigenvalues();
  // roots of l^2 - 3 l + 1
  EXPECT_NEAR(ev(0), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(ev(1), (3.0 + std::sqrt(5.0)) / 2.0, 1e-12);
}

TEST(core, quadratic_form_matches_double_loop) {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + trial % 6;
    const bool complex = trial % 2 == 1;
    const Field field = complex ? Field::Complex : Field::Real;
    const Matrix h = oracle::random_hermitian(n, complex, g);
    const Vector x = oracle::random_matrix(n, 1, complex, g);
    const Scalar expect = oracle::quadratic_form(h, x);
    EXPECT_NEAR(expect.imag(), 0.0, 1e-12);
    EXPECT_NEAR(quadratic_form(SelfAdjointOperator(field, h), x), expect.real(),
                1e-12 * (1.0 + std::abs(expect)));
  }
  EXPECT_THROW(quadratic_form(SelfAdjointOperator::identity(Field::Real, 2), Vector::Ones(3)),
               DimensionError);
}

TEST(core, measure_pauli_y) {
  Matrix y(2, 2);
  y << 0, Scalar(0, -1), Scalar(0, 1), 0;
  const SelfAdjointOperator t(Field::Complex, y);
  Vector x(2);
  x << 1, Scalar(0, 1);
  // conj(1) (-i) i + conj(i) i 1 = 1 + 1
  EXPECT_NEAR(quadratic_form(t, x), 2.0, 1e-15);
}

TEST(core, numerical_rank_examples) {
  RealMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_EQ(numerical_rank(a).rank, 2);
  EXPECT_EQ(numerical_rank(RealMatrix(RealMatrix::Identity(4, 4))).rank, 4);
  EXPECT_EQ(numerical_rank(RealMatrix(RealMatrix::Zero(3, 2))).rank, 0);
  RealMatrix tiny = RealMatrix::Identity(2, 2);
  tiny(1, 1) = 1e-17;
  const RankInfo r = numerical_rank(tiny);
  EXPECT_EQ(r.rank, 1);
  EXPECT_DOUBLE_EQ(r.smallest_kept, 1.0);
  EXPECT_NEAR(r.tolerance, 2.0 * std::numeric_limits<double>::epsilon(), 1e-30);
}

TEST(core, min_norm_solve_matches_pseudoinverse) {
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix a = oracle::random_matrix(6, 4, false, g).real();
    if (trial % 2) a.col(3) = a.col(0) + a.col(1);  // rank deficient
    const RealVector b = oracle::random_matrix(6, 1, false, g).real();
    const RealVector x = min_norm_solve(a, b);
    EXPECT_LT((x - oracle::pinv(a) * b).norm(), 1e-10);
  }
}

TEST(core, span_check) {
  RealMatrix rows(2, 3);
  rows << 1, 0, 0, 0, 1, 0;
  EXPECT_FALSE(frame_span_check(Frame::real(rows)).spans);
  EXPECT_EQ(frame_span_check(Frame::real(rows)).rank, 2);
  EXPECT_TRUE(frame_span_check(Frame::real(RealMatrix::Identity(3, 3))).spans);
}

TEST(core, measurement_record_finite) {
  RealVector v(2);
  v << 1, std::numeric_limits<double>::infinity();
  EXPECT_THROW(MeasurementRecord{v}, ValidationError);
  EXPECT_EQ(MeasurementRecord(RealVector::Ones(3)).size(), 3);
}

TEST(core, field_names) {
  EXPECT_EQ(field_from_string("real"), Field::Real);
  EXPECT_EQ(field_from_string("complex"), Field::Complex);
  EXPECT_THROW(field_from_string("quaternion"), ValidationError);
}
