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

#include <qframe/frame_ops.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace qframe;

TEST(frame_ops, frame_operator_is_sum_of_outer_products) {
  std::mt19937_64 g(1);
  const Matrix x = oracle::random_matrix(6, 3, true, g);
  Matrix s = Matrix::Zero(3, 3);
  for (Index k = 0; k < 6; ++k) s += x.row(k).transpose() * x.row(k).conjugate();
  EXPECT_LT((frame_operator(Frame(Field::Complex, x)).entries() - s).norm(), 1e-12);
}

TEST(frame_ops, bounds_two_vector_example) {
  // S = [[2, 1], [1, 1]], eigenvalues (3 -+ sqrt 5) / 2
  RealMatrix rows(2, 2);
  rows << 1, 0, 1, 1;
  const FrameBounds b = frame_bounds(Frame::real(rows));
  EXPECT_NEAR(b.lower, (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(b.upper, (3.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(b.lower, 0.381966, 1e-6);
}

TEST(frame_ops, bounds_sum_pairs_two) {
  RealMatrix rows(3, 2);
  rows << 1, 0, 0, 1, 1, 1;
  const FrameBounds b = frame_bounds(Frame::real(rows));
  EXPECT_NEAR(b.lower, 1.0, 1e-12);
  EXPECT_NEAR(b.upper, 3.0, 1e-12);
}

TEST(frame_ops, canonical_parseval_is_parseval) {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 20; ++trial) {
    const bool complex = trial % 2;
    const Frame f(complex ? Field::Complex : Field::Real, oracle::random_matrix(7, 4, complex, g));
    const Frame p = canonical_parseval(f);
    const FrameBounds b = frame_bounds(p);
    EXPECT_NEAR(b.lower, 1.0, 1e-10);
    EXPECT_NEAR(b.upper, 1.0, 1e-10);
    EXPECT_EQ(p.field(), f.field());
  }
}

TEST(frame_ops, inverse_sqrt_rejects_singular) {
  RealMatrix rows(2, 2);
  rows << 1, 0, 2, 0;
  EXPECT_THROW(canonical_parseval(Frame::real(rows)), RankError);
}

TEST(frame_ops, inverse_sqrt_squares_to_inverse) {
  std::mt19937_64 g(3);
  const Frame f(Field::Complex, oracle::random_matrix(5, 3, true, g));
  const SelfAdjointOperator s = frame_operator(f);
  const Matrix r = inverse_sqrt(s);
  EXPECT_LT((r * s.entries() * r - Matrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(frame_ops, bessel_and_riesz_bounds) {
  std::mt19937_64 g(4);
  const Frame f(Field::Real, oracle::random_matrix(3, 5, false, g));
  const Eigen::JacobiSVD<RealMatrix> svd(f.vectors().real());
  EXPECT_NEAR(bessel_bound(f), std::pow(svd.singularValues()(0), 2), 1e-10);
  EXPECT_NEAR(lower_riesz_bound(f), std::pow(svd.singularValues()(2), 2), 1e-10);
  EXPECT_NEAR(bessel_bound(f), frame_bounds(f).upper, 1e-10);
  EXPECT_EQ(lower_riesz_bound(Frame::real(RealMatrix::Ones(3, 2))), 0.0);
  EXPECT_NEAR(lower_riesz_bound(Frame::real(RealMatrix::Identity(3, 3))), 1.0, 1e-15);
}

TEST(frame_ops, distance) {
  const Frame a = Frame::real(RealMatrix::Identity(2, 2));
  const Frame b = Frame::real(2.0 * RealMatrix::Identity(2, 2));
  EXPECT_DOUBLE_EQ(frame_distance_squared(a, b), 2.0);
  EXPECT_THROW(frame_distance_squared(a, Frame::real(RealMatrix::Identity(3, 3))), DimensionError);
}
