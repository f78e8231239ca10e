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

#include <qframe/separation.hpp>

#include <gtest/gtest.h>

#include <qframe/construct.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"

using namespace qframe;

TEST(separation, orthonormal_gaps_are_one) {
  const SeparationReport r = separation_report(RealMatrix::Identity(4, 4));
  EXPECT_TRUE(r.separated);
  EXPECT_EQ(r.truncation, 4);
  for (double g : r.gaps) EXPECT_NEAR(g, 1.0, 1e-15);
  EXPECT_NEAR(r.delta, 1.0, 1e-15);
  EXPECT_EQ(dual_functionals(RealMatrix::Identity(4, 4)), RealMatrix::Identity(4, 4));
}

TEST(separation, repeated_vector_not_separated) {
  RealMatrix rows(3, 3);
  rows << 1, 0, 0, 0, 1, 0, 1, 0, 0;
  const SeparationReport r = separation_report(rows);
  EXPECT_FALSE(r.separated);
  EXPECT_NEAR(r.delta, 0.0, 1e-15);
  EXPECT_THROW(dual_functionals(rows), RankError);
}

TEST(separation, first_coordinate_family) {
  // {e_1 + e_{i+1}}: every gap is at least 1
  const Index n = 8;
  RealMatrix rows = RealMatrix::Zero(n - 1, n);
  for (Index i = 0; i + 1 < n; ++i) {
    rows(i, 0) = 1.0;
    rows(i, i + 1) = 1.0;
  }
  const SeparationReport r = separation_report(rows);
  EXPECT_TRUE(r.separated);
  EXPECT_GE(r.delta, 1.0 - 1e-12);
}

TEST(separation, duals_match_pseudoinverse) {
  std::mt19937_64 g(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Index m = 3 + trial % 5;
    const RealMatrix v = oracle::random_matrix(m, m + trial % 3, false, g).real();
    const RealMatrix y = dual_functionals(v);
    // rows of pinv(V)^T are the biorthogonal functionals inside span(V)
    EXPECT_LT((y - oracle::pinv(v).transpose()).norm(), 1e-9);
    const RealMatrix gram = y * v.transpose();
    EXPECT_LT((gram - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-8);
    const SeparationReport r = separation_report(v);
    for (Index j = 0; j < m; ++j) EXPECT_NEAR(y.row(j).norm(), r.dual_norms[j], 1e-9 * r.dual_norms[j]);
  }
}

TEST(separation, shift_frame_duals) {
  for (Index n = 3; n <= 10; ++n) {
    const RealMatrix rows = tilde_matrix(shift_frame(n), TildeVariant::RealFull).rows;
    const SeparationReport r = separation_report(rows);
    EXPECT_TRUE(r.separated) << n;
    const RealMatrix y = dual_functionals(rows);
    const RealMatrix gram = y * rows.transpose();
    EXPECT_LT((gram - RealMatrix::Identity(rows.rows(), rows.rows())).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(separation, l1_estimate_examples) {
  const Frame f = shift_frame(4);
  RealVector a = RealVector::Zero(f.size());
  const EstimationResult zero = l1_estimate(f, MeasurementRecord(a));
  EXPECT_LT(zero.op.frobenius_norm(), 1e-15);

  a(0) = 1.0;
  const EstimationResult one = l1_estimate(f, MeasurementRecord(a));
  EXPECT_LT((measure(one.op, f) - a).cwiseAbs().maxCoeff(), 1e-8);

  for (Index k = 0; k < a.size(); ++k) a(k) = std::ldexp(1.0, -static_cast<int>(k));
  const EstimationResult geo = l1_estimate(f, MeasurementRecord(a));
  EXPECT_LT((measure(geo.op, f) - a).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_TRUE(geo.solvable);

  EXPECT_THROW(l1_estimate(Frame::real(RealMatrix::Ones(2, 2)), MeasurementRecord(RealVector::Ones(2))),
               RankError);
}

TEST(separation, l1_estimate_complex) {
  std::mt19937_64 g(32);
  const Frame f = shift_frame(5, Field::Complex);
  for (int trial = 0; trial < 10; ++trial) {
    const RealVector a = oracle::random_matrix(f.size(), 1, false, g).real();
    const EstimationResult r = l1_estimate(f, MeasurementRecord(a));
    EXPECT_LT((measure(r.op, f) - a).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(separation, defect_probe) {
  const DefectProbe basis = lower_frame_defect_probe(Frame::real(RealMatrix::Identity(5, 5)), 1e-3);
  EXPECT_TRUE(basis.found);
  EXPECT_EQ(basis.index, 2);
  EXPECT_EQ(basis.sum, 0.0);

  const DefectProbe shift = lower_frame_defect_probe(shift_frame(8), 1e-6);
  ASSERT_EQ(shift.sums.size(), 7u);
  for (std::size_t m = 1; m < shift.sums.size(); ++m) EXPECT_LT(shift.sums[m], shift.sums[m - 1]);
  // slot (1, m) only sees a_{m-1} (e_1 + e_m): sum = a_{m-1}^4 = 16^{-(m-1)}
  EXPECT_NEAR(shift.sums[0], 1.0 / 16.0, 1e-15);
  EXPECT_TRUE(shift.found);
  EXPECT_EQ(shift.index, 6);  // 16^{-5} < 2e-6 <= 16^{-4}

  const DefectProbe any = lower_frame_defect_probe(shift_frame(4), std::numeric_limits<double>::infinity());
  EXPECT_EQ(any.index, 2);
  EXPECT_FALSE(lower_frame_defect_probe(shift_frame(3), 1e-12).found);
}

TEST(separation, tilde_bessel) {
  const TildeBesselReport id = tilde_bessel_check(Frame::real(RealMatrix::Identity(4, 4)));
  EXPECT_NEAR(id.tilde_bound, 1.0, 1e-12);
  EXPECT_NEAR(id.cap, 1.0, 1e-12);
  EXPECT_TRUE(id.holds);

  std::mt19937_64 g(33);
  for (int trial = 0; trial < 40; ++trial) {
    const bool complex = trial % 2;
    Matrix x = oracle::random_matrix(10, 6, complex, g);
    x = x.rowwise().normalized();
    const TildeBesselReport r = tilde_bessel_check(Frame(complex ? Field::Complex : Field::Real, x));
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.tilde_bound, r.cap + 1e-10);
  }
  EXPECT_THROW(tilde_bessel_check(Frame::real(2.0 * RealMatrix::Identity(2, 2))), ValidationError);
}
