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

#ifndef QFRAME_SEPARATION_HPP_
#define QFRAME_SEPARATION_HPP_

// Truncated l2 layer. Everything here works on the first N coordinates of
// an infinite family; reports carry N and say nothing about the limit.

#include <qframe/core.hpp>
#include <qframe/estimate.hpp>
#include <qframe/frame_ops.hpp>
#include <qframe/tilde.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace qframe {

// Family given as rows v_1..v_m of a real matrix.
struct SeparationReport {
  Index truncation = 0;  // ambient dimension of the rows
  std::vector<double> gaps;  // g_j = |(I - P_j) v_j|
  std::vector<double> dual_norms;  // 1 / g_j, +inf when g_j == 0
  double delta = 0.0;
  bool separated = false;
};

namespace detail {

// (I - P_j) v_j, P_j the orthogonal projection onto span{v_i : i != j}.
inline RealVector separation_residual(const RealMatrix& rows, Index j) {
  const Index m = rows.rows();
  const Index n = rows.cols();
  RealVector v = rows.row(j).transpose();
  if (m == 1) return v;
  RealMatrix others(n, m - 1);
  for (Index i = 0, c = 0; i < m; ++i)
    if (i != j) others.col(c++) = rows.row(i).transpose();
  Eigen::ColPivHouseholderQR<RealMatrix> qr(others);
  qr.setThreshold(static_cast<double>(std::max(n, m)) * std::numeric_limits<double>::epsilon());
  const Index r = qr.rank();
  if (r == 0) return v;
  const RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, r);
  // Classical Gram-Schmidt against q, twice.
  for (int pass = 0; pass < 2; ++pass) v -= q * (q.transpose() * v);
  return v;
}

}  // namespace detail

inline SeparationReport separation_report(const RealMatrix& rows) {
  if (rows.rows() < 1 || rows.cols() < 1) throw DimensionError("separation needs a nonempty family");
  SeparationReport rep;
  rep.truncation = rows.cols();
  const double scale = rows.rowwise().norm().maxCoeff();
  rep.delta = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < rows.rows(); ++j) {
    const double g = detail::separation_residual(rows, j).norm();
    rep.gaps.push_back(g);
    rep.dual_norms.push_back(g > 0.0 ? 1.0 / g : std::numeric_limits<double>::infinity());
    rep.delta = std::min(rep.delta, g);
  }
  rep.separated = scale > 0.0 && rep.delta > 1e-10 * scale;
  return rep;
}

// Biorthogonal functionals y_j = (I - P_j) v_j / |(I - P_j) v_j|^2, as rows.
inline RealMatrix dual_functionals(const RealMatrix& rows) {
  const double scale = rows.rowwise().norm().maxCoeff();
  RealMatrix duals(rows.rows(), rows.cols());
  for (Index j = 0; j < rows.rows(); ++j) {
    const RealVector r = detail::separation_residual(rows, j);
    const double g2 = r.squaredNorm();
    if (!(scale > 0.0) || std::sqrt(g2) <= 1e-10 * scale)
      throw RankError("family is not separated at index " + std::to_string(j + 1));
    duals.row(j) = (r / g2).transpose();
  }
  return duals;
}

// T~ = sum_k a_k y_k over the duals of the tilde family, read back as an
// operator. Matches every measurement when the tilde family is separated.
inline EstimationResult l1_estimate(const Frame& frame, const MeasurementRecord& a) {
  if (a.size() != frame.size()) throw DimensionError("measurement record length != frame size");
  const TildeVariant v = full_variant(frame.field());
  const TildeMatrix tm = tilde_matrix(frame, v);
  const RealMatrix duals = dual_functionals(tm.rows);
  const RealVector t = duals.transpose() * a.values();
  SelfAdjointOperator op = operator_from_dual(t, v, frame.dim());
  const SolvabilityReport sol = solvability(frame, a, v);
  return detail::finish(frame, a, std::move(op), EstimationMode::Exact, sol, 1e-8);
}

struct DefectProbe {
  bool found = false;
  Index index = 0;  // 1-based m of the block-1 slot (1, m)
  double sum = 0.0;  // sum_k <e~_{1m}, x~_k>^2 at that m
  std::vector<double> sums;  // for m = 2..N
};

// Searches m = 2, 3, ... for sum_k Re(conj(x_k1) x_km)^2 < 2 epsilon: the
// tilde family is nearly orthogonal to the unit tilde vector e~_{1m}.
inline DefectProbe lower_frame_defect_probe(const Frame& frame, double epsilon) {
  if (frame.dim() < 2) throw DimensionError("defect probe needs truncation N >= 2");
  DefectProbe probe;
  const Matrix& x = frame.vectors();
  for (Index m = 1; m < frame.dim(); ++m) {
    double s = 0.0;
    for (Index k = 0; k < frame.size(); ++k) {
      const double c = (std::conj(x(k, 0)) * x(k, m)).real();
      s += c * c;
    }
    probe.sums.push_back(s);
    if (!probe.found && s < 2.0 * epsilon) {
      probe.found = true;
      probe.index = m + 1;
      probe.sum = s;
    }
  }
  return probe;
}

struct TildeBesselReport {
  double bessel_bound = 0.0;  // B of {x_k}
  double tilde_bound = 0.0;   // Bessel bound of {x~_k}
  double cap = 0.0;           // B (real) or 2B (complex)
  bool holds = false;         // tilde_bound <= cap + 1e-10
};

inline TildeBesselReport tilde_bessel_check(const Frame& frame) {
  for (Index k = 0; k < frame.size(); ++k)
    if (frame.vector(k).norm() > 1.0 + 1e-12)
      throw ValidationError("tilde_bessel_check needs |x_k| <= 1; vector " +
                            std::to_string(k + 1) + " is longer");
  TildeBesselReport rep;
  rep.bessel_bound = bessel_bound(frame);
  rep.tilde_bound = bessel_bound(tilde_matrix(frame, full_variant(frame.field())).rows);
  rep.cap = (frame.field() == Field::Real ? 1.0 : 2.0) * rep.bessel_bound;
  rep.holds = rep.tilde_bound <= rep.cap + 1e-10;
  return rep;
}

}  // namespace qframe

#endif  // QFRAME_SEPARATION_HPP_
