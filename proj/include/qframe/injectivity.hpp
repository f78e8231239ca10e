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

#ifndef QFRAME_INJECTIVITY_HPP_
#define QFRAME_INJECTIVITY_HPP_

// Injectivity certification. A frame determines every Hermitian operator
// from the values <T x_k, x_k> exactly when its embedded vectors x~_k span
// R^D; the decision is a numerical rank of the tilde matrix.

#include <qframe/core.hpp>
#include <qframe/random.hpp>
#include <qframe/tilde.hpp>

#include <optional>
#include <vector>

namespace qframe {

struct InjectivityReport {
  TildeVariant variant;
  Index m = 0;
  Index embed_dim = 0;
  Index rank = 0;
  bool injective = false;
  double smallest_kept = 0.0;  // margin: smallest retained singular value
  double smallest_singular = 0.0;
  double tolerance = 0.0;
};

inline InjectivityReport check_injectivity(const Frame& frame, TildeVariant v) {
  const TildeMatrix a = tilde_matrix(frame, v);
  const RankInfo r = numerical_rank(a.rows);
  InjectivityReport rep;
  rep.variant = v;
  rep.m = frame.size();
  rep.embed_dim = a.rows.cols();
  rep.rank = r.rank;
  rep.injective = r.rank == rep.embed_dim;
  rep.smallest_kept = r.smallest_kept;
  rep.smallest_singular =
      rep.m >= rep.embed_dim ? r.singular_values(r.singular_values.size() - 1) : 0.0;
  rep.tolerance = r.tolerance;
  return rep;
}

inline InjectivityReport check_injectivity(const Frame& frame) {
  return check_injectivity(frame, full_variant(frame.field()));
}

// A nonzero Hermitian T, |T|_F = 1, with <T x_k, x_k> ~ 0 for every k,
// built from the right singular vector of the smallest singular value of the
// tilde matrix. Empty when the frame is injective.
inline std::optional<SelfAdjointOperator> witness_operator(const Frame& frame, TildeVariant v) {
  const TildeMatrix a = tilde_matrix(frame, v);
  const Index d = a.rows.cols();
  Eigen::JacobiSVD<RealMatrix> svd(a.rows, Eigen::ComputeFullV);
  const RankInfo r = rank_from_singular_values(svd.singularValues(), a.rows.rows(), d);
  if (r.rank == d) return std::nullopt;
  const RealVector null_dir = svd.matrixV().col(d - 1);
  const SelfAdjointOperator t = operator_from_dual(null_dir, v, frame.dim());
  return SelfAdjointOperator(t.field(), t.entries() / t.frobenius_norm());
}

inline std::optional<SelfAdjointOperator> witness_operator(const Frame& frame) {
  return witness_operator(frame, full_variant(frame.field()));
}

// Whether the measurements determine the compression P T P of every
// Hermitian T to the leading coordinates 1..n0: the span of the x~_k must
// contain every embedding coordinate that reads only entries (i, j) with
// i, j < n0. With n0 = n this is ordinary injectivity.
struct LeadingBlockReport {
  Index leading_dim = 0;
  Index rank = 0;
  Index augmented_rank = 0;
  bool determined = false;
};

inline LeadingBlockReport leading_block_check(const Frame& frame, Index n0, TildeVariant v) {
  if (n0 < 1 || n0 > frame.dim()) throw DimensionError("leading block size out of range");
  if (is_trace_one(v)) throw ValidationError("leading_block_check takes a full variant");
  const TildeMatrix a = tilde_matrix(frame, v);
  const auto slots = tilde_slots(v, frame.dim());
  std::vector<Index> lead;
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].i < n0 && slots[s].j < n0) lead.push_back(static_cast<Index>(s));
  RealMatrix aug(a.rows.rows() + static_cast<Index>(lead.size()), a.rows.cols());
  aug.topRows(a.rows.rows()) = a.rows;
  aug.bottomRows(static_cast<Index>(lead.size())).setZero();
  for (std::size_t t = 0; t < lead.size(); ++t)
    aug(a.rows.rows() + static_cast<Index>(t), lead[t]) = 1.0;
  LeadingBlockReport rep;
  rep.leading_dim = n0;
  rep.rank = numerical_rank(a.rows).rank;
  rep.augmented_rank = numerical_rank(aug).rank;
  rep.determined = rep.rank == rep.augmented_rank;
  return rep;
}

struct EigenbasisProbeResult {
  bool passed = true;  // no counterexample basis found
  Index trials_run = 0;
  std::optional<Matrix> failing_basis;  // columns e_1..e_n
  Index failing_rank = 0;
};

// Necessary-condition probe: for Haar-random orthonormal bases {e_j}, the
// m x n matrix |<x_k, e_j>|^2 must have rank n. A failing basis certifies
// non-injectivity (T e_j = lambda_j e_j with lambda orthogonal to the rows).
inline EigenbasisProbeResult eigenbasis_probe(const Frame& frame, Index trials,
                                              std::uint64_t seed) {
  if (trials < 1) throw ValidationError("eigenbasis_probe needs at least one trial");
  EigenbasisProbeResult result;
  const Index n = frame.dim();
  for (Index t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Matrix basis = haar_unitary(n, frame.field(), rng);
    // <x_k, e_j> = sum_i x_ki conj(e_ij)
    const Matrix inner = frame.vectors() * basis.conjugate();
    const RealMatrix moduli = inner.cwiseAbs2();
    const RankInfo r = numerical_rank(moduli);
    ++result.trials_run;
    if (r.rank < n) {
      result.passed = false;
      result.failing_basis = basis;
      result.failing_rank = r.rank;
      break;
    }
  }
  return result;
}

}  // namespace qframe

#endif  // QFRAME_INJECTIVITY_HPP_
