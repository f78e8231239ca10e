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

#ifndef QFRAME_ESTIMATE_HPP_
#define QFRAME_ESTIMATE_HPP_

// State estimation from a measurement record a_k = <T x_k, x_k>.
//
// The unknowns are the operator entries a_ii, Re a_ij, Im a_ij (i < j) in
// tilde slot order, so the system matrix is the tilde matrix with columns
// scaled by entry_weights. Trace-one variants solve for T = I/n + T0 with T0
// trace zero, after subtracting |x_k|^2 / n from each a_k.

#include <qframe/core.hpp>
#include <qframe/random.hpp>
#include <qframe/tilde.hpp>

#include <cmath>
#include <optional>
#include <vector>

namespace qframe {

struct SolvabilityReport {
  Index rank_a = 0;
  Index rank_b = 0;
  bool solvable = false;
};

namespace detail {

struct LinearSystem {
  TildeVariant variant;
  Index n = 0;
  RealMatrix a;    // m x D, unknowns are operator entries
  RealVector rhs;  // m
  RealVector weights;
};

inline LinearSystem build_system(const Frame& frame, const MeasurementRecord& a, TildeVariant v) {
  if (a.size() != frame.size())
    throw DimensionError("measurement record has " + std::to_string(a.size()) +
                         " values for " + std::to_string(frame.size()) + " frame vectors");
  LinearSystem sys{v, frame.dim(), tilde_matrix(frame, v).rows, a.values(),
                   entry_weights(v, frame.dim())};
  sys.a = sys.a * sys.weights.asDiagonal();
  if (is_trace_one(v)) {
    const double inv_n = 1.0 / static_cast<double>(frame.dim());
    for (Index k = 0; k < frame.size(); ++k) sys.rhs(k) -= frame.vector(k).squaredNorm() * inv_n;
  }
  return sys;
}

inline SelfAdjointOperator operator_from_entries(const LinearSystem& sys, const RealVector& t) {
  const SelfAdjointOperator t0 = operator_from_dual(sys.weights.cwiseProduct(t), sys.variant, sys.n);
  if (!is_trace_one(sys.variant)) return t0;
  const double inv_n = 1.0 / static_cast<double>(sys.n);
  return SelfAdjointOperator(t0.field(), t0.entries() + inv_n * Matrix::Identity(sys.n, sys.n));
}

inline SolvabilityReport solvability(const LinearSystem& sys) {
  RealMatrix b(sys.a.rows(), sys.a.cols() + 1);
  b << sys.a, sys.rhs;
  SolvabilityReport rep;
  rep.rank_a = numerical_rank(sys.a).rank;
  rep.rank_b = numerical_rank(b).rank;
  rep.solvable = rep.rank_a == rep.rank_b;
  return rep;
}

}  // namespace detail

// rank A versus rank [A | a].
inline SolvabilityReport solvability(const Frame& frame, const MeasurementRecord& a,
                                     TildeVariant v) {
  return detail::solvability(detail::build_system(frame, a, v));
}

inline SolvabilityReport solvability(const Frame& frame, const MeasurementRecord& a) {
  return solvability(frame, a, full_variant(frame.field()));
}

struct StateValidation {
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool is_psd = false;
  // Every principal minor >= -tol max(1, lambda_max)^|S|; only evaluated
  // for n <= 12.
  std::optional<bool> principal_minors_ok;
};

inline StateValidation validate_state(const SelfAdjointOperator& t, double tol = 1e-10) {
  StateValidation v;
  const RealVector ev = t.eigenvalues();
  v.trace = t.trace();
  v.min_eigenvalue = ev(0);
  v.max_eigenvalue = ev(ev.size() - 1);
  const double scale = std::max(1.0, v.max_eigenvalue);
  v.is_psd = v.min_eigenvalue >= -tol * scale;
  const Index n = t.dim();
  if (n <= 12) {
    bool ok = true;
    for (unsigned mask = 1; mask < (1u << n) && ok; ++mask) {
      std::vector<Index> idx;
      for (Index i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      const Index s = static_cast<Index>(idx.size());
      Matrix sub(s, s);
      for (Index r = 0; r < s; ++r)
        for (Index c = 0; c < s; ++c) sub(r, c) = t(idx[r], idx[c]);
      const double det = sub.determinant().real();
      if (det < -tol * std::pow(scale, static_cast<double>(s))) ok = false;
    }
    v.principal_minors_ok = ok;
  }
  return v;
}

enum class EstimationMode { Exact, LeastSquares, Subset };

inline const char* to_string(EstimationMode m) {
  switch (m) {
    case EstimationMode::Exact: return "exact";
    case EstimationMode::LeastSquares: return "lsq";
    case EstimationMode::Subset: return "subset";
  }
  return "?";
}

inline EstimationMode mode_from_string(const std::string& s) {
  if (s == "exact") return EstimationMode::Exact;
  if (s == "lsq" || s == "least_squares" || s == "least-squares") return EstimationMode::LeastSquares;
  if (s == "subset") return EstimationMode::Subset;
  throw ValidationError("unknown estimation mode '" + s + "'");
}

struct EstimationOptions {
  EstimationMode mode = EstimationMode::LeastSquares;
  std::optional<TildeVariant> variant;  // defaults to the frame's full variant
  // Exact mode on inconsistent data: least squares if true, else throw.
  bool fallback_to_least_squares = true;
  // Subset mode refuses when C(m, D) exceeds this.
  double max_subsets = 1e5;
  double state_tolerance = 1e-8;
};

struct EstimationResult {
  SelfAdjointOperator op;
  EstimationMode mode_used = EstimationMode::LeastSquares;
  bool solvable = false;
  Index rank_a = 0;
  Index rank_b = 0;
  double residual = 0.0;  // |measure(T) - a|_2
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  bool is_state = false;
};

namespace detail {

inline EstimationResult finish(const Frame& frame, const MeasurementRecord& a,
                               SelfAdjointOperator op, EstimationMode mode,
                               const SolvabilityReport& sol, double state_tol) {
  const StateValidation val = validate_state(op, state_tol);
  EstimationResult r{std::move(op), mode, sol.solvable, sol.rank_a, sol.rank_b};
  r.residual = (measure(r.op, frame) - a.values()).norm();
  r.trace = val.trace;
  r.min_eigenvalue = val.min_eigenvalue;
  r.is_state = val.is_psd && std::abs(val.trace - 1.0) <= state_tol;
  return r;
}

inline double binomial(Index m, Index d) {
  if (d < 0 || d > m) return 0.0;
  d = std::min(d, m - d);
  double out = 1.0;
  for (Index i = 1; i <= d; ++i) out = out * static_cast<double>(m - d + i) / static_cast<double>(i);
  return out;
}

// Best exact interpolant on a D-row basis subset of the system.
inline RealVector best_subset_solution(const LinearSystem& sys, double max_subsets) {
  const Index m = sys.a.rows();
  const Index d = sys.a.cols();
  if (binomial(m, d) > max_subsets)
    throw ValidationError("subset mode: C(" + std::to_string(m) + ", " + std::to_string(d) +
                          ") exceeds the subset guard");
  std::vector<Index> pick(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::optional<RealVector> best;
  double best_err = 0.0;
  RealMatrix sub(d, d);
  RealVector rhs(d);
  for (;;) {
    for (Index r = 0; r < d; ++r) {
      sub.row(r) = sys.a.row(pick[static_cast<std::size_t>(r)]);
      rhs(r) = sys.rhs(pick[static_cast<std::size_t>(r)]);
    }
    Eigen::FullPivLU<RealMatrix> lu(sub);
    if (numerical_rank(sub).rank == d) {
      const RealVector t = lu.solve(rhs);
      const double err = (sys.a * t - sys.rhs).squaredNorm();
      if (!best || err < best_err) {
        best = t;
        best_err = err;
      }
    }
    // next combination in lexicographic order
    Index i = d - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - d + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < d; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (!best) throw RankError("subset mode: no subset of the frame is a basis of the tilde space");
  return *best;
}

}  // namespace detail

inline EstimationResult estimate_state(const Frame& frame, const MeasurementRecord& a,
                                       const EstimationOptions& options = {}) {
  const TildeVariant v = options.variant.value_or(full_variant(frame.field()));
  const detail::LinearSystem sys = detail::build_system(frame, a, v);
  const SolvabilityReport sol = detail::solvability(sys);
  EstimationMode mode = options.mode;
  if (mode == EstimationMode::Exact && !sol.solvable) {
    if (!options.fallback_to_least_squares)
      throw ValidationError("measurements are inconsistent: rank A = " +
                            std::to_string(sol.rank_a) + ", rank [A|a] = " +
                            std::to_string(sol.rank_b));
    mode = EstimationMode::LeastSquares;
  }
  RealVector t;
  if (mode == EstimationMode::Subset) {
    t = detail::best_subset_solution(sys, options.max_subsets);
  } else {
    t = min_norm_solve(sys.a, sys.rhs);
  }
  return detail::finish(frame, a, detail::operator_from_entries(sys, t), mode, sol,
                        options.state_tolerance);
}

// a_k = <T x_k, x_k> + N(0, sigma^2).
inline MeasurementRecord simulate_measurements(const Frame& frame, const SelfAdjointOperator& t,
                                               double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ValidationError("noise sigma must be >= 0");
  RealVector a = measure(t, frame);
  if (sigma > 0.0) {
    Rng rng(seed);
    for (Index k = 0; k < a.size(); ++k) a(k) += sigma * gaussian(rng);
  }
  return MeasurementRecord(std::move(a));
}

// G G^* / tr(G G^*) with G Gaussian.
inline SelfAdjointOperator random_state(Index n, Field field, std::uint64_t seed) {
  if (n < 1) throw DimensionError("state dimension must be at least 1");
  Rng rng(seed);
  const Matrix g = gaussian_matrix(n, n, field, rng);
  const Matrix p = g * g.adjoint();
  return SelfAdjointOperator(field, p / p.trace().real());
}

// Nearest-by-spectrum state: negative eigenvalues clipped to zero, then
// rescaled to unit trace (I/n when nothing survives). Not part of the
// estimator itself; callers opt in.
inline SelfAdjointOperator project_to_state(const SelfAdjointOperator& t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(t.entries());
  RealVector ev = es.eigenvalues().cwiseMax(0.0);
  const double total = ev.sum();
  const Index n = t.dim();
  if (!(total > 0.0)) return SelfAdjointOperator(t.field(), Matrix::Identity(n, n) / double(n));
  ev /= total;
  const Matrix p = es.eigenvectors() * ev.cast<Scalar>().asDiagonal() * es.eigenvectors().adjoint();
  return SelfAdjointOperator(t.field(), p);
}

}  // namespace qframe

#endif  // QFRAME_ESTIMATE_HPP_
