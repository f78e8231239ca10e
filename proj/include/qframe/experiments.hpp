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

#ifndef QFRAME_EXPERIMENTS_HPP_
#define QFRAME_EXPERIMENTS_HPP_

// Seeded Monte Carlo checks of the perturbation results. Trial t always uses
// the stream derive_seed(seed, t), so the aggregate does not depend on how
// trials are spread over threads.

#include <qframe/construct.hpp>
#include <qframe/core.hpp>
#include <qframe/frame_ops.hpp>
#include <qframe/injectivity.hpp>
#include <qframe/random.hpp>
#include <qframe/tilde.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qframe {

struct TrialOutcome {
  bool success = false;
  double margin = 0.0;
};

struct FailureRecord {
  Index trial = 0;
  double margin = 0.0;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct TrialSummary {
  std::string name;
  Index trials = 0;
  Index successes = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  double margin_min = 0.0;
  double margin_median = 0.0;
  std::vector<FailureRecord> failures;
  bool structurally_impossible = false;
  std::vector<std::pair<std::string, double>> extra;

  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

// Runs fn(t, rng) for t = 0..trials-1 on `threads` workers (0: hardware
// concurrency) and aggregates in trial order.
inline TrialSummary run_trials(Index trials, std::uint64_t seed, unsigned threads,
                               const std::function<TrialOutcome(Index, Rng&)>& fn) {
  if (trials < 1) throw ValidationError("need at least one trial");
  std::vector<TrialOutcome> out(static_cast<std::size_t>(trials));
  auto work = [&](Index begin, Index end) {
    for (Index t = begin; t < end; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
      out[static_cast<std::size_t>(t)] = fn(t, rng);
    }
  };
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<Index>(workers, trials));
  if (workers <= 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const Index chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const Index b = static_cast<Index>(w) * chunk;
      const Index e = std::min(trials, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }
  TrialSummary s;
  s.trials = trials;
  s.seed = seed;
  std::vector<double> margins;
  for (Index t = 0; t < trials; ++t) {
    const TrialOutcome& o = out[static_cast<std::size_t>(t)];
    margins.push_back(o.margin);
    if (o.success) {
      ++s.successes;
    } else {
      s.failures.push_back({t, o.margin});
    }
  }
  s.fraction = static_cast<double>(s.successes) / static_cast<double>(trials);
  std::sort(margins.begin(), margins.end());
  s.margin_min = margins.front();
  const std::size_t mid = margins.size() / 2;
  s.margin_median = margins.size() % 2 ? margins[mid] : 0.5 * (margins[mid - 1] + margins[mid]);
  return s;
}

// Fraction of Gaussian m-vector frames certified injective. The margin is
// the smallest singular value of the tilde matrix. Below the counting bound
// m < D nothing is sampled.
inline TrialSummary density_experiment(Index m, Index n, Field field, Index trials,
                                       std::uint64_t seed, unsigned threads = 1) {
  const TildeVariant v = full_variant(field);
  const Index d = embed_dim(v, n);
  TrialSummary s;
  if (m < d) {
    s.trials = trials;
    s.seed = seed;
    s.structurally_impossible = true;
  } else {
    s = run_trials(trials, seed, threads, [&](Index, Rng& rng) {
      const Frame f(field, gaussian_matrix(m, n, field, rng));
      const InjectivityReport r = check_injectivity(f, v);
      return TrialOutcome{r.injective, r.smallest_singular};
    });
  }
  s.name = "density";
  s.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)},
                  {"field", to_string(field)}, {"trials", std::to_string(trials)}};
  s.extra.push_back({"embed_dim", static_cast<double>(d)});
  return s;
}

// Perturbs the whole frame by Gaussian noise rescaled to Frobenius norm
// epsilon and re-certifies. Also reports a radius below which injectivity is
// guaranteed: with R = max |x_k|, |x~ - y~| <= |x - y| (2R + |x - y|), so
// any total perturbation below -R + sqrt(R^2 + sigma_min) is safe.
inline TrialSummary openness_probe(const Frame& frame, double epsilon, Index trials,
                                   std::uint64_t seed, unsigned threads = 1) {
  if (!(epsilon >= 0.0)) throw ValidationError("epsilon must be >= 0");
  const InjectivityReport base = check_injectivity(frame);
  if (!base.injective) throw ValidationError("openness_probe needs an injective frame");
  const double r = frame.vectors().rowwise().norm().maxCoeff();
  const double sigma = base.smallest_singular;
  const double radius = -r + std::sqrt(r * r + sigma);
  TrialSummary s = run_trials(trials, seed, threads, [&](Index, Rng& rng) {
    Matrix u = gaussian_matrix(frame.size(), frame.dim(), frame.field(), rng);
    const double norm = u.norm();
    if (norm > 0.0) u *= epsilon / norm;
    const InjectivityReport rep = check_injectivity(Frame(frame.field(), frame.vectors() + u));
    return TrialOutcome{rep.injective, rep.smallest_singular};
  });
  s.name = "openness";
  s.parameters = {{"epsilon", std::to_string(epsilon)}, {"trials", std::to_string(trials)},
                  {"m", std::to_string(frame.size())}, {"n", std::to_string(frame.dim())}};
  s.extra = {{"sigma_min", sigma}, {"certified_radius", radius}};
  return s;
}

struct ParsevalRepairReport {
  Frame repaired;
  bool input_injective = false;
  Index attempts = 0;
  double distance_squared = 0.0;
  double bound = 0.0;  // 2 m delta^2 + 8 (m delta)^2 m (1 + delta)^2
  double parseval_error = 0.0;  // |S - I|_2 of the output
  bool injective = false;
  bool within_bound = false;
};

// Moves the first D vectors of a Parseval frame by at most delta each until
// the result {y_k} is injective, then returns {S_1^{-1/2} y_k}.
inline ParsevalRepairReport parseval_repair(const Frame& frame, double delta, std::uint64_t seed,
                                            Index max_attempts = 100) {
  const Index m = frame.size();
  const Index n = frame.dim();
  const TildeVariant v = full_variant(frame.field());
  const Index d = embed_dim(v, n);
  const double s_err =
      (frame_operator(frame).entries() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (s_err > 1e-8) throw ValidationError("parseval_repair needs a Parseval frame (|S - I| <= 1e-8)");
  if (!(delta > 0.0) || !(2.0 * static_cast<double>(m) * delta < 1.0))
    throw ValidationError("parseval_repair needs 0 < delta and 2 m delta < 1");
  if (m < d)
    throw ValidationError("no injective frame has " + std::to_string(m) + " < " +
                          std::to_string(d) + " vectors");
  const double md = static_cast<double>(m) * delta;
  const double bound =
      2.0 * static_cast<double>(m) * delta * delta +
      8.0 * md * md * static_cast<double>(m) * (1.0 + delta) * (1.0 + delta);

  ParsevalRepairReport rep{frame};
  rep.bound = bound;
  Matrix y = frame.vectors();
  rep.input_injective = check_injectivity(frame, v).injective;
  if (!rep.input_injective) {
    Rng rng(seed);
    bool ok = false;
    for (Index a = 0; a < max_attempts && !ok; ++a) {
      ++rep.attempts;
      y = frame.vectors();
      for (Index k = 0; k < d; ++k) {
        Vector dir = gaussian_matrix(1, n, frame.field(), rng).row(0).transpose();
        const double len = delta * uniform(rng, 0.5, 1.0);
        y.row(k) += (dir * (len / dir.norm())).transpose();
      }
      ok = check_injectivity(Frame(frame.field(), y), v).injective;
    }
    if (!ok) throw RankError("parseval_repair: no injective perturbation within the retry budget");
  }
  rep.repaired = canonical_parseval(Frame(frame.field(), y));
  rep.distance_squared = frame_distance_squared(frame, rep.repaired);
  const RealVector ev = frame_operator(rep.repaired).eigenvalues();
  rep.parseval_error = std::max(std::abs(ev(0) - 1.0), std::abs(ev(ev.size() - 1) - 1.0));
  rep.injective = check_injectivity(rep.repaired, v).injective;
  rep.within_bound = rep.distance_squared <= bound;
  return rep;
}

struct RieszCheck {
  double distance_squared = 0.0;  // sum_i |e_i - x_i|^2
  double lower_bound = 0.0;
  double required = 0.0;  // (1 - epsilon)^2
  bool holds = false;
};

// Family x_1..x_m (m <= N) against e_1..e_m of its truncation.
inline RieszCheck riesz_perturbation_check(const Frame& family, double epsilon) {
  if (family.size() > family.dim())
    throw DimensionError("riesz check needs at most N vectors at truncation N");
  if (!(epsilon > 0.0) || epsilon > 1.0) throw ValidationError("riesz check needs 0 < epsilon <= 1");
  const Matrix basis = Matrix::Identity(family.size(), family.dim());
  RieszCheck c;
  c.distance_squared = (basis - family.vectors()).squaredNorm();
  if (!(c.distance_squared < epsilon * epsilon))
    throw ValidationError("riesz check needs sum |e_i - x_i|^2 < epsilon^2");
  c.lower_bound = lower_riesz_bound(family);
  c.required = (1.0 - epsilon) * (1.0 - epsilon);
  c.holds = c.lower_bound >= c.required;
  return c;
}

struct TildePerturbationReport {
  std::vector<double> tilde_distance;  // |e~_k - x~_k|^2
  std::vector<double> distance;        // |e_k - x_k|^2
  bool per_index_ok = true;            // tilde_distance <= 6 distance
  double sum_tilde = 0.0;
  double sum = 0.0;
  bool aggregate_ok = false;
  bool small = false;  // sum <= 1/8
  // Only meaningful when small:
  double operator_norm = 0.0;  // |I - T|, T: e~_k -> x~_k
  bool operator_ok = false;    // <= sqrt(3) / 2
  double tilde_lower_riesz = 0.0;
  bool riesz_ok = false;  // >= (1 - sqrt(sum_tilde))^2 > 0
};

// Real family x_1..x_m (m <= N) compared with e_1..e_m in R^N.
inline TildePerturbationReport tilde_perturbation_bound_check(const Frame& family) {
  if (family.field() != Field::Real) throw FieldError("tilde perturbation check is real only");
  if (family.size() > family.dim())
    throw DimensionError("tilde perturbation check needs at most N vectors at truncation N");
  const Index n = family.dim();
  const Index m = family.size();
  const TildeMatrix xt = tilde_matrix(family, TildeVariant::RealFull);
  const Frame basis = Frame::real(RealMatrix::Identity(m, n));
  const TildeMatrix et = tilde_matrix(basis, TildeVariant::RealFull);
  const RealMatrix diff = et.rows - xt.rows;
  TildePerturbationReport rep;
  for (Index k = 0; k < m; ++k) {
    const double lhs = diff.row(k).squaredNorm();
    const double rhs = (basis.vector(k) - family.vector(k)).squaredNorm();
    rep.tilde_distance.push_back(lhs);
    rep.distance.push_back(rhs);
    // the per-index inequality assumes |x_k|^2 <= 2
    if (family.vector(k).squaredNorm() <= 2.0 && lhs > 6.0 * rhs * (1.0 + 1e-12))
      rep.per_index_ok = false;
    rep.sum_tilde += lhs;
    rep.sum += rhs;
  }
  rep.aggregate_ok = rep.sum_tilde <= 6.0 * rep.sum * (1.0 + 1e-12);
  rep.small = rep.sum <= 0.125;
  if (rep.small) {
    rep.operator_norm = std::sqrt(bessel_bound(diff));
    rep.operator_ok = rep.operator_norm <= std::sqrt(3.0) / 2.0;
    rep.tilde_lower_riesz = lower_riesz_bound(xt.rows);
    const double floor = 1.0 - std::sqrt(rep.sum_tilde);
    rep.riesz_ok = floor > 0.0 && rep.tilde_lower_riesz >= floor * floor * (1.0 - 1e-12);
  }
  return rep;
}

// Batch drivers over random inputs. Each trial succeeds when every asserted
// property of the single check holds; the margin is the slack in the main
// inequality.

// Padded canonical basis {e_1, .., e_n, 0, .., 0} with D vectors: Parseval
// but not injective.
inline Frame padded_basis(Index n, Field field) {
  const Index d = embed_dim(full_variant(field), n);
  return Frame(field, Matrix::Identity(d, n));
}

inline TrialSummary parseval_repair_trials(Index n, Field field, double delta, Index trials,
                                           std::uint64_t seed, unsigned threads = 1) {
  const Frame input = padded_basis(n, field);
  TrialSummary s = run_trials(trials, seed, threads, [&](Index, Rng& rng) {
    const ParsevalRepairReport r = parseval_repair(input, delta, rng());
    const bool ok = r.injective && r.within_bound && r.parseval_error <= 1e-8;
    return TrialOutcome{ok, r.bound - r.distance_squared};
  });
  s.name = "parseval-repair";
  s.parameters = {{"n", std::to_string(n)}, {"field", to_string(field)},
                  {"delta", std::to_string(delta)}, {"trials", std::to_string(trials)}};
  return s;
}

// e_i + p_i, i = 1..n in R^n (or C^n), with sum |p_i|^2 = (scale * radius)^2
// for scale uniform in [0.5, 0.999].
inline Frame perturbed_basis(Index n, Field field, double radius, Rng& rng) {
  Matrix p = gaussian_matrix(n, n, field, rng);
  p *= radius * uniform(rng, 0.5, 0.999) / p.norm();
  return Frame(field, Matrix::Identity(n, n) + p);
}

inline TrialSummary riesz_trials(Index n, Field field, double epsilon, Index trials,
                                 std::uint64_t seed, unsigned threads = 1) {
  TrialSummary s = run_trials(trials, seed, threads, [&](Index, Rng& rng) {
    const RieszCheck c = riesz_perturbation_check(perturbed_basis(n, field, epsilon, rng), epsilon);
    return TrialOutcome{c.holds, c.lower_bound - c.required};
  });
  s.name = "riesz";
  s.parameters = {{"n", std::to_string(n)}, {"field", to_string(field)},
                  {"epsilon", std::to_string(epsilon)}, {"trials", std::to_string(trials)}};
  return s;
}

// Real families with sum |e_k - x_k|^2 <= total (default 1/8).
inline TrialSummary tilde_bound_trials(Index n, double total, Index trials, std::uint64_t seed,
                                       unsigned threads = 1) {
  TrialSummary s = run_trials(trials, seed, threads, [&](Index, Rng& rng) {
    const TildePerturbationReport r =
        tilde_perturbation_bound_check(perturbed_basis(n, Field::Real, std::sqrt(total), rng));
    bool ok = r.per_index_ok && r.aggregate_ok;
    if (r.small) ok = ok && r.operator_ok && r.riesz_ok;
    return TrialOutcome{ok, 6.0 * r.sum - r.sum_tilde};
  });
  s.name = "tilde-bound";
  s.parameters = {{"n", std::to_string(n)}, {"total", std::to_string(total)},
                  {"trials", std::to_string(trials)}};
  return s;
}

}  // namespace qframe

#endif  // QFRAME_EXPERIMENTS_HPP_
