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

#ifndef QFRAME_CLI_HPP_
#define QFRAME_CLI_HPP_

// Command-line front end. Exit codes: 0 ok / injective / solvable,
// 1 error (one JSON line on stderr), 2 not injective, 3 least-squares only.

#include <qframe/construct.hpp>
#include <qframe/core.hpp>
#include <qframe/estimate.hpp>
#include <qframe/experiments.hpp>
#include <qframe/frame_ops.hpp>
#include <qframe/injectivity.hpp>
#include <qframe/io.hpp>
#include <qframe/tilde.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qframe {

inline Json summary_to_json(const TrialSummary& s) {
  Json params = Json::object();
  for (const auto& [k, v] : s.parameters) params[k] = v;
  Json failures = Json::array();
  for (const FailureRecord& f : s.failures) failures.push_back({{"trial", f.trial}, {"margin", f.margin}});
  Json extra = Json::object();
  for (const auto& [k, v] : s.extra) extra[k] = v;
  return Json{{"name", s.name},
              {"trials", s.trials},
              {"successes", s.successes},
              {"fraction", s.fraction},
              {"seed", s.seed},
              {"parameters", params},
              {"margin_min", s.margin_min},
              {"margin_median", s.margin_median},
              {"failures", failures},
              {"structurally_impossible", s.structurally_impossible},
              {"extra", extra}};
}

inline Json report_to_json(const InjectivityReport& r) {
  return Json{{"variant", to_string(r.variant)}, {"m", r.m},
              {"embed_dim", r.embed_dim},        {"rank", r.rank},
              {"injective", r.injective},        {"smallest_kept", r.smallest_kept},
              {"smallest_singular", r.smallest_singular}, {"tolerance", r.tolerance}};
}

namespace detail {

class ParamMap {
 public:
  explicit ParamMap(const std::vector<std::string>& items) {
    for (const std::string& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ValidationError("parameter '" + item + "' is not of the form key=value");
      values_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  double number(const std::string& key, double fallback) {
    used_.push_back(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(it->second, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != it->second.size())
      throw ValidationError("parameter " + key + " is not a number: '" + it->second + "'");
    return v;
  }

  Index integer(const std::string& key, Index fallback) {
    const double v = number(key, static_cast<double>(fallback));
    if (v != std::floor(v)) throw ValidationError("parameter " + key + " must be an integer");
    return static_cast<Index>(v);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.push_back(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  void reject_unused() const {
    for (const auto& [k, v] : values_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw ValidationError("unknown parameter '" + k + "'");
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> used_;
};

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

inline Frame build_frame(const std::string& kind, Index dim, std::optional<std::uint64_t> seed,
                         Field field) {
  if (kind == "sum-pairs") return sum_pairs(dim);
  if (kind == "staircase") return staircase_real(dim, seed);
  if (kind == "staircase-complex") return staircase_complex(dim, seed);
  if (kind == "parseval") return parseval_staircase(EigenvalueSchedule::uniform(dim), field, seed);
  if (kind == "shift") return shift_frame(dim, field);
  throw ValidationError("unknown frame kind '" + kind + "'");
}

inline TrialSummary run_experiment(const std::string& name, ParamMap& p, std::uint64_t seed,
                                   unsigned threads) {
  if (name == "density") {
    const Index n = p.integer("n", 2);
    const Field field = field_from_string(p.text("field", "real"));
    const Index m = p.integer("m", embed_dim(full_variant(field), n));
    const Index trials = p.integer("trials", 1000);
    p.reject_unused();
    return density_experiment(m, n, field, trials, seed, threads);
  }
  if (name == "openness") {
    const std::string kind = p.text("kind", "sum-pairs");
    const Index n = p.integer("n", 3);
    const Field field = field_from_string(p.text("field", "real"));
    const double eps = p.number("epsilon", 1e-3);
    const Index trials = p.integer("trials", 100);
    p.reject_unused();
    return openness_probe(build_frame(kind, n, std::nullopt, field), eps, trials, seed, threads);
  }
  if (name == "parseval-repair") {
    const Index n = p.integer("n", 2);
    const Field field = field_from_string(p.text("field", "real"));
    const Index m = embed_dim(full_variant(field), n);
    const double delta = p.number("delta", 0.25 / static_cast<double>(m));
    const Index trials = p.integer("trials", 100);
    p.reject_unused();
    return parseval_repair_trials(n, field, delta, trials, seed, threads);
  }
  if (name == "riesz") {
    const Index n = p.integer("n", 4);
    const Field field = field_from_string(p.text("field", "real"));
    const double eps = p.number("epsilon", 0.5);
    const Index trials = p.integer("trials", 100);
    p.reject_unused();
    return riesz_trials(n, field, eps, trials, seed, threads);
  }
  if (name == "tilde-bound") {
    const Index n = p.integer("n", 8);
    const double total = p.number("total", 0.125);
    const Index trials = p.integer("trials", 1000);
    p.reject_unused();
    return tilde_bound_trials(n, total, trials, seed, threads);
  }
  throw ValidationError("unknown experiment '" + name + "'");
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qframe: injective frames and state estimation"};
  app.require_subcommand(1);

  std::string kind, out_path, frame_path, variant_name, meas_path, mode_name = "exact";
  std::string state_spec, exp_name, field_name = "real";
  Index dim = 0;
  std::uint64_t seed = 0;
  bool seed_given = false, as_json = false, validate = false;
  double sigma = 0.0;
  unsigned threads = 1;
  std::vector<std::string> params;

  CLI::App* construct = app.add_subcommand("construct", "write a frame file");
  construct->add_option("--kind", kind, "sum-pairs|staircase|staircase-complex|parseval|shift")
      ->required();
  construct->add_option("--dim", dim, "dimension n (truncation N for shift)")->required();
  construct->add_option("--seed", seed, "random block bases")->each([&](const std::string&) {
    seed_given = true;
  });
  construct->add_option("--field", field_name, "real|complex (parseval, shift)");
  construct->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* check = app.add_subcommand("check", "certify injectivity");
  check->add_option("--frame", frame_path)->required();
  check->add_option("--variant", variant_name, "real|complex|real-trace-one|complex-trace-one");
  check->add_flag("--json", as_json);

  CLI::App* estimate = app.add_subcommand("estimate", "recover an operator from measurements");
  estimate->add_option("--frame", frame_path)->required();
  estimate->add_option("--measurements", meas_path)->required();
  estimate->add_option("--mode", mode_name, "exact|lsq|subset");
  estimate->add_option("--variant", variant_name);
  estimate->add_flag("--validate-state", validate);
  estimate->add_option("--out", out_path, "operator file");
  estimate->add_flag("--json", as_json);

  CLI::App* simulate = app.add_subcommand("simulate", "forward measurements a_k = <T x_k, x_k>");
  simulate->add_option("--frame", frame_path)->required();
  simulate->add_option("--state", state_spec, "random or an operator file")->required();
  simulate->add_option("--sigma", sigma, "Gaussian noise level");
  simulate->add_option("--seed", seed);
  simulate->add_option("--out", out_path, "CSV file (default stdout)");

  CLI::App* parseval = app.add_subcommand("parseval", "canonical Parseval frame S^{-1/2} x_k");
  parseval->add_option("--frame", frame_path)->required();
  parseval->add_option("--out", out_path);

  CLI::App* experiment = app.add_subcommand("experiment", "seeded trial batches");
  experiment->add_option("--name", exp_name, "density|openness|parseval-repair|riesz|tilde-bound")
      ->required();
  experiment->add_option("--params", params, "key=value ...");
  experiment->add_option("--seed", seed);
  experiment->add_option("--threads", threads, "worker threads (0: all cores)");
  experiment->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (*construct) {
      std::optional<std::uint64_t> s;
      if (seed_given) s = seed;
      const Frame f = detail::build_frame(kind, dim, s, field_from_string(field_name));
      detail::emit(frame_to_json(f).dump(2) + "\n", out_path, out);
      return 0;
    }
    if (*check) {
      const Frame f = read_frame(frame_path);
      const TildeVariant v =
          variant_name.empty() ? full_variant(f.field()) : variant_from_string(variant_name);
      const InjectivityReport r = check_injectivity(f, v);
      if (as_json) {
        out << report_to_json(r).dump() << "\n";
      } else {
        out << (r.injective ? "injective" : "not injective") << " (" << to_string(v) << "): rank "
            << r.rank << " of " << r.embed_dim << ", m = " << r.m << ", margin "
            << detail::fmt(r.smallest_kept) << "\n";
      }
      return r.injective ? 0 : 2;
    }
    if (*estimate) {
      const Frame f = read_frame(frame_path);
      EstimationOptions opt;
      opt.mode = mode_from_string(mode_name);
      if (!variant_name.empty()) opt.variant = variant_from_string(variant_name);
      const EstimationResult r = estimate_state(f, read_measurements(meas_path), opt);
      Json j{{"operator", operator_to_json(r.op)},
             {"mode", to_string(r.mode_used)},
             {"solvable", r.solvable},
             {"rank_a", r.rank_a},
             {"rank_b", r.rank_b},
             {"residual", r.residual},
             {"trace", r.trace},
             {"min_eigenvalue", r.min_eigenvalue},
             {"is_state", r.is_state}};
      if (validate) {
        const StateValidation sv = validate_state(r.op);
        j["validation"] = {{"trace", sv.trace},
                           {"min_eigenvalue", sv.min_eigenvalue},
                           {"is_psd", sv.is_psd},
                           {"principal_minors_ok", sv.principal_minors_ok
                                                       ? Json(*sv.principal_minors_ok)
                                                       : Json(nullptr)}};
      }
      if (!out_path.empty()) write_text_file(out_path, operator_to_json(r.op).dump(2) + "\n");
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << (r.solvable ? "solvable" : "not solvable; least-squares approximation") << " (rank A "
            << r.rank_a << ", rank [A|a] " << r.rank_b << "), residual " << detail::fmt(r.residual)
            << "\n";
        if (validate)
          out << "trace " << detail::fmt(r.trace) << ", min eigenvalue "
              << detail::fmt(r.min_eigenvalue) << ", state: " << (r.is_state ? "yes" : "no")
              << "\n";
        out << operator_to_json(r.op).dump() << "\n";
      }
      return r.solvable ? 0 : 3;
    }
    if (*simulate) {
      const Frame f = read_frame(frame_path);
      const SelfAdjointOperator t = state_spec == "random"
                                        ? random_state(f.dim(), f.field(), derive_seed(seed, 0))
                                        : read_operator(state_spec);
      if (t.field() == Field::Complex && f.field() == Field::Real)
        throw FieldError("complex operator with a real frame");
      detail::emit(format_measurements(simulate_measurements(f, t, sigma, derive_seed(seed, 1))),
                   out_path, out);
      return 0;
    }
    if (*parseval) {
      detail::emit(frame_to_json(canonical_parseval(read_frame(frame_path))).dump(2) + "\n",
                   out_path, out);
      return 0;
    }
    if (*experiment) {
      detail::ParamMap p(params);
      const TrialSummary s = detail::run_experiment(exp_name, p, seed, threads);
      detail::emit(summary_to_json(s).dump(2) + "\n", out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qframe

#endif  // QFRAME_CLI_HPP_
