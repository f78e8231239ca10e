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

// Library walkthrough: build an injective frame, measure a random state with
// it, and read the state back.

#include <qframe/qframe.hpp>

#include <cstdio>

int main() {
  using namespace qframe;

  const Frame frame = parseval_staircase(EigenvalueSchedule::uniform(3), Field::Complex, 7);
  const InjectivityReport rep = check_injectivity(frame);
  const FrameBounds fb = frame_bounds(frame);
  std::printf("complex Parseval staircase, n = 3: m = %lld, rank %lld of %lld, bounds (%.12f, %.12f)\n",
              static_cast<long long>(rep.m), static_cast<long long>(rep.rank),
              static_cast<long long>(rep.embed_dim), fb.lower, fb.upper);

  const SelfAdjointOperator state = random_state(3, Field::Complex, 11);
  const MeasurementRecord a = simulate_measurements(frame, state, 0.0, 0);
  EstimationOptions opt;
  opt.mode = EstimationMode::Exact;
  const EstimationResult est = estimate_state(frame, a, opt);
  std::printf("recovered state: |T - T_hat|_F = %.3g, trace %.12f, state: %s\n",
              (est.op.entries() - state.entries()).norm(), est.trace, est.is_state ? "yes" : "no");

  // Dropping a vector from a minimal frame loses injectivity; the witness
  // is an invisible Hermitian direction.
  const Frame smaller = frame.without(0);
  if (const auto w = witness_operator(smaller)) {
    std::printf("without x_1: not injective, witness max |<T x_k, x_k>| = %.3g\n",
                measure(*w, smaller).cwiseAbs().maxCoeff());
  }
  return 0;
}
