// Copyright 2026 The AMLE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMLE_AMLE_HPP_
#define AMLE_AMLE_HPP_

#include <cstddef>
#include <vector>

#include "amle/kernels.hpp"
#include "amle/model.hpp"

namespace amle {

struct AmleConfig {
  // Stop once the ℓ∞ change of the packed parameter vector is <= tolerance.
  double tolerance = 1e-5;
  std::size_t max_iterations = 100;
  // Keep t fixed at its initial value (single-instance problems).
  bool freeze_priors = false;
  double epsilon_clamp = kDefaultClamp;
  Execution execution = Execution::kParallel;

  void validate() const;
};

// State after iteration v: the truths Ŝ^(v) estimated from θ^(v-1) and the
// parameters θ^(v) fitted to them.
struct IterationRecord {
  ParamVector params;
  GroundTruth truths;
  // ln ℒ(Ŝ^(v), θ^(v-1)), after the truth step only.
  double loglik_truth_step = 0.0;
  // ln ℒ(Ŝ^(v), θ^(v)).
  double loglik = 0.0;
  // ‖θ^(v) - θ^(v-1)‖∞
  double change = 0.0;
};

struct AmleTrace {
  ParamVector initial_params;
  std::vector<IterationRecord> iterations;
};

struct AmleResult {
  GroundTruth truths;
  ParamVector params;
  std::vector<TruthEstimate> estimates;
  AmleTrace trace;
  bool converged = false;
  std::size_t iterations = 0;
};

// Alternating maximum-likelihood estimation: repeat
//   1. the constrained truth MLE of every instance given θ,
//   2. the closed-form (p, q) MLE given the truths,
//   3. sequential closed-form t_j updates for j = 0..m-1 (unless frozen),
// until θ moves by at most config.tolerance or max_iterations is reached.
// The initial parameters are clamped to [ε, 1-ε] first.
//
// When the bounds force every truth empty (u = 0) or full (l = m), the rate
// they leave unidentified keeps its previous value; any other all-empty or
// all-full outcome raises DegenerateTruthError.
AmleResult run_amle(const Profile& profile, Bounds bounds,
                    const ParamVector& init, const AmleConfig& config = {});

// One truth step followed by one parameter step from `params`, as run_amle
// performs it. Exposed for fixed-point checks.
IterationRecord amle_step(const Profile& profile, Bounds bounds,
                          const ParamVector& params, const AmleConfig& config);

}  // namespace amle

#endif  // AMLE_AMLE_HPP_
