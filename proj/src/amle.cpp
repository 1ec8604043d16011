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

#include "amle/amle.hpp"

#include <stdexcept>

#include "amle/likelihood.hpp"
#include "amle/priors.hpp"
#include "amle/reliability.hpp"
#include "amle/truth_mle.hpp"

namespace amle {
namespace {

struct StepOutput {
  IterationRecord record;
  std::vector<TruthEstimate> estimates;
};

StepOutput step(const Profile& profile, Bounds bounds, const ParamVector& prev,
                const AmleConfig& config) {
  const std::size_t m = profile.num_alternatives();
  StepOutput out;
  out.estimates =
      estimate_truths(profile, voter_weights(prev), bounds, config.execution);
  IterationRecord& rec = out.record;
  rec.truths.reserve(out.estimates.size());
  for (const auto& e : out.estimates) rec.truths.push_back(e.chosen);
  rec.loglik_truth_step = total_loglik(profile, rec.truths, prev, bounds);

  const ReliabilityCounts counts =
      count_reliability(profile, rec.truths, config.execution);
  const bool forced_empty = bounds.upper == 0;
  const bool forced_full = bounds.lower == m;
  rec.params = prev;
  if (counts.positives == 0 && !forced_empty) {
    throw DegenerateTruthError(
        "every estimated truth set is empty; true-positive rates are undefined");
  }
  if (counts.negatives == 0 && !forced_full) {
    throw DegenerateTruthError(
        "every estimated truth set is full; false-positive rates are undefined");
  }
  const double eps = config.epsilon_clamp;
  for (std::size_t i = 0; i < counts.voters.size(); ++i) {
    if (counts.positives > 0) {
      rec.params.p[i] = clamp_probability(
          static_cast<double>(counts.voters[i].true_pos) /
              static_cast<double>(counts.positives),
          eps);
    }
    if (counts.negatives > 0) {
      rec.params.q[i] = clamp_probability(
          static_cast<double>(counts.voters[i].false_pos) /
              static_cast<double>(counts.negatives),
          eps);
    }
  }

  if (!config.freeze_priors) {
    // Coordinate ascent: t_j sees the already-updated t_{<j}.
    for (std::size_t j = 0; j < m; ++j) {
      rec.params.t[j] = update_prior(j, rec.truths, bounds, rec.params.t, eps);
    }
  }
  rec.loglik = total_loglik(profile, rec.truths, rec.params, bounds);
  rec.change = linf_distance(rec.params, prev);
  return out;
}

}  // namespace

void AmleConfig::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(epsilon_clamp > 0.0 && epsilon_clamp < 0.5)) {
    throw std::invalid_argument("epsilon_clamp must lie in (0, 0.5)");
  }
}

IterationRecord amle_step(const Profile& profile, Bounds bounds,
                          const ParamVector& params, const AmleConfig& config) {
  return step(profile, bounds, params, config).record;
}

AmleResult run_amle(const Profile& profile, Bounds bounds,
                    const ParamVector& init, const AmleConfig& config) {
  config.validate();
  if (const auto report = validate_profile(profile, bounds); !report.ok()) {
    throw std::invalid_argument("run_amle: invalid profile: " + report.violations.front());
  }
  if (init.p.size() != profile.num_voters() || init.q.size() != profile.num_voters() ||
      init.t.size() != profile.num_alternatives()) {
    throw std::invalid_argument("run_amle: initial parameters do not match the profile");
  }
  require_open_unit(init);

  AmleResult result;
  result.trace.initial_params = init.clamped(config.epsilon_clamp);
  ParamVector current = result.trace.initial_params;
  for (std::size_t v = 0; v < config.max_iterations; ++v) {
    StepOutput out = step(profile, bounds, current, config);
    current = out.record.params;
    result.estimates = std::move(out.estimates);
    const bool done = out.record.change <= config.tolerance;
    result.trace.iterations.push_back(std::move(out.record));
    if (done) {
      result.converged = true;
      break;
    }
  }
  result.iterations = result.trace.iterations.size();
  result.truths = result.trace.iterations.back().truths;
  result.params = current;
  return result;
}

}  // namespace amle
