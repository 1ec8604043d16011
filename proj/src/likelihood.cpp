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

#include "amle/likelihood.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "amle/priors.hpp"

namespace amle {
namespace {

void require_rate(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("noise parameter outside the open interval (0,1)");
  }
}

}  // namespace

double ballot_loglik(const AltSet& ballot, const AltSet& truth, double p,
                     double q, std::size_t m) {
  require_rate(p);
  require_rate(q);
  const double tp = static_cast<double>(intersection_size(ballot, truth));
  const double fp = static_cast<double>(ballot.size()) - tp;
  const double fn = static_cast<double>(truth.size()) - tp;
  const double tn = static_cast<double>(m) - tp - fp - fn;
  return tp * std::log(p) + fp * std::log(q) + fn * std::log1p(-p) +
         tn * std::log1p(-q);
}

std::optional<double> prior_logprob(const AltSet& candidate,
                                    std::span<const double> t, Bounds bounds) {
  for (double tj : t) require_rate(tj);
  if (!bounds.admits(candidate.size())) return std::nullopt;
  const auto mask = membership_mask(candidate, t.size());
  double s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    s += mask[j] ? std::log(t[j]) : std::log1p(-t[j]);
  }
  return s - std::log(beta(bounds, t));
}

std::optional<double> instance_loglik(const Instance& instance,
                                      const AltSet& truth,
                                      const ParamVector& params,
                                      Bounds bounds) {
  auto prior = prior_logprob(truth, params.t, bounds);
  if (!prior) return std::nullopt;
  const std::size_t m = params.t.size();
  double s = *prior;
  for (std::size_t i = 0; i < instance.ballots.size(); ++i) {
    s += ballot_loglik(instance.ballots[i].approved, truth, params.p[i],
                       params.q[i], m);
  }
  return s;
}

double total_loglik(const Profile& profile, const GroundTruth& truths,
                    const ParamVector& params, Bounds bounds) {
  if (truths.size() != profile.num_instances()) {
    throw std::invalid_argument("total_loglik: one truth set per instance expected");
  }
  double s = 0.0;
  for (std::size_t z = 0; z < truths.size(); ++z) {
    auto term = instance_loglik(profile.instances[z], truths[z], params, bounds);
    if (!term) {
      throw ImpossibleTruthError("truth set of instance '" +
                                 profile.instances[z].id +
                                 "' violates the cardinality bounds");
    }
    s += *term;
  }
  return s;
}

std::vector<AltSet> brute_force_truth_mle(const Instance& instance,
                                          const ParamVector& params,
                                          Bounds bounds) {
  const std::size_t m = params.t.size();
  if (m > kBruteForceMaxAlternatives) {
    throw std::invalid_argument("brute_force_truth_mle: too many alternatives to enumerate");
  }
  std::vector<std::pair<double, AltSet>> scored;
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto card = static_cast<std::size_t>(std::popcount(mask));
    if (!bounds.admits(card)) continue;
    AltSet s;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (1u << j)) s.push_back(j);
    }
    const double ll = *instance_loglik(instance, s, params, bounds);
    best = std::max(best, ll);
    scored.emplace_back(ll, std::move(s));
  }
  std::vector<AltSet> out;
  for (auto& [ll, s] : scored) {
    if (ll >= best - kLogLikTieTolerance) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace amle
