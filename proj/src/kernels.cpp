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

#include "amle/kernels.hpp"

#include <cstddef>
#include <stdexcept>

#if defined(AMLE_HAVE_OPENMP)
#include <omp.h>
#endif

#include "amle/init.hpp"

namespace amle {

int max_threads() {
#if defined(AMLE_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

AltSet concatenated_ballots(const Profile& profile, std::size_t voter) {
  const std::size_t m = profile.num_alternatives();
  AltSet out;
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    for (AltIndex a : profile.instances[z].ballots.at(voter).approved) {
      out.push_back(z * m + a);
    }
  }
  return out;
}

namespace {

// Exceptions must not escape an OpenMP region, so shape problems are caught
// before entering one.
void require_rectangular(const Profile& profile) {
  for (const auto& inst : profile.instances) {
    if (inst.ballots.size() != profile.num_voters()) {
      throw std::invalid_argument("instance '" + inst.id +
                                  "' does not hold one ballot per voter");
    }
    for (const auto& b : inst.ballots) {
      for (AltIndex a : b.approved) {
        if (a >= profile.num_alternatives()) {
          throw std::invalid_argument("instance '" + inst.id +
                                      "' references an unknown alternative");
        }
      }
    }
  }
}

}  // namespace

namespace serial {

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds) {
  std::vector<TruthEstimate> out;
  out.reserve(profile.instances.size());
  for (const auto& inst : profile.instances) {
    out.push_back(estimate_truth(inst, weights, bounds));
  }
  return out;
}

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths) {
  const std::size_t m = profile.num_alternatives();
  ReliabilityCounts c;
  c.voters.resize(profile.num_voters());
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    const AltSet& s = truths.at(z);
    c.positives += s.size();
    c.negatives += m - s.size();
    const auto& ballots = profile.instances[z].ballots;
    for (std::size_t i = 0; i < ballots.size(); ++i) {
      const std::size_t tp = intersection_size(ballots[i].approved, s);
      c.voters[i].true_pos += tp;
      c.voters[i].false_pos += ballots[i].approved.size() - tp;
    }
  }
  return c;
}

std::vector<double> distance_sums(const Profile& profile) {
  const std::size_t n = profile.num_voters();
  std::vector<AltSet> cat(n);
  for (std::size_t i = 0; i < n; ++i) cat[i] = concatenated_ballots(profile, i);
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) d[i] += jaccard_distance(cat[i], cat[j]);
    }
  }
  return d;
}

}  // namespace serial

namespace parallel {

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds) {
  require_rectangular(profile);
  if (weights.voter.size() != profile.num_voters() ||
      weights.prior.size() != profile.num_alternatives()) {
    throw std::invalid_argument("estimate_truths: parameter shape differs from profile");
  }
  if (bounds.lower > bounds.upper || bounds.upper > profile.num_alternatives()) {
    throw std::invalid_argument("estimate_truths: invalid bounds");
  }
  const auto L = static_cast<std::ptrdiff_t>(profile.instances.size());
  std::vector<TruthEstimate> out(profile.instances.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t z = 0; z < L; ++z) {
    out[static_cast<std::size_t>(z)] = estimate_truth(
        profile.instances[static_cast<std::size_t>(z)], weights, bounds);
  }
  return out;
}

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths) {
  const std::size_t m = profile.num_alternatives();
  const std::size_t L = profile.instances.size();
  if (truths.size() != L) {
    throw std::invalid_argument("count_reliability: one truth set per instance expected");
  }
  require_rectangular(profile);
  ReliabilityCounts c;
  std::vector<std::vector<char>> masks(L);
  for (std::size_t z = 0; z < L; ++z) {
    masks[z] = membership_mask(truths[z], m);
    c.positives += truths[z].size();
    c.negatives += m - truths[z].size();
  }
  const auto n = static_cast<std::ptrdiff_t>(profile.num_voters());
  c.voters.resize(profile.num_voters());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    VoterCounts vc;
    for (std::size_t z = 0; z < L; ++z) {
      const auto& approved =
          profile.instances[z].ballots.at(static_cast<std::size_t>(i)).approved;
      for (AltIndex a : approved) {
        if (masks[z][a]) {
          ++vc.true_pos;
        } else {
          ++vc.false_pos;
        }
      }
    }
    c.voters[static_cast<std::size_t>(i)] = vc;
  }
  return c;
}

std::vector<double> distance_sums(const Profile& profile) {
  require_rectangular(profile);
  const std::size_t n = profile.num_voters();
  std::vector<AltSet> cat(n);
  for (std::size_t i = 0; i < n; ++i) cat[i] = concatenated_ballots(profile, i);
  std::vector<double> d(n, 0.0);
  const auto ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < ni; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != ii) s += jaccard_distance(cat[ii], cat[j]);
    }
    d[ii] = s;
  }
  return d;
}

}  // namespace parallel

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds, Execution exec) {
  return exec == Execution::kParallel
             ? parallel::estimate_truths(profile, weights, bounds)
             : serial::estimate_truths(profile, weights, bounds);
}

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths, Execution exec) {
  return exec == Execution::kParallel
             ? parallel::count_reliability(profile, truths)
             : serial::count_reliability(profile, truths);
}

std::vector<double> distance_sums(const Profile& profile, Execution exec) {
  return exec == Execution::kParallel ? parallel::distance_sums(profile)
                                      : serial::distance_sums(profile);
}

}  // namespace amle
