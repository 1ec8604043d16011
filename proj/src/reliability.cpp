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

#include "amle/reliability.hpp"

#include "amle/kernels.hpp"

namespace amle {

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths) {
  return parallel::count_reliability(profile, truths);
}

Reliabilities update_reliabilities(const Profile& profile,
                                   const GroundTruth& truths, double eps) {
  return reliabilities_from_counts(count_reliability(profile, truths), eps);
}

Reliabilities reliabilities_from_counts(const ReliabilityCounts& counts,
                                        double eps) {
  if (counts.positives == 0) {
    throw DegenerateTruthError(
        "every estimated truth set is empty; true-positive rates are undefined");
  }
  if (counts.negatives == 0) {
    throw DegenerateTruthError(
        "every estimated truth set is full; false-positive rates are undefined");
  }
  Reliabilities r;
  r.p.reserve(counts.voters.size());
  r.q.reserve(counts.voters.size());
  const auto pos = static_cast<double>(counts.positives);
  const auto neg = static_cast<double>(counts.negatives);
  for (const auto& c : counts.voters) {
    r.p.push_back(clamp_probability(static_cast<double>(c.true_pos) / pos, eps));
    r.q.push_back(clamp_probability(static_cast<double>(c.false_pos) / neg, eps));
  }
  return r;
}

}  // namespace amle
