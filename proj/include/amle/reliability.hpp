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

#ifndef AMLE_RELIABILITY_HPP_
#define AMLE_RELIABILITY_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Raised when the pooled truths leave a rate with a zero denominator:
// every truth empty (p undefined) or every truth full (q undefined).
class DegenerateTruthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pooled confusion counts for one voter across all instances.
struct VoterCounts {
  std::size_t true_pos = 0;   // Σ_z |A_i^z ∩ S_z|
  std::size_t false_pos = 0;  // Σ_z |A_i^z ∩ S̄_z|
};

struct ReliabilityCounts {
  std::vector<VoterCounts> voters;
  std::size_t positives = 0;  // Σ_z |S_z|
  std::size_t negatives = 0;  // Σ_z |S̄_z|
};

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths);

struct Reliabilities {
  std::vector<double> p;
  std::vector<double> q;
};

// p̂_i = Σ_z |A_i^z ∩ S_z| / Σ_z |S_z|,  q̂_i = Σ_z |A_i^z ∩ S̄_z| / Σ_z |S̄_z|,
// both clamped to [eps, 1 - eps].
Reliabilities update_reliabilities(const Profile& profile,
                                   const GroundTruth& truths,
                                   double eps = kDefaultClamp);

// Same estimate from precomputed counts. Throws DegenerateTruthError.
Reliabilities reliabilities_from_counts(const ReliabilityCounts& counts,
                                        double eps = kDefaultClamp);

}  // namespace amle

#endif  // AMLE_RELIABILITY_HPP_
