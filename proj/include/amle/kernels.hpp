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

#ifndef AMLE_KERNELS_HPP_
#define AMLE_KERNELS_HPP_

// The data-parallel loops of the estimator. Each kernel exists twice: a
// plain serial reference and an OpenMP version. Both write into per-item
// slots and sum in a fixed order, so their outputs are bit-identical; the
// unit tests and amle_bench rely on that.

#include <vector>

#include "amle/model.hpp"
#include "amle/reliability.hpp"
#include "amle/truth_mle.hpp"

namespace amle {

enum class Execution { kSerial, kParallel };

// Number of OpenMP threads a parallel kernel would use (1 without OpenMP).
int max_threads();

namespace serial {

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds);

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths);

// d_i = Σ_{j≠i} d_Jacc(B_i, B_j), where B_i is voter i's ballots
// concatenated over instances (one element per (instance, alternative)).
std::vector<double> distance_sums(const Profile& profile);

}  // namespace serial

namespace parallel {

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds);

ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths);

std::vector<double> distance_sums(const Profile& profile);

}  // namespace parallel

std::vector<TruthEstimate> estimate_truths(const Profile& profile,
                                           const VoterWeights& weights,
                                           Bounds bounds, Execution exec);
ReliabilityCounts count_reliability(const Profile& profile,
                                    const GroundTruth& truths, Execution exec);
std::vector<double> distance_sums(const Profile& profile, Execution exec);

// Voter i's ballots as one set of (instance, alternative) pairs, encoded
// z * m + a.
AltSet concatenated_ballots(const Profile& profile, std::size_t voter);

}  // namespace amle

#endif  // AMLE_KERNELS_HPP_
