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

#ifndef AMLE_BASELINES_HPP_
#define AMLE_BASELINES_HPP_

#include <cstddef>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Number of voters approving each alternative.
std::vector<std::size_t> approval_counts(const Instance& instance, std::size_t m);

// The most frequently cast exact ballot. Ties go to the lexicographically
// smallest index set.
AltSet modal_rule(const Instance& instance);

// Label-wise strict majority (> n/2), adjusted to the bounds: an empty
// result becomes the top-1 alternative, results above u keep the top-u, and
// non-empty results below l are padded with the best remaining
// alternatives. Count ties resolve by alternative index.
AltSet majority_rule(const Instance& instance, Bounds bounds, std::size_t m);

GroundTruth apply_modal(const Profile& profile);
GroundTruth apply_majority(const Profile& profile, Bounds bounds);

}  // namespace amle

#endif  // AMLE_BASELINES_HPP_
