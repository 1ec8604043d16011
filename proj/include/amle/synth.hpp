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

#ifndef AMLE_SYNTH_HPP_
#define AMLE_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "amle/model.hpp"

namespace amle {

struct SynthSpec {
  std::size_t m = 5;
  std::size_t n = 10;
  std::size_t instances = 15;
  Bounds bounds{1, 2};
  // Prior inclusion probabilities, length m, each in (0,1).
  std::vector<double> t;
  // (p_i, q_i) per voter, each in [0,1]; length n.
  std::vector<std::pair<double, double>> voters;
  std::uint64_t seed = 0;

  // m alternatives "a1".., n voters "v1".., identical voters at (p, q) and
  // every t_j = t.
  static SynthSpec homogeneous(std::size_t m, std::size_t n, std::size_t instances,
                               Bounds bounds, double p, double q, double t,
                               std::uint64_t seed);
  void validate() const;
};

// Rejection sampling is abandoned below this acceptance probability.
inline constexpr double kMinAcceptance = 1e-6;

// L independent draws from the cardinality-constrained prior: independent
// Bernoulli(t_j) inclusions, redrawn until the size lies within the bounds.
// Instance z uses the stream derive_seed(seed, {0, z}).
GroundTruth sample_truths(const SynthSpec& spec);

// Ballots from the noise model: voter i approves each alternative of the
// truth with probability p_i and each other alternative with probability
// q_i. Instance z uses the stream derive_seed(seed, {1, z}).
Profile sample_profile(const SynthSpec& spec, const GroundTruth& truths);

}  // namespace amle

#endif  // AMLE_SYNTH_HPP_
