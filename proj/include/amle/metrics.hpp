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

#ifndef AMLE_METRICS_HPP_
#define AMLE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Thiele-style overlap weights: score(S, S*) = w[|S ∩ S*|]. w[0] = 0 and w is
// nondecreasing; length m + 1.
struct ThieleWeights {
  std::vector<double> w;

  // w_c = Σ_{k=1}^{c} 1/(m + 1 - k). At m = 5 this is 1/5 + 1/4 + ...
  static ThieleWeights harmonic(std::size_t m);
  void validate(std::size_t m) const;
};

// (1/mL) Σ_z (|S*_z ∩ Ŝ_z| + |S̄*_z ∩ S̄_z|)
double hamming_accuracy(const GroundTruth& estimates, const GroundTruth& truth,
                        std::size_t m);

// (1/L) Σ_z 1{Ŝ_z = S*_z}
double subset_accuracy(const GroundTruth& estimates, const GroundTruth& truth);

// Mean over instances of w[|Ŝ_z ∩ S*_z|], harmonic weights by default. In
// normalized mode each term is divided by w[|S*_z|]; an empty truth scores 1
// when the estimate is empty too and 0 otherwise.
double harmonic_accuracy(const GroundTruth& estimates, const GroundTruth& truth,
                         std::size_t m,
                         const std::optional<ThieleWeights>& weights = std::nullopt,
                         bool normalized = false);

struct MetricTable {
  double hamming = 0.0;
  double zero_one = 0.0;
  double harmonic = 0.0;
  double harmonic_normalized = 0.0;
};

MetricTable evaluate_all(const GroundTruth& estimates, const GroundTruth& truth,
                         std::size_t m);

}  // namespace amle

#endif  // AMLE_METRICS_HPP_
