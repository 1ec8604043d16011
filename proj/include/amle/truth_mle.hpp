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

#ifndef AMLE_TRUTH_MLE_HPP_
#define AMLE_TRUTH_MLE_HPP_

#include <cstddef>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Scores closer than this to the threshold are placed in the tie set.
inline constexpr double kScoreTieTolerance = 1e-9;

// Instance-independent part of the scoring: one log-odds weight per voter,
// the threshold they induce, and the prior log-odds per alternative.
struct VoterWeights {
  // w_i = ln(p_i (1 - q_i) / (q_i (1 - p_i)))
  std::vector<double> voter;
  // ln(t_j / (1 - t_j))
  std::vector<double> prior;
  // τ_n = Σ_i ln((1 - q_i) / (1 - p_i))
  double tau = 0.0;
};

VoterWeights voter_weights(const ParamVector& params);

struct ScoreBoard {
  std::vector<double> app_w;
  double tau = 0.0;
  std::vector<double> voter_weights;
  std::vector<double> prior_weights;
};

// app_w(a_j) = ln(t_j/(1-t_j)) + Σ_{i : a_j ∈ A_i} w_i, plus the threshold.
ScoreBoard weighted_scores(const Instance& instance, const ParamVector& params);
ScoreBoard weighted_scores(const Instance& instance, const VoterWeights& weights);

Partition partition(const ScoreBoard& board,
                    double tie_tolerance = kScoreTieTolerance);

// Alternatives sorted by (score descending, index ascending).
std::vector<AltIndex> score_order(const std::vector<double>& scores);

// Maximum-likelihood truth of one instance under the bounds. Among
// likelihood-equal maximizers the smallest admissible cardinality wins
// (tie-set members are only added to reach the lower bound), and equal
// scores resolve by alternative index.
TruthEstimate estimate_truth(const Instance& instance, const ParamVector& params,
                             Bounds bounds);
TruthEstimate estimate_truth(const Instance& instance,
                             const VoterWeights& weights, Bounds bounds);

}  // namespace amle

#endif  // AMLE_TRUTH_MLE_HPP_
