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

#include "amle/truth_mle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace amle {

VoterWeights voter_weights(const ParamVector& params) {
  VoterWeights w;
  const std::size_t n = params.p.size();
  w.voter.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = params.p[i];
    const double q = params.q[i];
    w.voter[i] = std::log(p) + std::log1p(-q) - std::log(q) - std::log1p(-p);
    w.tau += std::log1p(-q) - std::log1p(-p);
  }
  w.prior.resize(params.t.size());
  for (std::size_t j = 0; j < params.t.size(); ++j) {
    w.prior[j] = std::log(params.t[j]) - std::log1p(-params.t[j]);
  }
  return w;
}

ScoreBoard weighted_scores(const Instance& instance, const ParamVector& params) {
  return weighted_scores(instance, voter_weights(params));
}

ScoreBoard weighted_scores(const Instance& instance, const VoterWeights& weights) {
  if (instance.ballots.size() != weights.voter.size()) {
    throw std::invalid_argument("weighted_scores: ballot count differs from voter count");
  }
  ScoreBoard board;
  board.app_w = weights.prior;
  for (std::size_t i = 0; i < instance.ballots.size(); ++i) {
    for (AltIndex a : instance.ballots[i].approved) {
      board.app_w.at(a) += weights.voter[i];
    }
  }
  board.tau = weights.tau;
  board.voter_weights = weights.voter;
  board.prior_weights = weights.prior;
  return board;
}

Partition partition(const ScoreBoard& board, double tie_tolerance) {
  Partition part;
  for (std::size_t j = 0; j < board.app_w.size(); ++j) {
    const double gap = board.app_w[j] - board.tau;
    if (gap > tie_tolerance) {
      part.max.push_back(j);
    } else if (gap < -tie_tolerance) {
      part.min.push_back(j);
    } else {
      part.tie.push_back(j);
    }
  }
  return part;
}

std::vector<AltIndex> score_order(const std::vector<double>& scores) {
  std::vector<AltIndex> order(scores.size());
  std::iota(order.begin(), order.end(), AltIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](AltIndex a, AltIndex b) {
    return scores[a] > scores[b];
  });
  return order;
}

TruthEstimate estimate_truth(const Instance& instance, const ParamVector& params,
                             Bounds bounds) {
  return estimate_truth(instance, voter_weights(params), bounds);
}

TruthEstimate estimate_truth(const Instance& instance,
                             const VoterWeights& weights, Bounds bounds) {
  TruthEstimate est;
  ScoreBoard board = weighted_scores(instance, weights);
  est.partition = partition(board);
  est.threshold = board.tau;

  const std::size_t m = board.app_w.size();
  if (bounds.lower > bounds.upper || bounds.upper > m) {
    throw std::invalid_argument("estimate_truth: invalid bounds");
  }
  // Every S_max member precedes every tie member, which precedes every S_min
  // member, in score order; so the top-k prefix with
  // k = max(l, min(u, k_max)) satisfies both cardinality identities.
  const std::size_t k_max = est.partition.max.size();
  const std::size_t k = std::max(bounds.lower, std::min(bounds.upper, k_max));
  const auto order = score_order(board.app_w);
  est.chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(est.chosen.begin(), est.chosen.end());
  est.admissible_k = k;
  est.scores = std::move(board.app_w);
  return est;
}

}  // namespace amle
