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

#include "amle/metrics.hpp"

#include <stdexcept>

namespace amle {
namespace {

void require_same_length(const GroundTruth& a, const GroundTruth& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("estimates and truths cover different numbers of instances");
  }
  if (a.empty()) throw std::invalid_argument("no instances to evaluate");
}

}  // namespace

ThieleWeights ThieleWeights::harmonic(std::size_t m) {
  ThieleWeights tw;
  tw.w.assign(m + 1, 0.0);
  for (std::size_t c = 1; c <= m; ++c) {
    tw.w[c] = tw.w[c - 1] + 1.0 / static_cast<double>(m + 1 - c);
  }
  return tw;
}

void ThieleWeights::validate(std::size_t m) const {
  if (w.size() != m + 1) throw std::invalid_argument("Thiele weights need m + 1 entries");
  if (w[0] != 0.0) throw std::invalid_argument("Thiele weight w_0 must be 0");
  for (std::size_t c = 1; c < w.size(); ++c) {
    if (w[c] < w[c - 1]) throw std::invalid_argument("Thiele weights must be nondecreasing");
  }
}

double hamming_accuracy(const GroundTruth& estimates, const GroundTruth& truth,
                        std::size_t m) {
  require_same_length(estimates, truth);
  if (m == 0) throw std::invalid_argument("hamming_accuracy: m must be positive");
  double agree = 0.0;
  for (std::size_t z = 0; z < truth.size(); ++z) {
    const std::size_t both = intersection_size(estimates[z], truth[z]);
    const std::size_t either = estimates[z].size() + truth[z].size() - both;
    agree += static_cast<double>(both + (m - either));
  }
  return agree / (static_cast<double>(m) * static_cast<double>(truth.size()));
}

double subset_accuracy(const GroundTruth& estimates, const GroundTruth& truth) {
  require_same_length(estimates, truth);
  std::size_t hits = 0;
  for (std::size_t z = 0; z < truth.size(); ++z) {
    if (estimates[z] == truth[z]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double harmonic_accuracy(const GroundTruth& estimates, const GroundTruth& truth,
                         std::size_t m, const std::optional<ThieleWeights>& weights,
                         bool normalized) {
  require_same_length(estimates, truth);
  const ThieleWeights tw = weights ? *weights : ThieleWeights::harmonic(m);
  tw.validate(m);
  double total = 0.0;
  for (std::size_t z = 0; z < truth.size(); ++z) {
    const double score = tw.w.at(intersection_size(estimates[z], truth[z]));
    if (!normalized) {
      total += score;
      continue;
    }
    const double best = tw.w.at(truth[z].size());
    if (best > 0.0) {
      total += score / best;
    } else {
      total += estimates[z].empty() ? 1.0 : 0.0;
    }
  }
  return total / static_cast<double>(truth.size());
}

MetricTable evaluate_all(const GroundTruth& estimates, const GroundTruth& truth,
                         std::size_t m) {
  return {hamming_accuracy(estimates, truth, m), subset_accuracy(estimates, truth),
          harmonic_accuracy(estimates, truth, m),
          harmonic_accuracy(estimates, truth, m, std::nullopt, true)};
}

}  // namespace amle
