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

#include "amle/baselines.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace amle {

std::vector<std::size_t> approval_counts(const Instance& instance, std::size_t m) {
  std::vector<std::size_t> counts(m, 0);
  for (const auto& b : instance.ballots) {
    for (AltIndex a : b.approved) counts.at(a) += 1;
  }
  return counts;
}

AltSet modal_rule(const Instance& instance) {
  if (instance.ballots.empty()) {
    throw std::invalid_argument("modal_rule: instance has no ballots");
  }
  // std::map orders AltSets lexicographically, so the first strict maximum
  // in iteration order is the documented tie-break.
  std::map<AltSet, std::size_t> freq;
  for (const auto& b : instance.ballots) ++freq[b.approved];
  auto best = freq.begin();
  for (auto it = freq.begin(); it != freq.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

AltSet majority_rule(const Instance& instance, Bounds bounds, std::size_t m) {
  const std::size_t n = instance.ballots.size();
  if (n == 0) throw std::invalid_argument("majority_rule: instance has no ballots");
  const auto counts = approval_counts(instance, m);

  std::vector<AltIndex> order(m);
  std::iota(order.begin(), order.end(), AltIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](AltIndex a, AltIndex b) { return counts[a] > counts[b]; });

  // Strict majorities form a prefix of the count order.
  std::size_t k = 0;
  while (k < m && 2 * counts[order[k]] > n) ++k;
  if (k == 0) k = 1;
  k = std::min(k, bounds.upper);
  k = std::max(k, bounds.lower);
  k = std::min(k, m);

  AltSet out(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

GroundTruth apply_modal(const Profile& profile) {
  GroundTruth out;
  out.reserve(profile.instances.size());
  for (const auto& inst : profile.instances) out.push_back(modal_rule(inst));
  return out;
}

GroundTruth apply_majority(const Profile& profile, Bounds bounds) {
  GroundTruth out;
  out.reserve(profile.instances.size());
  for (const auto& inst : profile.instances) {
    out.push_back(majority_rule(inst, bounds, profile.num_alternatives()));
  }
  return out;
}

}  // namespace amle
