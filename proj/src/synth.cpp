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

#include "amle/synth.hpp"

#include <stdexcept>
#include <string>

#include "amle/priors.hpp"
#include "amle/random.hpp"

namespace amle {

SynthSpec SynthSpec::homogeneous(std::size_t m, std::size_t n,
                                 std::size_t instances, Bounds bounds, double p,
                                 double q, double t, std::uint64_t seed) {
  SynthSpec s;
  s.m = m;
  s.n = n;
  s.instances = instances;
  s.bounds = bounds;
  s.t.assign(m, t);
  s.voters.assign(n, {p, q});
  s.seed = seed;
  return s;
}

void SynthSpec::validate() const {
  if (m == 0 || n == 0 || instances == 0) {
    throw std::invalid_argument("synthetic data needs m, n and L of at least 1");
  }
  if (bounds.lower > bounds.upper || bounds.upper > m) {
    throw std::invalid_argument("synthetic data needs 0 <= l <= u <= m");
  }
  if (t.size() != m) throw std::invalid_argument("prior vector t must have m entries");
  for (double tj : t) {
    if (!(tj > 0.0 && tj < 1.0)) throw std::domain_error("prior t_j must lie in (0,1)");
  }
  if (voters.size() != n) throw std::invalid_argument("need one (p,q) pair per voter");
  for (const auto& [p, q] : voters) {
    if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) {
      throw std::domain_error("voter rates must lie in [0,1]");
    }
  }
}

GroundTruth sample_truths(const SynthSpec& spec) {
  spec.validate();
  if (beta(spec.bounds, spec.t) < kMinAcceptance) {
    throw std::domain_error(
        "constrained prior acceptance probability is below 1e-6; rejection "
        "sampling is impractical and direct conditional sampling is needed");
  }
  GroundTruth truths(spec.instances);
  for (std::size_t z = 0; z < spec.instances; ++z) {
    Rng rng(derive_seed(spec.seed, {0, z}));
    for (;;) {
      AltSet s;
      for (std::size_t j = 0; j < spec.m; ++j) {
        if (rng.bernoulli(spec.t[j])) s.push_back(j);
      }
      if (spec.bounds.admits(s.size())) {
        truths[z] = std::move(s);
        break;
      }
    }
  }
  return truths;
}

Profile sample_profile(const SynthSpec& spec, const GroundTruth& truths) {
  spec.validate();
  if (truths.size() != spec.instances) {
    throw std::invalid_argument("sample_profile: one truth set per instance expected");
  }
  Profile profile;
  for (std::size_t j = 0; j < spec.m; ++j) {
    profile.alternatives.push_back({"a" + std::to_string(j + 1), j});
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    profile.voters.push_back("v" + std::to_string(i + 1));
  }
  profile.instances.resize(spec.instances);
  for (std::size_t z = 0; z < spec.instances; ++z) {
    Rng rng(derive_seed(spec.seed, {1, z}));
    Instance& inst = profile.instances[z];
    inst.id = "z" + std::to_string(z + 1);
    inst.ballots.resize(spec.n);
    const auto in_truth = membership_mask(truths[z], spec.m);
    for (std::size_t i = 0; i < spec.n; ++i) {
      const auto [p, q] = spec.voters[i];
      for (std::size_t j = 0; j < spec.m; ++j) {
        if (rng.bernoulli(in_truth[j] ? p : q)) inst.ballots[i].approved.push_back(j);
      }
    }
  }
  return profile;
}

}  // namespace amle
