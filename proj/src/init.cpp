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

#include "amle/init.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amle/random.hpp"

namespace amle {

double jaccard_distance(const AltSet& a, const AltSet& b) {
  const std::size_t common = intersection_size(a, b);
  const std::size_t uni = a.size() + b.size() - common;
  if (uni == 0) return 0.0;
  return static_cast<double>(uni - common) / static_cast<double>(uni);
}

VoterInit uniform_init(std::size_t n, double p0, double q0) {
  if (!(p0 > 0.0 && p0 < 1.0 && q0 > 0.0 && q0 < 1.0)) {
    throw std::domain_error("uniform_init: p0 and q0 must lie in (0,1)");
  }
  return {std::vector<double>(n, p0), std::vector<double>(n, q0), std::nullopt};
}

VoterInit random_init(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  VoterInit init;
  init.p.reserve(n);
  init.q.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    init.p.push_back(rng.uniform_open(0.5, 1.0));
    init.q.push_back(rng.uniform_open(0.0, 0.5));
  }
  return init;
}

VoterInit anna_karenina_init(const Profile& profile, Execution exec,
                             AnnaKareninaDiagnostics* diagnostics) {
  const std::size_t n = profile.num_voters();
  const double nn = static_cast<double>(n);
  const double w_max = nn / (1.0 + nn);
  const double w_min = 1.0 / (1.0 + nn);
  const auto fall_back = [&](std::vector<double> d, const char* why) {
    VoterInit init = uniform_init(n);
    init.warning = why;
    if (diagnostics) {
      diagnostics->distances = std::move(d);
      diagnostics->weights.clear();
      for (std::size_t i = 0; i < n; ++i) {
        diagnostics->weights.push_back(std::log(init.p[i] * (1.0 - init.q[i]) /
                                                (init.q[i] * (1.0 - init.p[i]))));
      }
      diagnostics->w_max = w_max;
      diagnostics->w_min = w_min;
    }
    return init;
  };
  if (n < 2) {
    return fall_back(std::vector<double>(n, 0.0),
                     "anna-karenina initialization needs at least two voters; using uniform");
  }
  const std::vector<double> d = distance_sums(profile, exec);
  const double d_max = *std::max_element(d.begin(), d.end());
  const double d_min = *std::min_element(d.begin(), d.end());
  if (d_max == d_min) {
    return fall_back(d, "all voters are equally distant from each other; using uniform "
                        "initialization");
  }

  VoterInit init;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double frac;
    if (d[i] == d_max) {
      frac = 0.0;
    } else if (d[i] == d_min) {
      frac = 1.0;
    } else if (d_min == 0.0) {
      // Limit of the inverse-distance ratio as 1/d_min grows without bound.
      frac = 0.0;
    } else {
      frac = (1.0 / d[i] - 1.0 / d_max) / (1.0 / d_min - 1.0 / d_max);
    }
    w[i] = (w_max - w_min) * frac + w_min;
    const double e = std::exp(w[i]);
    init.p.push_back(0.5);
    init.q.push_back((1.0 - (e - 1.0) / (e + 1.0)) / 2.0);
  }
  if (diagnostics) {
    diagnostics->distances = d;
    diagnostics->weights = w;
    diagnostics->w_max = w_max;
    diagnostics->w_min = w_min;
  }
  return init;
}

ParamVector make_params(const VoterInit& init, std::size_t m, double t0) {
  return {init.p, init.q, std::vector<double>(m, t0)};
}

InitStrategy InitStrategy::parse(const std::string& text) {
  InitStrategy s;
  if (text == "anna-karenina") {
    s.kind = Kind::kAnnaKarenina;
  } else if (text == "uniform") {
    s.kind = Kind::kUniform;
  } else if (text.rfind("random:", 0) == 0) {
    s.kind = Kind::kRandom;
    const std::string digits = text.substr(7);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("random initialization needs a numeric seed: " + text);
    }
    s.seed = std::stoull(digits);
  } else {
    throw std::invalid_argument("unknown initialization strategy: " + text);
  }
  return s;
}

std::string InitStrategy::to_string() const {
  switch (kind) {
    case Kind::kAnnaKarenina:
      return "anna-karenina";
    case Kind::kUniform:
      return "uniform";
    case Kind::kRandom:
      return "random:" + std::to_string(seed);
  }
  return "?";
}

VoterInit initialize(const Profile& profile, const InitStrategy& strategy,
                     Execution exec) {
  switch (strategy.kind) {
    case InitStrategy::Kind::kAnnaKarenina:
      return anna_karenina_init(profile, exec);
    case InitStrategy::Kind::kUniform:
      return uniform_init(profile.num_voters(), strategy.p0, strategy.q0);
    case InitStrategy::Kind::kRandom:
      return random_init(profile.num_voters(), strategy.seed);
  }
  throw std::logic_error("unhandled initialization strategy");
}

}  // namespace amle
