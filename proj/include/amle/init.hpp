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

#ifndef AMLE_INIT_HPP_
#define AMLE_INIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amle/kernels.hpp"
#include "amle/model.hpp"

namespace amle {

// |A △ B| / |A ∪ B|; 0 when both sets are empty.
double jaccard_distance(const AltSet& a, const AltSet& b);

// Starting values for the voter parameters; t is chosen separately.
struct VoterInit {
  std::vector<double> p;
  std::vector<double> q;
  // Set when the requested strategy could not be applied as asked.
  std::optional<std::string> warning;
};

struct AnnaKareninaDiagnostics {
  std::vector<double> distances;  // d_i
  std::vector<double> weights;    // w_i
  double w_max = 0.0;
  double w_min = 0.0;
};

// Distance-based initialization: voters whose concatenated ballots are on
// average closer to everyone else's get larger weights. Weights are spread
// between w_min = 1/(n+1) and w_max = n/(n+1) by inverse distance, and each
// w_i becomes p_i = 1/2, q_i = (1 - tanh(w_i/2)) / 2, so the voter's initial
// log-odds weight equals w_i.
//
// Falls back to uniform_init (with a warning) when n < 2 or every voter is
// at the same distance.
VoterInit anna_karenina_init(const Profile& profile,
                             Execution exec = Execution::kParallel,
                             AnnaKareninaDiagnostics* diagnostics = nullptr);

inline constexpr double kUniformP0 = 0.6;
inline constexpr double kUniformQ0 = 0.4;

VoterInit uniform_init(std::size_t n, double p0 = kUniformP0,
                       double q0 = kUniformQ0);

// p_i uniform on (0.5, 1), q_i uniform on (0, 0.5).
VoterInit random_init(std::size_t n, std::uint64_t seed);

inline constexpr double kDefaultPriorT0 = 0.5;

// Assembles a full parameter vector with every t_j = t0.
ParamVector make_params(const VoterInit& init, std::size_t m,
                        double t0 = kDefaultPriorT0);

struct InitStrategy {
  enum class Kind { kAnnaKarenina, kUniform, kRandom };
  Kind kind = Kind::kAnnaKarenina;
  std::uint64_t seed = 0;
  double p0 = kUniformP0;
  double q0 = kUniformQ0;

  // "anna-karenina", "uniform" or "random:<seed>".
  static InitStrategy parse(const std::string& text);
  std::string to_string() const;
};

VoterInit initialize(const Profile& profile, const InitStrategy& strategy,
                     Execution exec = Execution::kParallel);

}  // namespace amle

#endif  // AMLE_INIT_HPP_
