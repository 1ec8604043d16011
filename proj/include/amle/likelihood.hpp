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

#ifndef AMLE_LIKELIHOOD_HPP_
#define AMLE_LIKELIHOOD_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Two log-likelihood values closer than this are treated as equal.
inline constexpr double kLogLikTieTolerance = 1e-9;

// Thrown when a truth set has zero prior probability under the bounds.
class ImpossibleTruthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ln P(A | S) for one voter:
//   |A∩S| ln p + |A∩S̄| ln q + |Ā∩S| ln(1-p) + |Ā∩S̄| ln(1-q).
// Throws std::domain_error unless p, q ∈ (0,1).
double ballot_loglik(const AltSet& ballot, const AltSet& truth, double p,
                     double q, std::size_t m);

// ln P̃(S) under the cardinality-constrained prior, or std::nullopt when
// |S| falls outside the bounds (the set is impossible).
std::optional<double> prior_logprob(const AltSet& candidate,
                                    std::span<const double> t, Bounds bounds);

// Per-instance term: prior_logprob + Σ_i ballot_loglik. m = params.t.size().
std::optional<double> instance_loglik(const Instance& instance,
                                      const AltSet& truth,
                                      const ParamVector& params, Bounds bounds);

// ln ℒ(A, S, p, q, t) summed over instances in index order. Throws
// ImpossibleTruthError naming the first inadmissible instance.
double total_loglik(const Profile& profile, const GroundTruth& truths,
                    const ParamVector& params, Bounds bounds);

inline constexpr std::size_t kBruteForceMaxAlternatives = 20;

// Every admissible set whose instance log-likelihood is within
// kLogLikTieTolerance of the maximum, in enumeration order (by bitmask).
// Test oracle; throws std::invalid_argument for m > 20.
std::vector<AltSet> brute_force_truth_mle(const Instance& instance,
                                          const ParamVector& params,
                                          Bounds bounds);

}  // namespace amle

#endif  // AMLE_LIKELIHOOD_HPP_
