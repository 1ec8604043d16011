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

#ifndef AMLE_PRIORS_HPP_
#define AMLE_PRIORS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Distribution of the number of included alternatives when alternative j is
// included independently with probability t[j] (a Poisson-binomial law).
//
// Row j of the table holds P(exactly k of the first j alternatives are
// included) for k = 0..max_count; counts above max_count are not stored.
// Filling the table costs O(m * max_count).
class CardinalityDP {
 public:
  CardinalityDP(std::span<const double> t, std::size_t max_count);

  std::size_t num_alternatives() const { return rows_ - 1; }
  std::size_t max_count() const { return cols_ - 1; }

  double at(std::size_t j, std::size_t k) const { return table_[j * cols_ + k]; }

  // P(lo <= |S| <= hi) over all m alternatives; hi is truncated to
  // max_count().
  double mass(std::size_t lo, std::size_t hi) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
};

// β(l,u,t): probability that an independent-Bernoulli(t) set has a size in
// [l,u]. Exactly 1 for the unconstrained bounds (0,m); 0 when l > u.
double beta(Bounds bounds, std::span<const double> t);

// P(l <= |S| <= u | a_j ∈ S): β((l-1)^+, u-1) over the other alternatives.
// Throws std::domain_error when u = 0.
double alpha_bar(std::size_t j, Bounds bounds, std::span<const double> t);

// P(l <= |S| <= u | a_j ∉ S): β(l, min(u, m-1)) over the other alternatives.
// Throws std::domain_error when l = m.
double alpha_under(std::size_t j, Bounds bounds, std::span<const double> t);

// Number of instances whose truth contains alternative j.
std::size_t occurrences(std::size_t j, const GroundTruth& truths);

// Closed-form maximizer of the prior log-likelihood in t_j with the other
// coordinates held fixed. With β = x ᾱ_j + (1 - x) α̲_j the stationary point
// of prior_profile_loglik is
//   occ α̲_j / ((L - occ) ᾱ_j + occ α̲_j),
// clamped to [eps, 1 - eps]. Note that ᾱ_j weights the absent count: a
// constraint that makes including j cheap (large ᾱ_j) pulls t_j down.
double update_prior(std::size_t j, const GroundTruth& truths, Bounds bounds,
                    std::span<const double> t, double eps = kDefaultClamp);

// The one-dimensional objective that update_prior maximizes:
//   -L ln β(t_j = x) + occ ln x + (L - occ) ln(1 - x).
double prior_profile_loglik(double x, std::size_t j, const GroundTruth& truths,
                            Bounds bounds, std::span<const double> t);

}  // namespace amle

#endif  // AMLE_PRIORS_HPP_
