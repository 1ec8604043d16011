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

#include "amle/priors.hpp"

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

namespace amle {
namespace {

TEST(Beta, UnconstrainedIsOne) {
  EXPECT_EQ(beta({0, 4}, std::vector<double>{0.1, 0.2, 0.9, 0.4}), 1.0);
  EXPECT_EQ(beta({0, 9}, std::vector<double>{0.3}), 1.0);
}

TEST(Beta, SmallCases) {
  EXPECT_DOUBLE_EQ(beta({0, 1}, std::vector<double>(4, 0.5)), 0.3125);
  EXPECT_DOUBLE_EQ(beta({1, 2}, std::vector<double>(5, 0.5)), 0.46875);
  EXPECT_EQ(beta({3, 2}, std::vector<double>(5, 0.5)), 0.0);
  EXPECT_EQ(beta({6, 6}, std::vector<double>(5, 0.5)), 0.0);
}

TEST(Beta, MatchesEnumeration) {
  Rng rng(1);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t m = 1 + rng.below(10);
    std::vector<double> t;
    for (std::size_t j = 0; j < m; ++j) t.push_back(rng.uniform_open01());
    const std::size_t l = rng.below(m + 1), u = l + rng.below(m + 1 - l);
    EXPECT_NEAR(beta({l, u}, t), testing::enum_beta(t, l, u), 1e-12);
  }
}

TEST(CardinalityDP, RowsArePoissonBinomial) {
  const std::vector<double> t{0.2, 0.5, 0.9};
  CardinalityDP dp(t, 3);
  EXPECT_DOUBLE_EQ(dp.at(0, 0), 1.0);
  EXPECT_NEAR(dp.at(3, 3), 0.2 * 0.5 * 0.9, 1e-15);
  EXPECT_NEAR(dp.at(3, 0), 0.8 * 0.5 * 0.1, 1e-15);
  EXPECT_NEAR(dp.mass(1, 2), testing::enum_beta(t, 1, 2), 1e-15);
  CardinalityDP truncated(t, 1);
  EXPECT_EQ(truncated.max_count(), 1u);
  EXPECT_NEAR(truncated.mass(0, 3), testing::enum_beta(t, 0, 1), 1e-15);
}

TEST(AlphaBar, FirstAlternativeUniformT) {
  EXPECT_DOUBLE_EQ(alpha_bar(0, {1, 2}, std::vector<double>(5, 0.5)), 0.3125);
}

TEST(AlphaBar, UnconstrainedIsOne) {
  EXPECT_EQ(alpha_bar(2, {0, 4}, std::vector<double>{0.3, 0.1, 0.6, 0.9}), 1.0);
}

TEST(AlphaBar, ThreeAlternatives) {
  EXPECT_DOUBLE_EQ(alpha_bar(0, {1, 2}, std::vector<double>{0.2, 0.5, 0.5}), 0.75);
  EXPECT_THROW(alpha_bar(0, {0, 0}, std::vector<double>{0.2, 0.5}), std::domain_error);
}

TEST(AlphaUnder, FirstAlternativeUniformT) {
  EXPECT_DOUBLE_EQ(alpha_under(0, {1, 2}, std::vector<double>(5, 0.5)), 0.625);
}

TEST(AlphaUnder, UnconstrainedAndForcedMember) {
  EXPECT_EQ(alpha_under(1, {0, 3}, std::vector<double>{0.3, 0.1, 0.6}), 1.0);
  EXPECT_DOUBLE_EQ(alpha_under(0, {1, 1}, std::vector<double>{0.9, 0.5}), 0.5);
  EXPECT_THROW(alpha_under(0, {2, 2}, std::vector<double>{0.2, 0.5}), std::domain_error);
}

TEST(Alpha, MatchEnumerationAndDecomposeBeta) {
  Rng rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t m = 2 + rng.below(9);
    std::vector<double> t;
    for (std::size_t j = 0; j < m; ++j) t.push_back(rng.uniform_open01());
    const std::size_t l = rng.below(m), u = std::max<std::size_t>(1, l + rng.below(m + 1 - l));
    const std::size_t j = rng.below(m);
    const double ab = alpha_bar(j, {l, u}, t);
    const double au = alpha_under(j, {l, u}, t);
    EXPECT_NEAR(ab, testing::enum_alpha_bar(j, t, l, u), 1e-12);
    EXPECT_NEAR(au, testing::enum_alpha_under(j, t, l, u), 1e-12);
    EXPECT_NEAR(beta({l, u}, t), t[j] * ab + (1 - t[j]) * au, 1e-12);
  }
}

TEST(UpdatePrior, ThreeVoterFirstIteration) {
  const GroundTruth s = testing::three_voter_first_truths();
  const std::vector<double> t(5, 0.5);
  EXPECT_EQ(occurrences(0, s), 1u);
  const double got = update_prior(0, s, {1, 2}, t);
  EXPECT_NEAR(got, 0.625 / (3 * 0.3125 + 0.625), 1e-12);
  EXPECT_NEAR(got, 0.4, 1e-12);
  const double grid = testing::grid_argmax(
      [&](double x) { return prior_profile_loglik(x, 0, s, {1, 2}, t); });
  EXPECT_NEAR(got, grid, 1e-3);
}

TEST(UpdatePrior, NeverChosenClampsLow) {
  const GroundTruth s{{1}, {2}};
  EXPECT_EQ(update_prior(0, s, {1, 2}, std::vector<double>(3, 0.5), 1e-4), 1e-4);
}

TEST(UpdatePrior, AlwaysChosenUnconstrainedClampsHigh) {
  const GroundTruth s{{0, 1}, {0}};
  EXPECT_EQ(update_prior(0, s, {0, 3}, std::vector<double>(3, 0.5), 1e-4), 1.0 - 1e-4);
}

TEST(UpdatePrior, MaximizesProfileLikelihood) {
  Rng rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t m = 3 + rng.below(4);
    std::vector<double> t;
    for (std::size_t j = 0; j < m; ++j) t.push_back(rng.uniform_open(0.1, 0.9));
    const std::size_t l = rng.below(2), u = 1 + l + rng.below(m - 1 - l);
    GroundTruth s;
    for (int z = 0; z < 8; ++z) {
      AltSet x;
      const std::size_t k = l + rng.below(u - l + 1);
      for (std::size_t a : rng.sample_without_replacement(m, k)) x.push_back(a);
      s.push_back(make_set(x));
    }
    const std::size_t j = rng.below(m);
    const std::size_t occ = occurrences(j, s);
    if (occ == 0 || occ == s.size()) continue;
    const double got = update_prior(j, s, {l, u}, t);
    const double grid = testing::grid_argmax(
        [&](double x) { return prior_profile_loglik(x, j, s, {l, u}, t); });
    EXPECT_NEAR(got, grid, 1e-3) << "rep " << rep;
  }
}

}  // namespace
}  // namespace amle
