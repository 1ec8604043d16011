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

// Shared profiles and reference implementations for tests. The reference
// code here deliberately avoids the library's dynamic programs and score
// shortcuts: it enumerates subsets and counts labels one at a time.

#ifndef AMLE_TESTS_SUPPORT_FIXTURES_HPP_
#define AMLE_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "amle/model.hpp"
#include "amle/random.hpp"

namespace amle::testing {

inline Profile make_profile(std::size_t m, std::size_t n,
                            const std::vector<std::vector<AltSet>>& ballots_by_instance) {
  Profile p;
  for (std::size_t j = 0; j < m; ++j) p.alternatives.push_back({"a" + std::to_string(j + 1), j});
  for (std::size_t i = 0; i < n; ++i) p.voters.push_back("v" + std::to_string(i + 1));
  for (std::size_t z = 0; z < ballots_by_instance.size(); ++z) {
    Instance inst;
    inst.id = "z" + std::to_string(z + 1);
    for (const auto& b : ballots_by_instance[z]) inst.ballots.push_back({make_set(b)});
    p.instances.push_back(std::move(inst));
  }
  return p;
}

// Three voters, five alternatives, four instances.
inline Profile three_voter_profile() {
  // ballots_by_instance[z][i]
  return make_profile(5, 3,
                      {{{0, 3}, {1}, {1, 2, 3}},
                       {{0}, {4}, {1, 2, 4}},
                       {{2}, {3}, {1, 2}},
                       {{0}, {0}, {2}}});
}

inline ParamVector three_voter_init() {
  return {{0.5, 0.5, 0.5}, {0.44, 0.41, 0.32}, {0.5, 0.5, 0.5, 0.5, 0.5}};
}

inline GroundTruth three_voter_first_truths() {
  return {{1, 3}, {1, 4}, {1, 2}, {0, 2}};
}

inline GroundTruth three_voter_converged_truths() {
  return {{1, 2}, {1, 2}, {1, 2}, {2}};
}

// Ten identical voters; approval counts (9, 8, 7, 5, 5) on a..e.
inline Instance ten_voter_instance() {
  Instance inst;
  inst.id = "q";
  for (std::size_t i = 0; i < 10; ++i) {
    AltSet b;
    if (i < 9) b.push_back(0);
    if (i < 8) b.push_back(1);
    if (i < 7) b.push_back(2);
    if (i < 5) b.push_back(3);
    if (i >= 5) b.push_back(4);
    inst.ballots.push_back({make_set(b)});
  }
  return inst;
}

inline ParamVector ten_voter_params() {
  return {std::vector<double>(10, 0.7), std::vector<double>(10, 0.4),
          {0.5, 0.5, 0.5, 0.6, 0.5}};
}

inline AltSet set_from_mask(std::uint64_t mask, std::size_t m) {
  AltSet s;
  for (std::size_t j = 0; j < m; ++j) {
    if (mask >> j & 1U) s.push_back(j);
  }
  return s;
}

// P(lo <= |S| <= hi) with independent inclusions t, by enumeration.
inline double enum_beta(const std::vector<double>& t, std::size_t lo, std::size_t hi) {
  const std::size_t m = t.size();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t k = 0;
    double pr = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1U) {
        ++k;
        pr *= t[j];
      } else {
        pr *= 1.0 - t[j];
      }
    }
    if (lo <= k && k <= hi) total += pr;
  }
  return total;
}

inline std::vector<double> without(const std::vector<double>& t, std::size_t j) {
  std::vector<double> out = t;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

// Probability that the other alternatives complete a set containing j.
inline double enum_alpha_bar(std::size_t j, const std::vector<double>& t, std::size_t l,
                             std::size_t u) {
  if (u == 0) return 0.0;
  return enum_beta(without(t, j), l == 0 ? 0 : l - 1, u - 1);
}

// Probability that the other alternatives complete a set excluding j.
inline double enum_alpha_under(std::size_t j, const std::vector<double>& t, std::size_t l,
                               std::size_t u) {
  return enum_beta(without(t, j), l, u);
}

// ln P(A | S) label by label.
inline double label_loglik(const AltSet& ballot, const AltSet& truth, double p, double q,
                           std::size_t m) {
  double s = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    const bool in_a = std::find(ballot.begin(), ballot.end(), a) != ballot.end();
    const bool in_s = std::find(truth.begin(), truth.end(), a) != truth.end();
    if (in_s) {
      s += std::log(in_a ? p : 1.0 - p);
    } else {
      s += std::log(in_a ? q : 1.0 - q);
    }
  }
  return s;
}

// ln of the constrained prior, or -inf outside the bounds.
inline double enum_prior_log(const AltSet& s, const std::vector<double>& t, std::size_t l,
                             std::size_t u) {
  if (s.size() < l || s.size() > u) return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const bool in = std::find(s.begin(), s.end(), j) != s.end();
    v += std::log(in ? t[j] : 1.0 - t[j]);
  }
  return v - std::log(enum_beta(t, l, u));
}

inline double oracle_instance_loglik(const Instance& inst, const AltSet& s, const ParamVector& th,
                                     std::size_t l, std::size_t u) {
  const std::size_t m = th.t.size();
  double v = enum_prior_log(s, th.t, l, u);
  for (std::size_t i = 0; i < inst.ballots.size(); ++i) {
    v += label_loglik(inst.ballots[i].approved, s, th.p[i], th.q[i], m);
  }
  return v;
}

inline double oracle_total_loglik(const Profile& prof, const GroundTruth& truths,
                                  const ParamVector& th, std::size_t l, std::size_t u) {
  double v = 0.0;
  for (std::size_t z = 0; z < prof.instances.size(); ++z) {
    v += oracle_instance_loglik(prof.instances[z], truths[z], th, l, u);
  }
  return v;
}

struct OracleMax {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<AltSet> argmax;  // every set within tol of best
};

inline OracleMax oracle_truth_mle(const Instance& inst, const ParamVector& th, std::size_t l,
                                  std::size_t u, double tol = 1e-9) {
  const std::size_t m = th.t.size();
  std::vector<std::pair<double, AltSet>> all;
  OracleMax r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    AltSet s = set_from_mask(mask, m);
    if (s.size() < l || s.size() > u) continue;
    const double v = oracle_instance_loglik(inst, s, th, l, u);
    r.best = std::max(r.best, v);
    all.emplace_back(v, std::move(s));
  }
  for (auto& [v, s] : all) {
    if (v >= r.best - tol) r.argmax.push_back(s);
  }
  return r;
}

// Grid maximizer of f on (0,1).
template <typename F>
double grid_argmax(F f, std::size_t points = 100000) {
  double best_x = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < points; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(points);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

// Random instance of a random small profile: n voters, m alternatives,
// ballots with inclusion probability 0.4.
inline Profile random_profile(Rng& rng, std::size_t m, std::size_t n, std::size_t instances) {
  std::vector<std::vector<AltSet>> ballots(instances, std::vector<AltSet>(n));
  for (auto& inst : ballots) {
    for (auto& b : inst) {
      for (std::size_t a = 0; a < m; ++a) {
        if (rng.bernoulli(0.4)) b.push_back(a);
      }
    }
  }
  return make_profile(m, n, ballots);
}

inline ParamVector random_params(Rng& rng, std::size_t m, std::size_t n) {
  ParamVector th;
  for (std::size_t i = 0; i < n; ++i) {
    th.p.push_back(rng.uniform_open(0.02, 0.98));
    th.q.push_back(rng.uniform_open(0.02, 0.98));
  }
  for (std::size_t j = 0; j < m; ++j) th.t.push_back(rng.uniform_open(0.02, 0.98));
  return th;
}

}  // namespace amle::testing

#endif  // AMLE_TESTS_SUPPORT_FIXTURES_HPP_
