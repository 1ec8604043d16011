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

#ifndef AMLE_MODEL_HPP_
#define AMLE_MODEL_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace amle {

// Alternatives are addressed by their 0-based position in the profile's
// alternative list. Every set of alternatives in this library is a sorted,
// duplicate-free vector of such indices.
using AltIndex = std::size_t;
using AltSet = std::vector<AltIndex>;

// Builds a canonical (sorted, unique) AltSet from arbitrary indices.
AltSet make_set(std::initializer_list<AltIndex> indices);
AltSet make_set(std::vector<AltIndex> indices);

// Dense 0/1 membership vector of length m.
std::vector<char> membership_mask(const AltSet& set, std::size_t m);

// |a ∩ b| for canonical sets.
std::size_t intersection_size(const AltSet& a, const AltSet& b);

struct Alternative {
  std::string id;
  std::size_t index = 0;

  bool operator==(const Alternative&) const = default;
};

struct Ballot {
  AltSet approved;

  bool operator==(const Ballot&) const = default;
};

// One question: a ballot for every voter, in voter order.
struct Instance {
  std::string id;
  std::vector<Ballot> ballots;

  bool operator==(const Instance&) const = default;
};

struct Profile {
  std::vector<Alternative> alternatives;
  std::vector<std::string> voters;
  std::vector<Instance> instances;

  std::size_t num_alternatives() const { return alternatives.size(); }
  std::size_t num_voters() const { return voters.size(); }
  std::size_t num_instances() const { return instances.size(); }

  bool operator==(const Profile&) const = default;
};

// Prior cardinality interval [lower, upper] on every ground truth.
struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;

  static Bounds unconstrained(std::size_t m) { return {0, m}; }
  bool admits(std::size_t cardinality) const {
    return lower <= cardinality && cardinality <= upper;
  }

  bool operator==(const Bounds&) const = default;
};

// Per-instance sets of alternatives, indexed like Profile::instances.
using GroundTruth = std::vector<AltSet>;

inline constexpr double kDefaultClamp = 1e-4;

// Projects x onto [eps, 1 - eps].
double clamp_probability(double x, double eps = kDefaultClamp);

// Model parameters at one iteration: voter true-positive rates p,
// false-positive rates q (length n) and prior inclusion probabilities t
// (length m).
struct ParamVector {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> t;

  std::size_t num_voters() const { return p.size(); }
  std::size_t num_alternatives() const { return t.size(); }

  // Packed as (p_1..p_n, q_1..q_n, t_1..t_m).
  std::vector<double> packed() const;
  ParamVector clamped(double eps = kDefaultClamp) const;

  bool operator==(const ParamVector&) const = default;
};

// ℓ∞ distance between the packed forms of two parameter vectors of the same
// shape.
double linf_distance(const ParamVector& a, const ParamVector& b);

// Throws std::domain_error unless every entry lies strictly inside (0,1).
void require_open_unit(const ParamVector& params);

struct Partition {
  AltSet max;
  AltSet tie;
  AltSet min;

  bool operator==(const Partition&) const = default;
};

// Constrained MLE of one instance's ground truth, with the score/threshold
// diagnostics that produced it.
struct TruthEstimate {
  AltSet chosen;
  std::vector<double> scores;
  double threshold = 0.0;
  Partition partition;
  std::size_t admissible_k = 0;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Structural checks; semantic problems are listed, never thrown.
ValidationReport validate_profile(const Profile& profile, Bounds bounds);

// Flattens a ground truth into one string per instance, e.g. "{a2,a4}".
std::string format_set(const Profile& profile, const AltSet& set);

}  // namespace amle

#endif  // AMLE_MODEL_HPP_
