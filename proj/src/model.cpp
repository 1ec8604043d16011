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

#include "amle/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace amle {

AltSet make_set(std::initializer_list<AltIndex> indices) {
  return make_set(std::vector<AltIndex>(indices));
}

AltSet make_set(std::vector<AltIndex> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

std::vector<char> membership_mask(const AltSet& set, std::size_t m) {
  std::vector<char> mask(m, 0);
  for (AltIndex a : set) {
    if (a < m) mask[a] = 1;
  }
  return mask;
}

std::size_t intersection_size(const AltSet& a, const AltSet& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

double clamp_probability(double x, double eps) {
  return std::clamp(x, eps, 1.0 - eps);
}

std::vector<double> ParamVector::packed() const {
  std::vector<double> out;
  out.reserve(p.size() + q.size() + t.size());
  out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), q.begin(), q.end());
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

ParamVector ParamVector::clamped(double eps) const {
  ParamVector out = *this;
  for (auto* v : {&out.p, &out.q, &out.t}) {
    for (double& x : *v) x = clamp_probability(x, eps);
  }
  return out;
}

double linf_distance(const ParamVector& a, const ParamVector& b) {
  if (a.p.size() != b.p.size() || a.q.size() != b.q.size() ||
      a.t.size() != b.t.size()) {
    throw std::invalid_argument("linf_distance: parameter shapes differ");
  }
  const auto pa = a.packed();
  const auto pb = b.packed();
  double d = 0.0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    d = std::max(d, std::abs(pa[k] - pb[k]));
  }
  return d;
}

void require_open_unit(const ParamVector& params) {
  for (const auto* v : {&params.p, &params.q, &params.t}) {
    for (double x : *v) {
      if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("parameter outside the open interval (0,1)");
      }
    }
  }
}

ValidationReport validate_profile(const Profile& profile, Bounds bounds) {
  ValidationReport report;
  auto add = [&report](const std::string& msg) {
    report.violations.push_back(msg);
  };
  const std::size_t m = profile.num_alternatives();
  const std::size_t n = profile.num_voters();

  if (m == 0) add("no alternatives");
  if (n == 0) add("no voters");
  if (profile.instances.empty()) add("no instances");

  if (bounds.lower > bounds.upper) {
    std::ostringstream os;
    os << "l exceeds u (l=" << bounds.lower << ", u=" << bounds.upper << ")";
    add(os.str());
  }
  if (bounds.upper > m) {
    std::ostringstream os;
    os << "u exceeds m (u=" << bounds.upper << ", m=" << m << ")";
    add(os.str());
  }

  std::set<std::string> seen;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& alt = profile.alternatives[j];
    if (alt.index != j) {
      add("alternative '" + alt.id + "' has index " +
          std::to_string(alt.index) + " but sits at position " +
          std::to_string(j));
    }
    if (!seen.insert(alt.id).second) {
      add("duplicate alternative id '" + alt.id + "'");
    }
  }
  seen.clear();
  for (const auto& v : profile.voters) {
    if (!seen.insert(v).second) add("duplicate voter id '" + v + "'");
  }
  seen.clear();

  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    const auto& inst = profile.instances[z];
    const std::string where = "instance '" + inst.id + "'";
    if (!seen.insert(inst.id).second) add("duplicate " + where);
    if (inst.ballots.size() != n) {
      add("ragged ballots: " + where + " has " +
          std::to_string(inst.ballots.size()) + " ballots, expected " +
          std::to_string(n));
    }
    for (std::size_t i = 0; i < inst.ballots.size(); ++i) {
      const auto& approved = inst.ballots[i].approved;
      if (!std::is_sorted(approved.begin(), approved.end()) ||
          std::adjacent_find(approved.begin(), approved.end()) !=
              approved.end()) {
        add("non-canonical ballot: " + where + ", voter " +
            std::to_string(i));
      }
      for (AltIndex a : approved) {
        if (a >= m) {
          add("unknown alternative index " + std::to_string(a) + " in " +
              where + ", voter " + std::to_string(i));
        }
      }
    }
  }
  return report;
}

std::string format_set(const Profile& profile, const AltSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ",";
    out += set[k] < profile.alternatives.size()
               ? profile.alternatives[set[k]].id
               : std::to_string(set[k]);
  }
  return out + "}";
}

}  // namespace amle
