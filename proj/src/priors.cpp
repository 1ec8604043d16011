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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amle {
namespace {

std::vector<double> without(std::span<const double> t, std::size_t j) {
  std::vector<double> out;
  out.reserve(t.size() - 1);
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (h != j) out.push_back(t[h]);
  }
  return out;
}

void check_index(std::size_t j, std::span<const double> t) {
  if (j >= t.size()) throw std::out_of_range("alternative index out of range");
}

}  // namespace

CardinalityDP::CardinalityDP(std::span<const double> t, std::size_t max_count)
    : rows_(t.size() + 1),
      cols_(std::min(max_count, t.size()) + 1),
      table_(rows_ * cols_, 0.0) {
  table_[0] = 1.0;
  for (std::size_t j = 1; j < rows_; ++j) {
    const double tj = t[j - 1];
    const double* prev = &table_[(j - 1) * cols_];
    double* row = &table_[j * cols_];
    row[0] = prev[0] * (1.0 - tj);
    for (std::size_t k = 1; k < cols_; ++k) {
      row[k] = prev[k] * (1.0 - tj) + prev[k - 1] * tj;
    }
  }
}

double CardinalityDP::mass(std::size_t lo, std::size_t hi) const {
  hi = std::min(hi, max_count());
  const double* row = &table_[(rows_ - 1) * cols_];
  double s = 0.0;
  for (std::size_t k = lo; k <= hi; ++k) s += row[k];
  return s;
}

double beta(Bounds bounds, std::span<const double> t) {
  const std::size_t m = t.size();
  if (bounds.lower > bounds.upper || bounds.lower > m) return 0.0;
  if (bounds.lower == 0 && bounds.upper >= m) return 1.0;
  return CardinalityDP(t, bounds.upper).mass(bounds.lower, bounds.upper);
}

double alpha_bar(std::size_t j, Bounds bounds, std::span<const double> t) {
  check_index(j, t);
  if (bounds.upper == 0) {
    throw std::domain_error("alpha_bar: u = 0, alternative can never be included");
  }
  const std::size_t lo = bounds.lower > 0 ? bounds.lower - 1 : 0;
  return beta({lo, bounds.upper - 1}, without(t, j));
}

double alpha_under(std::size_t j, Bounds bounds, std::span<const double> t) {
  check_index(j, t);
  const std::size_t m = t.size();
  if (bounds.lower >= m) {
    throw std::domain_error("alpha_under: l = m, alternative can never be excluded");
  }
  return beta({bounds.lower, std::min(bounds.upper, m - 1)}, without(t, j));
}

std::size_t occurrences(std::size_t j, const GroundTruth& truths) {
  return static_cast<std::size_t>(
      std::count_if(truths.begin(), truths.end(), [j](const AltSet& s) {
        return std::binary_search(s.begin(), s.end(), j);
      }));
}

double update_prior(std::size_t j, const GroundTruth& truths, Bounds bounds,
                    std::span<const double> t, double eps) {
  check_index(j, t);
  const std::size_t occ = occurrences(j, truths);
  const std::size_t total = truths.size();
  // At the two ends the maximizer is the boundary itself; this also avoids
  // evaluating ᾱ (resp. α̲) when the bounds make it undefined.
  if (occ == 0) return clamp_probability(0.0, eps);
  if (occ == total) return clamp_probability(1.0, eps);
  const double ab = alpha_bar(j, bounds, t);
  const double au = alpha_under(j, bounds, t);
  const double num = static_cast<double>(occ) * au;
  const double den = static_cast<double>(total - occ) * ab + num;
  return clamp_probability(num / den, eps);
}

double prior_profile_loglik(double x, std::size_t j, const GroundTruth& truths,
                            Bounds bounds, std::span<const double> t) {
  std::vector<double> tt(t.begin(), t.end());
  tt.at(j) = x;
  const double b = beta(bounds, tt);
  const double occ = static_cast<double>(occurrences(j, truths));
  const double total = static_cast<double>(truths.size());
  return -total * std::log(b) + occ * std::log(x) +
         (total - occ) * std::log(1.0 - x);
}

}  // namespace amle
