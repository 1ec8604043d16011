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

#ifndef AMLE_RANDOM_HPP_
#define AMLE_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace amle {

// Mixes a base seed with stream coordinates (batch index, instance index...)
// using the splitmix64 finalizer, so independent streams can be drawn in any
// order or in parallel.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> stream);

// Seeded generator with platform-independent output. The engine is
// std::mt19937_64, whose output sequence the standard fixes; the
// conversions below are ours because the standard distributions are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [0,1), 53-bit resolution.
  double uniform01();
  // Uniform on the open interval (0,1).
  double uniform_open01();
  // Uniform on the open interval (lo, hi).
  double uniform_open(double lo, double hi);
  bool bernoulli(double prob) { return uniform01() < prob; }
  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // k distinct values from [0, n) in draw order (partial Fisher-Yates).
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace amle

#endif  // AMLE_RANDOM_HPP_
