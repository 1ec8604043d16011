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

#ifndef AMLE_COMMANDS_HPP_
#define AMLE_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "amle/amle.hpp"
#include "amle/dataset_io.hpp"
#include "amle/init.hpp"
#include "amle/metrics.hpp"

namespace amle {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitDegenerate = 2;

// Environment variable naming the directory that receives reports when no
// explicit output path is given.
inline constexpr const char* kReportDirEnv = "AMLE_REPORT_DIR";

// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

// Where a command writes its file: the explicit path, else
// $AMLE_REPORT_DIR/<default_name>, else nothing (stdout).
std::optional<std::string> resolve_output_path(const std::optional<std::string>& explicit_path,
                                               const std::string& default_name);

// --init values: anna-karenina, uniform, random:<seed>, file:<path>. A file
// holds {"p": [...], "q": [...], "t": [...]} in voter / alternative order;
// "t" is optional and defaults to 0.5.
ParamVector initial_parameters(const Profile& profile, const std::string& init_spec,
                               std::vector<std::string>* warnings = nullptr);

struct AggregateOptions {
  std::string dataset;
  std::optional<std::size_t> lower;  // default 0
  std::optional<std::size_t> upper;  // default m
  std::string init = "anna-karenina";
  AmleConfig amle;
  bool strict = false;
  std::optional<std::string> out;
  bool table = false;
};

struct RunReport {
  std::string json;
  std::string table;
};

RunReport build_report(const Dataset& dataset, Bounds bounds, const AggregateOptions& options,
                       const AmleResult& result);

int cmd_aggregate(const AggregateOptions& options, std::ostream& out, std::ostream& err);

struct EvaluateOptions {
  std::string estimates;
  std::string truth;
  bool json = false;
};

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::size_t m = 5;
  std::size_t n = 76;
  std::size_t instances = 15;
  std::size_t lower = 1;
  std::size_t upper = 2;
  // One value for every voter (alternative), or one value each.
  std::vector<double> p = {0.7};
  std::vector<double> q = {0.4};
  std::vector<double> t = {0.5};
  std::uint64_t seed = 0;
  std::string out;
};

Dataset simulate_dataset(const SimulateOptions& options);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

inline const std::vector<std::string> kBenchmarkMethods = {"amle-constrained", "amle-free",
                                                           "modal", "majority"};
inline const std::vector<std::string> kBenchmarkMetrics = {"hamming", "zero_one", "harmonic",
                                                           "harmonic_normalized"};

struct BenchmarkOptions {
  std::string dataset;
  std::vector<std::size_t> batch_sizes;
  std::size_t batches = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> methods = kBenchmarkMethods;
  std::size_t lower = 1;
  std::size_t upper = 2;
  std::string init = "anna-karenina";
  AmleConfig amle;
  bool strict = false;
  std::optional<std::string> out;
};

struct BenchmarkRow {
  std::string method;
  std::size_t n = 0;
  std::string metric;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  bool operator==(const BenchmarkRow&) const = default;
};

// Mean and 0.95 normal-approximation interval mean ± 1.96 s / √B, with s
// the sample standard deviation; zero width for a single sample.
struct Summary {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};
Summary summarize(const std::vector<double>& samples);

// Per batch size, draws `batches` voter subsets without replacement (batch
// b of size k uses derive_seed(seed, {k, b})) and scores every method on
// every metric. Batches run in parallel; row order is size, method, metric.
std::vector<BenchmarkRow> run_benchmark(const Dataset& dataset, const BenchmarkOptions& options);

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);
std::string benchmark_table(const std::vector<BenchmarkRow>& rows);
std::vector<BenchmarkRow> parse_benchmark_csv(const std::string& text);

int cmd_benchmark(const BenchmarkOptions& options, std::ostream& out, std::ostream& err);

}  // namespace amle

#endif  // AMLE_COMMANDS_HPP_
