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

// Command-line front end: aggregate, evaluate, simulate, benchmark.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "amle/commands.hpp"

namespace {

void add_amle_flags(CLI::App* cmd, amle::AmleConfig& cfg) {
  cmd->add_option("--tolerance", cfg.tolerance, "Stop when the parameter change is at most this")
      ->capture_default_str();
  cmd->add_option("--max-iter", cfg.max_iterations, "Iteration cap")->capture_default_str();
  cmd->add_flag("--freeze-priors", cfg.freeze_priors, "Keep the prior parameters t fixed");
  cmd->add_option("--clamp", cfg.epsilon_clamp, "Keep estimates inside [c, 1-c]")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-valued ground truth estimation from approval ballots"};
  app.require_subcommand(1);

  amle::AggregateOptions agg;
  std::size_t agg_lower = 0, agg_upper = 0;
  std::string agg_out;
  auto* aggregate = app.add_subcommand("aggregate", "Estimate every instance's ground truth");
  aggregate->add_option("dataset", agg.dataset, "Dataset file (.json or .csv)")->required();
  auto* lower_opt = aggregate->add_option("--lower", agg_lower, "Smallest admissible truth size (default 0)");
  auto* upper_opt = aggregate->add_option("--upper", agg_upper, "Largest admissible truth size (default m)");
  aggregate->add_option("--init", agg.init,
                        "anna-karenina | uniform | random:<seed> | file:<path>")
      ->capture_default_str();
  add_amle_flags(aggregate, agg.amle);
  aggregate->add_flag("--strict", agg.strict, "Reject ballots that omit voters");
  auto* agg_out_opt = aggregate->add_option("--out", agg_out, "Report path");
  aggregate->add_flag("--table", agg.table, "Also print a human-readable table");

  amle::EvaluateOptions eval;
  auto* evaluate = app.add_subcommand("evaluate", "Score estimates against a ground truth");
  evaluate->add_option("estimates", eval.estimates, "Report or estimates file")->required();
  evaluate->add_option("truth", eval.truth, "Dataset or truth file")->required();
  evaluate->add_flag("--json", eval.json, "Emit JSON instead of a table");

  amle::SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Sample a synthetic dataset with its truth");
  simulate->add_option("--m", sim.m, "Alternatives")->capture_default_str();
  simulate->add_option("--n", sim.n, "Voters")->capture_default_str();
  simulate->add_option("--instances", sim.instances, "Instances")->capture_default_str();
  simulate->add_option("--lower", sim.lower, "Smallest truth size")->capture_default_str();
  simulate->add_option("--upper", sim.upper, "Largest truth size")->capture_default_str();
  simulate->add_option("--p", sim.p, "True-positive rate(s), one or one per voter")
      ->delimiter(',');
  simulate->add_option("--q", sim.q, "False-positive rate(s), one or one per voter")
      ->delimiter(',');
  simulate->add_option("--t", sim.t, "Prior inclusion rate(s), one or one per alternative")
      ->delimiter(',');
  simulate->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output path (.json or .csv); stdout if omitted");

  amle::BenchmarkOptions bench;
  std::string bench_out;
  auto* benchmark = app.add_subcommand("benchmark", "Compare methods over random voter batches");
  benchmark->add_option("dataset", bench.dataset, "Dataset with ground truth")->required();
  benchmark->add_option("--batch-sizes", bench.batch_sizes, "Comma-separated voter counts")
      ->delimiter(',')
      ->required();
  benchmark->add_option("--batches", bench.batches, "Batches per size")->capture_default_str();
  benchmark->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();
  benchmark->add_option("--methods", bench.methods,
                        "Subset of amle-constrained,amle-free,modal,majority")
      ->delimiter(',');
  benchmark->add_option("--lower", bench.lower, "Lower bound for constrained methods")
      ->capture_default_str();
  benchmark->add_option("--upper", bench.upper, "Upper bound for constrained methods")
      ->capture_default_str();
  benchmark->add_option("--init", bench.init, "anna-karenina | uniform | random:<seed>")
      ->capture_default_str();
  add_amle_flags(benchmark, bench.amle);
  benchmark->add_flag("--strict", bench.strict, "Reject ballots that omit voters");
  auto* bench_out_opt = benchmark->add_option("--out", bench_out, "Plot data CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? amle::kExitOk : amle::kExitInvalid;
  }

  if (aggregate->parsed()) {
    if (*lower_opt) agg.lower = agg_lower;
    if (*upper_opt) agg.upper = agg_upper;
    if (*agg_out_opt) agg.out = agg_out;
    return amle::cmd_aggregate(agg, std::cout, std::cerr);
  }
  if (evaluate->parsed()) return amle::cmd_evaluate(eval, std::cout, std::cerr);
  if (simulate->parsed()) return amle::cmd_simulate(sim, std::cout, std::cerr);
  if (*bench_out_opt) bench.out = bench_out;
  return amle::cmd_benchmark(bench, std::cout, std::cerr);
}
