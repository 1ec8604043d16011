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

#include "amle/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "amle/baselines.hpp"
#include "amle/random.hpp"
#include "amle/reliability.hpp"
#include "amle/synth.hpp"
#include "amle/truth_mle.hpp"

namespace amle {
namespace {

using Json = nlohmann::ordered_json;

Json id_list(const Profile& profile, const AltSet& set) {
  Json out = Json::array();
  for (AltIndex a : set) out.push_back(profile.alternatives.at(a).id);
  return out;
}

std::string set_text(const Profile& profile, const AltSet& set) {
  return format_set(profile, set);
}

Bounds resolve_bounds(const AggregateOptions& options, std::size_t m) {
  return {options.lower.value_or(0), options.upper.value_or(m)};
}

std::vector<double> expand(const std::vector<double>& values, std::size_t count,
                           const char* name) {
  if (values.size() == 1) return std::vector<double>(count, values.front());
  if (values.size() == count) return values;
  throw std::invalid_argument(std::string("--") + name + " needs 1 or " +
                              std::to_string(count) + " values");
}

// A file of named sets (estimates or truths) for evaluate.
struct SetFile {
  std::vector<std::string> alternatives;
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
};

SetFile load_set_file(const std::string& path, bool prefer_truth) {
  SetFile f;
  if (format_for_path(path) == DatasetFormat::kCsv) {
    const Dataset ds = parse_dataset_csv(read_file(path));
    if (!ds.ground_truth) throw DatasetError("'" + path + "' has no ground truth rows");
    for (const auto& a : ds.profile.alternatives) f.alternatives.push_back(a.id);
    for (std::size_t z = 0; z < ds.profile.instances.size(); ++z) {
      std::vector<std::string> ids;
      for (AltIndex a : ds.ground_truth->at(z)) ids.push_back(ds.profile.alternatives[a].id);
      f.sets.emplace_back(ds.profile.instances[z].id, std::move(ids));
    }
    return f;
  }
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DatasetError("'" + path + "': malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw DatasetError("'" + path + "' must hold a JSON object");
  if (j.contains("alternatives")) {
    for (const auto& a : j["alternatives"]) f.alternatives.push_back(a.get<std::string>());
  }
  const char* first = prefer_truth ? "ground_truth" : "estimates";
  const char* second = prefer_truth ? "estimates" : "ground_truth";
  const Json* sets = nullptr;
  if (j.contains(first)) {
    sets = &j[first];
  } else if (j.contains(second)) {
    sets = &j[second];
  } else {
    throw DatasetError("'" + path + "' has neither \"estimates\" nor \"ground_truth\"");
  }
  if (!sets->is_object()) throw DatasetError("'" + path + "': sets must map instance ids to lists");
  for (const auto& [id, list] : sets->items()) {
    std::vector<std::string> ids;
    for (const auto& a : list) ids.push_back(a.get<std::string>());
    f.sets.emplace_back(id, std::move(ids));
  }
  return f;
}

double metric_value(const MetricTable& t, const std::string& metric) {
  if (metric == "hamming") return t.hamming;
  if (metric == "zero_one") return t.zero_one;
  if (metric == "harmonic") return t.harmonic;
  if (metric == "harmonic_normalized") return t.harmonic_normalized;
  throw std::invalid_argument("unknown metric " + metric);
}

Profile restrict_voters(const Profile& profile, std::vector<std::size_t> voters) {
  std::sort(voters.begin(), voters.end());
  Profile sub;
  sub.alternatives = profile.alternatives;
  for (std::size_t i : voters) sub.voters.push_back(profile.voters[i]);
  sub.instances.reserve(profile.instances.size());
  for (const auto& inst : profile.instances) {
    Instance s;
    s.id = inst.id;
    for (std::size_t i : voters) s.ballots.push_back(inst.ballots[i]);
    sub.instances.push_back(std::move(s));
  }
  return sub;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::optional<std::string> resolve_output_path(const std::optional<std::string>& explicit_path,
                                               const std::string& default_name) {
  if (explicit_path) return explicit_path;
  if (const char* dir = std::getenv(kReportDirEnv); dir && *dir) {
    return (std::filesystem::path(dir) / default_name).string();
  }
  return std::nullopt;
}

ParamVector initial_parameters(const Profile& profile, const std::string& init_spec,
                               std::vector<std::string>* warnings) {
  const std::size_t m = profile.num_alternatives();
  if (init_spec.rfind("file:", 0) == 0) {
    const std::string path = init_spec.substr(5);
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw DatasetError("'" + path + "': malformed JSON: " + e.what());
    }
    ParamVector params;
    try {
      params.p = j.at("p").get<std::vector<double>>();
      params.q = j.at("q").get<std::vector<double>>();
      params.t = j.contains("t") ? j["t"].get<std::vector<double>>()
                                 : std::vector<double>(m, kDefaultPriorT0);
    } catch (const Json::exception& e) {
      throw DatasetError("'" + path + "': " + e.what());
    }
    if (params.p.size() != profile.num_voters() || params.q.size() != profile.num_voters() ||
        params.t.size() != m) {
      throw DatasetError("'" + path + "': parameter lengths do not match the dataset");
    }
    require_open_unit(params);
    return params;
  }
  const VoterInit init = initialize(profile, InitStrategy::parse(init_spec));
  if (init.warning && warnings) warnings->push_back(*init.warning);
  return make_params(init, m);
}

RunReport build_report(const Dataset& dataset, Bounds bounds, const AggregateOptions& options,
                       const AmleResult& result) {
  const Profile& profile = dataset.profile;
  Json j;
  j["config"] = Json{{"lower", bounds.lower},
                     {"upper", bounds.upper},
                     {"init", options.init},
                     {"tolerance", options.amle.tolerance},
                     {"max_iterations", options.amle.max_iterations},
                     {"freeze_priors", options.amle.freeze_priors},
                     {"epsilon_clamp", options.amle.epsilon_clamp}};
  Json alts = Json::array();
  for (const auto& a : profile.alternatives) alts.push_back(a.id);
  j["alternatives"] = alts;
  j["voters"] = profile.voters;

  Json estimates = Json::object();
  Json details = Json::array();
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    const auto& inst = profile.instances[z];
    estimates[inst.id] = id_list(profile, result.truths[z]);
    const TruthEstimate& est = result.estimates.at(z);
    Json scores = Json::object();
    for (std::size_t a = 0; a < est.scores.size(); ++a) {
      scores[profile.alternatives[a].id] = est.scores[a];
    }
    details.push_back(Json{{"id", inst.id},
                           {"chosen", id_list(profile, est.chosen)},
                           {"scores", scores},
                           {"threshold", est.threshold},
                           {"k", est.admissible_k},
                           {"s_max", id_list(profile, est.partition.max)},
                           {"s_tie", id_list(profile, est.partition.tie)},
                           {"s_min", id_list(profile, est.partition.min)}});
  }
  j["estimates"] = estimates;
  j["instances"] = details;

  const VoterWeights w = voter_weights(result.params);
  Json p = Json::object(), q = Json::object(), weights = Json::object(), t = Json::object();
  for (std::size_t i = 0; i < profile.num_voters(); ++i) {
    p[profile.voters[i]] = result.params.p[i];
    q[profile.voters[i]] = result.params.q[i];
    weights[profile.voters[i]] = w.voter[i];
  }
  for (std::size_t a = 0; a < profile.num_alternatives(); ++a) {
    t[profile.alternatives[a].id] = result.params.t[a];
  }
  j["params"] = Json{{"p", p}, {"q", q}, {"t", t}};
  j["voter_weights"] = weights;

  Json lls = Json::array();
  for (const auto& rec : result.trace.iterations) lls.push_back(rec.loglik);
  j["convergence"] = Json{{"converged", result.converged},
                          {"iterations", result.iterations},
                          {"final_change", result.trace.iterations.back().change},
                          {"log_likelihood", lls}};

  std::optional<MetricTable> metrics;
  if (dataset.ground_truth) {
    metrics = evaluate_all(result.truths, *dataset.ground_truth, profile.num_alternatives());
    j["metrics"] = Json{{"hamming", metrics->hamming},
                        {"zero_one", metrics->zero_one},
                        {"harmonic", metrics->harmonic},
                        {"harmonic_normalized", metrics->harmonic_normalized}};
  }

  std::ostringstream tb;
  tb << "instance        estimate" << (dataset.ground_truth ? "            truth" : "") << "\n";
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    tb << std::left << std::setw(16) << profile.instances[z].id << std::setw(20)
       << set_text(profile, result.truths[z]);
    if (dataset.ground_truth) tb << set_text(profile, dataset.ground_truth->at(z));
    tb << "\n";
  }
  tb << "\nvoter           p          q          weight\n";
  tb << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < profile.num_voters(); ++i) {
    tb << std::left << std::setw(16) << profile.voters[i] << std::setw(11)
       << result.params.p[i] << std::setw(11) << result.params.q[i] << w.voter[i] << "\n";
  }
  tb << "\n" << (result.converged ? "converged" : "not converged") << " after "
     << result.iterations << " iteration(s)\n";
  if (metrics) {
    tb << "\nhamming " << metrics->hamming << "  zero_one " << metrics->zero_one
       << "  harmonic " << metrics->harmonic << "  harmonic_normalized "
       << metrics->harmonic_normalized << "\n";
  }
  return {j.dump(2) + "\n", tb.str()};
}

int cmd_aggregate(const AggregateOptions& options, std::ostream& out, std::ostream& err) {
  Dataset ds;
  Bounds bounds;
  ParamVector init;
  try {
    ds = read_dataset(options.dataset, options.strict);
    for (const auto& w : ds.warnings) err << "warning: " << w << "\n";
    bounds = resolve_bounds(options, ds.profile.num_alternatives());
    const auto report = validate_profile(ds.profile, bounds);
    if (!report.ok()) {
      for (const auto& v : report.violations) err << "error: " << v << "\n";
      return kExitInvalid;
    }
    if (ds.ground_truth) {
      for (std::size_t z = 0; z < ds.ground_truth->size(); ++z) {
        if (!bounds.admits(ds.ground_truth->at(z).size())) {
          err << "warning: ground truth of instance '" << ds.profile.instances[z].id
              << "' lies outside the bounds\n";
        }
      }
    }
    options.amle.validate();
    std::vector<std::string> warnings;
    init = initial_parameters(ds.profile, options.init, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  AmleResult result;
  try {
    result = run_amle(ds.profile, bounds, init, options.amle);
  } catch (const DegenerateTruthError& e) {
    err << "error: degenerate estimate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const RunReport report = build_report(ds, bounds, options, result);
  const std::string stem = std::filesystem::path(options.dataset).stem().string();
  const auto path = resolve_output_path(options.out, stem + ".report.json");
  try {
    if (path) {
      write_file(*path, report.json);
      if (options.table) out << report.table;
      err << "report written to " << *path << "\n";
    } else {
      out << report.json;
      if (options.table) err << report.table;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const SetFile est = load_set_file(options.estimates, false);
    const SetFile tru = load_set_file(options.truth, true);
    const auto& alts = !tru.alternatives.empty() ? tru.alternatives : est.alternatives;
    if (alts.empty()) {
      err << "error: neither file lists its alternatives; m is unknown\n";
      return kExitInvalid;
    }
    std::map<std::string, std::size_t> alt_idx;
    for (std::size_t k = 0; k < alts.size(); ++k) alt_idx.emplace(alts[k], k);

    std::map<std::string, const std::vector<std::string>*> est_by_id;
    for (const auto& [id, s] : est.sets) est_by_id.emplace(id, &s);
    std::set<std::string> tru_ids;
    for (const auto& [id, s] : tru.sets) tru_ids.insert(id);
    std::vector<std::string> mismatch;
    for (const auto& [id, s] : est.sets) {
      if (!tru_ids.count(id)) mismatch.push_back(id);
    }
    for (const auto& [id, s] : tru.sets) {
      if (!est_by_id.count(id)) mismatch.push_back(id);
    }
    if (!mismatch.empty()) {
      err << "error: instance ids differ between the files:";
      for (const auto& id : mismatch) err << " " << id;
      err << "\n";
      return kExitInvalid;
    }

    auto to_set = [&](const std::vector<std::string>& ids) {
      std::vector<AltIndex> v;
      for (const auto& id : ids) {
        const auto it = alt_idx.find(id);
        if (it == alt_idx.end()) throw DatasetError("unknown alternative '" + id + "'");
        v.push_back(it->second);
      }
      return make_set(std::move(v));
    };
    GroundTruth estimates, truth;
    for (const auto& [id, s] : tru.sets) {
      truth.push_back(to_set(s));
      estimates.push_back(to_set(*est_by_id.at(id)));
    }
    const MetricTable t = evaluate_all(estimates, truth, alts.size());
    if (options.json) {
      out << Json{{"hamming", t.hamming},
                  {"zero_one", t.zero_one},
                  {"harmonic", t.harmonic},
                  {"harmonic_normalized", t.harmonic_normalized}}
                 .dump(2)
          << "\n";
    } else {
      out << "metric               value\n";
      for (const auto& name : kBenchmarkMetrics) {
        out << std::left << std::setw(21) << name << format_double(metric_value(t, name)) << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

Dataset simulate_dataset(const SimulateOptions& o) {
  SynthSpec spec;
  spec.m = o.m;
  spec.n = o.n;
  spec.instances = o.instances;
  spec.bounds = {o.lower, o.upper};
  spec.t = expand(o.t, o.m, "t");
  const auto p = expand(o.p, o.n, "p");
  const auto q = expand(o.q, o.n, "q");
  for (std::size_t i = 0; i < o.n; ++i) spec.voters.emplace_back(p[i], q[i]);
  spec.seed = o.seed;
  Dataset ds;
  ds.ground_truth = sample_truths(spec);
  ds.profile = sample_profile(spec, *ds.ground_truth);
  return ds;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  Dataset ds;
  try {
    ds = simulate_dataset(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  try {
    if (options.out.empty()) {
      out << dataset_to_json(ds);
    } else {
      write_dataset(options.out, ds);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

Summary summarize(const std::vector<double>& samples) {
  Summary s;
  if (samples.empty()) return s;
  const double b = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / b;
  double half = 0.0;
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - s.mean) * (x - s.mean);
    half = 1.96 * std::sqrt(ss / (b - 1.0)) / std::sqrt(b);
  }
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  return s;
}

std::vector<BenchmarkRow> run_benchmark(const Dataset& dataset, const BenchmarkOptions& options) {
  if (!dataset.ground_truth) throw std::invalid_argument("benchmark needs a dataset with ground truth");
  const Profile& profile = dataset.profile;
  const std::size_t n = profile.num_voters();
  const std::size_t m = profile.num_alternatives();
  for (const auto& method : options.methods) {
    if (std::find(kBenchmarkMethods.begin(), kBenchmarkMethods.end(), method) ==
        kBenchmarkMethods.end()) {
      throw std::invalid_argument("unknown method '" + method + "'");
    }
  }
  if (options.batches == 0) throw std::invalid_argument("need at least one batch");
  for (std::size_t k : options.batch_sizes) {
    if (k == 0 || k > n) {
      throw std::invalid_argument("batch size " + std::to_string(k) + " exceeds the " +
                                  std::to_string(n) + " available voters");
    }
  }
  const Bounds constrained{options.lower, options.upper};
  if (const auto rep = validate_profile(profile, constrained); !rep.ok()) {
    throw std::invalid_argument(rep.violations.front());
  }
  InitStrategy::parse(options.init);
  options.amle.validate();

  const std::size_t sizes = options.batch_sizes.size();
  const std::size_t jobs = sizes * options.batches;
  // scores[job][method][metric]
  std::vector<std::vector<MetricTable>> scores(jobs);
  std::vector<std::string> errors(jobs);
  std::vector<char> degenerate(jobs, 0);
  AmleConfig amle_config = options.amle;
  amle_config.execution = Execution::kSerial;

  const auto njobs = static_cast<std::ptrdiff_t>(jobs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t jj = 0; jj < njobs; ++jj) {
    const auto job = static_cast<std::size_t>(jj);
    const std::size_t k = options.batch_sizes[job / options.batches];
    const std::size_t b = job % options.batches;
    try {
      Rng rng(derive_seed(options.seed, {k, b}));
      const Profile sub = restrict_voters(profile, rng.sample_without_replacement(n, k));
      const ParamVector init = initial_parameters(sub, options.init);
      for (const auto& method : options.methods) {
        GroundTruth est;
        if (method == "amle-constrained") {
          est = run_amle(sub, constrained, init, amle_config).truths;
        } else if (method == "amle-free") {
          est = run_amle(sub, Bounds::unconstrained(m), init, amle_config).truths;
        } else if (method == "modal") {
          est = apply_modal(sub);
        } else {
          est = apply_majority(sub, constrained);
        }
        scores[job].push_back(evaluate_all(est, *dataset.ground_truth, m));
      }
    } catch (const DegenerateTruthError& e) {
      degenerate[job] = 1;
      errors[job] = e.what();
    } catch (const std::exception& e) {
      errors[job] = e.what();
    }
  }
  for (std::size_t job = 0; job < jobs; ++job) {
    if (errors[job].empty()) continue;
    const std::string where = "batch " + std::to_string(job % options.batches) + " of size " +
                              std::to_string(options.batch_sizes[job / options.batches]) + ": ";
    if (degenerate[job]) throw DegenerateTruthError(where + errors[job]);
    throw std::runtime_error(where + errors[job]);
  }

  std::vector<BenchmarkRow> rows;
  for (std::size_t s = 0; s < sizes; ++s) {
    for (std::size_t mi = 0; mi < options.methods.size(); ++mi) {
      for (const auto& metric : kBenchmarkMetrics) {
        std::vector<double> samples;
        for (std::size_t b = 0; b < options.batches; ++b) {
          samples.push_back(metric_value(scores[s * options.batches + b][mi], metric));
        }
        const Summary sum = summarize(samples);
        rows.push_back({options.methods[mi], options.batch_sizes[s], metric, sum.mean,
                        sum.ci_low, sum.ci_high});
      }
    }
  }
  return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out = "method,n,metric,mean,ci_low,ci_high\n";
  for (const auto& r : rows) {
    out += r.method + "," + std::to_string(r.n) + "," + r.metric + "," + format_double(r.mean) +
           "," + format_double(r.ci_low) + "," + format_double(r.ci_high) + "\n";
  }
  return out;
}

std::string benchmark_table(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "method" << std::setw(6) << "n" << std::setw(21)
     << "metric" << std::setw(24) << "mean" << std::setw(24) << "ci_low"
     << "ci_high\n";
  for (const auto& r : rows) {
    os << std::setw(18) << r.method << std::setw(6) << r.n << std::setw(21) << r.metric
       << std::setw(24) << format_double(r.mean) << std::setw(24) << format_double(r.ci_low)
       << format_double(r.ci_high) << "\n";
  }
  return os.str();
}

std::vector<BenchmarkRow> parse_benchmark_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  if (rows.empty() || rows[0] != std::vector<std::string>{"method", "n", "metric", "mean",
                                                          "ci_low", "ci_high"}) {
    throw DatasetError("not a benchmark table");
  }
  std::vector<BenchmarkRow> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 6) throw DatasetError("benchmark row needs 6 fields");
    BenchmarkRow row;
    row.method = f[0];
    row.n = std::stoull(f[1]);
    row.metric = f[2];
    row.mean = std::stod(f[3]);
    row.ci_low = std::stod(f[4]);
    row.ci_high = std::stod(f[5]);
    out.push_back(row);
  }
  return out;
}

int cmd_benchmark(const BenchmarkOptions& options, std::ostream& out, std::ostream& err) {
  Dataset ds;
  try {
    ds = read_dataset(options.dataset, options.strict);
    for (const auto& w : ds.warnings) err << "warning: " << w << "\n";
    if (!ds.ground_truth) {
      err << "error: benchmark needs a dataset with ground truth\n";
      return kExitInvalid;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::vector<BenchmarkRow> rows;
  try {
    rows = run_benchmark(ds, options);
  } catch (const DegenerateTruthError& e) {
    err << "error: degenerate estimate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  out << benchmark_table(rows);
  const auto path = resolve_output_path(options.out, "benchmark.csv");
  if (path) {
    try {
      write_file(*path, benchmark_csv(rows));
      err << "plot data written to " << *path << "\n";
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitInvalid;
    }
  }
  return kExitOk;
}

}  // namespace amle
