// Copyright 2026 The chandisc Authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chandisc/evaluation.hpp"
#include "chandisc/serialization.hpp"
#include "chandisc/verification.hpp"

namespace {

using namespace chandisc;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCptp = 4;

const char* const kScalarParams[] = {"d", "q1", "q2", "r1", "r2", "mu1", "mu2", "eps1", "eps2", "g", "p"};

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
};

struct FamilyOptions {
  std::string family;
  std::map<std::string, std::optional<double>> scalars;
  std::vector<double> u_phases;
  std::vector<double> weights;

  void attach(CLI::App* cmd) {
    cmd->add_option("family", family,
                    "depolarizing | dephasing | gen-dephasing | amplitude-damping | erasure | "
                    "mixed-unitary-d3 | mixed-unitary-d6")
        ->required();
    for (const char* name : kScalarParams) cmd->add_option(std::string("--") + name, scalars[name]);
    cmd->add_option("--u-phases", u_phases, "eigenphases of the gen-dephasing unitary");
    cmd->add_option("--weights", weights, "three mixed-unitary weights")->expected(3);
  }

  FamilySpec spec() const {
    FamilySpec s;
    s.family = family;
    for (const auto& [name, value] : scalars) {
      if (value) s.params[name] = *value;
    }
    s.u_phases = u_phases;
    if (!weights.empty()) std::copy(weights.begin(), weights.end(), s.weights.begin());
    return s;
  }
};

struct ProbeOptions {
  std::string probe = "single";
  double prior = 0.5;
  int restarts = 32;

  void attach(CLI::App* cmd) {
    cmd->add_option("--probe", probe, "probe class")->capture_default_str();
    cmd->add_option("--prior", prior, "prior probability of the first channel")->capture_default_str();
    cmd->add_option("--restarts", restarts, "optimizer restarts")->capture_default_str();
  }

  OptimizerOptions optimizer(std::uint64_t seed) const {
    OptimizerOptions o;
    o.restarts = restarts;
    o.seed = seed;
    return o;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("failed writing '" + path + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Single-shot discrimination of noisy quantum channels"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for random probes and optimizer restarts");
  app.add_flag("--json", global.json, "machine-readable output");
  app.add_option("--out", global.out, "write output to a file instead of stdout");

  auto* eval = app.add_subcommand("eval", "evaluate a built-in channel pair");
  FamilyOptions eval_family;
  ProbeOptions eval_probe;
  eval_family.attach(eval);
  eval_probe.attach(eval);

  auto* sweep = app.add_subcommand("sweep", "sweep family parameters and write CSV");
  FamilyOptions sweep_family;
  std::vector<std::string> sweep_ranges;
  std::vector<std::string> sweep_probes;
  int sweep_restarts = 32;
  sweep_family.attach(sweep);
  sweep->add_option("--param", sweep_ranges, "name=start:stop:step (once or twice)")->required();
  sweep->add_option("--probe", sweep_probes, "probe classes")->required()->delimiter(',');
  sweep->add_option("--restarts", sweep_restarts, "optimizer restarts")->capture_default_str();

  auto* custom = app.add_subcommand("custom", "evaluate a channel pair read from JSON");
  std::string custom_path;
  ProbeOptions custom_probe;
  custom->add_option("path", custom_path, "JSON file with two channels")->required();
  custom_probe.attach(custom);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  double tolerance_scale = 1.0;
  verify->add_option("--tolerance-scale", tolerance_scale, "multiplier for equality tolerances")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*eval) {
    const auto result = evaluate_family(eval_family.spec(), parse_probe_class(eval_probe.probe), eval_probe.prior,
                                        eval_probe.optimizer(global.seed));
    emit(result_to_json(result).dump(2) + "\n", global.out);
    return kExitOk;
  }

  if (*sweep) {
    SweepSpec spec;
    spec.base = sweep_family.spec();
    for (const auto& r : sweep_ranges) spec.ranges.push_back(parse_sweep_range(r));
    spec.probe_classes = sweep_probes;
    OptimizerOptions opts;
    opts.restarts = sweep_restarts;
    opts.seed = global.seed;
    const auto rows = run_sweep(spec, opts);
    std::ostringstream csv;
    write_sweep_csv(rows, csv);
    emit(csv.str(), global.out);
    return kExitOk;
  }

  if (*custom) {
    const auto [a, b] = load_channel_pair(custom_path);
    const auto result = evaluate_channels(a, b, parse_probe_class(custom_probe.probe), custom_probe.prior,
                                          custom_probe.optimizer(global.seed));
    emit(result_to_json(result).dump(2) + "\n", global.out);
    return kExitOk;
  }

  if (tolerance_scale < 0.0) throw DomainError("--tolerance-scale must be non-negative");
  VerificationOptions vopts;
  vopts.tolerance_scale = tolerance_scale;
  vopts.seed = global.seed;
  const auto reports = run_verification(vopts);
  const auto doc = reports_to_json(reports);
  if (global.json) {
    emit(doc.dump(2) + "\n", global.out);
  } else {
    print_report_table(std::cout, reports);
    if (!global.out.empty()) emit(doc.dump(2) + "\n", global.out);
  }
  return doc["failed"].get<std::size_t>() == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chandisc::CptpError& e) {
    std::cerr << "error: " << e.what() << "\n  sum K^dagger K - I residual: " << e.trace_residual()
              << "\n  min Choi eigenvalue: " << e.choi_min_eigenvalue() << '\n';
    return kExitCptp;
  } catch (const chandisc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const chandisc::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const chandisc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
