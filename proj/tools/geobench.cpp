// Copyright 2026 The geoexpr Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "geoexpr/bench/suite.hpp"

namespace {

geoexpr::bench::Experiment parse_experiment(const std::string& name) {
  if (name == "chain") return geoexpr::bench::Experiment::Chain;
  if (name == "imu") return geoexpr::bench::Experiment::Imu;
  throw CLI::ValidationError("--experiment must be 'chain' or 'imu'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotation-chain and IMU-factor benchmarks against hand-coded references"};
  app.require_subcommand(1);

  std::string experiment = "chain";
  geoexpr::bench::BenchmarkSpec spec;
  std::string out_path;

  CLI::App* bench = app.add_subcommand("bench", "verify against the hand-coded reference, then time");
  bench->add_option("--experiment", experiment, "experiment to run: chain | imu")->required();
  bench->add_option("--n-min", spec.n_min, "smallest chain length (chain only)")
      ->check(CLI::Range(1, 10));
  bench->add_option("--n-max", spec.n_max, "largest chain length (chain only)")
      ->check(CLI::Range(1, 10));
  bench->add_option("--trials", spec.trials, "timed evaluations per cell (default 10000)");
  bench->add_option("--seed", spec.seed, "RNG seed for trial inputs");
  bench->add_option("--out", out_path, "CSV output path; '-' or empty for stdout");

  CLI::App* verify = app.add_subcommand("verify", "correctness sweep only; nonzero exit on deviation");
  verify->add_option("--experiment", experiment,
                     "experiment to verify: chain | imu | all (default all)");
  verify->add_option("--n-min", spec.n_min, "smallest chain length")->check(CLI::Range(1, 10));
  verify->add_option("--n-max", spec.n_max, "largest chain length")->check(CLI::Range(1, 10));
  verify->add_option("--seed", spec.seed, "RNG seed for trial inputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) {
      spec.experiment = parse_experiment(experiment);
      const auto records = geoexpr::bench::run_benchmarks(spec);
      if (out_path.empty() || out_path == "-") {
        geoexpr::bench::write_csv(std::cout, records);
      } else {
        std::ofstream file(out_path);
        if (!file) {
          std::cerr << "cannot open " << out_path << " for writing\n";
          return 1;
        }
        geoexpr::bench::write_csv(file, records);
      }
      return 0;
    }

    // verify
    bool ok = true;
    if (experiment == "all" || experiment == "chain") {
      spec.experiment = geoexpr::bench::Experiment::Chain;
      ok = geoexpr::bench::verify_benchmarks(spec, std::cout) && ok;
    }
    if (experiment == "all" || experiment == "imu") {
      spec.experiment = geoexpr::bench::Experiment::Imu;
      ok = geoexpr::bench::verify_benchmarks(spec, std::cout) && ok;
    }
    if (experiment != "all" && experiment != "chain" && experiment != "imu") {
      std::cerr << "unknown experiment '" << experiment << "'\n";
      return 2;
    }
    return ok ? 0 : 1;
  } catch (const geoexpr::bench::DeviationError& err) {
    std::cerr << "deviation from hand-coded reference: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
}
