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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoexpr/bench/hand_coded.hpp"

namespace geoexpr::bench {

enum class Experiment { Chain, Imu };

enum class Method { Hand, Forward, TypedForward, Reverse };

[[nodiscard]] std::string_view method_name(Method m);
[[nodiscard]] std::string_view experiment_name(Experiment e);

/// Every method must reproduce the hand-coded values and Jacobians on every
/// trial input to within this bound before timing begins.
inline constexpr double kMaxDeviation = 1e-10;

struct BenchmarkSpec {
  Experiment experiment = Experiment::Chain;
  int n_min = 1;    // chain only
  int n_max = 10;   // chain only; supported range is 1..10
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

/// One CSV row. For the IMU experiment, n is 0.
struct BenchmarkRecord {
  std::string experiment;
  int n = 0;
  std::string method;
  std::uint64_t trials = 0;
  double mean_ns = 0.0;
  double stddev_ns = 0.0;
  double max_abs_dev = 0.0;
};

/// Raised when a method deviates from the hand-coded reference beyond
/// kMaxDeviation; the message carries the offending input serialized
/// row-major with 17 significant digits for replay.
struct DeviationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verify every method against the hand-coded reference on each trial
/// input, then time repeated evaluation per (experiment, N, method) cell.
/// Inputs are deterministic in the seed.
[[nodiscard]] std::vector<BenchmarkRecord> run_benchmarks(const BenchmarkSpec& spec);

/// The correctness sweep alone: no timing. Returns true when every method
/// agrees with the hand-coded reference on every input; logs one line per
/// cell.
[[nodiscard]] bool verify_benchmarks(const BenchmarkSpec& spec, std::ostream& log);

/// Header `experiment,N,method,trials,mean_ns,stddev_ns,max_abs_dev`, then
/// one row per record. Deterministic given (seed, spec) except the timing
/// columns.
void write_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records);

/// Chain-evaluation timings with and without frame tags, for the
/// zero-overhead claim: the framed and unframed instantiations execute the
/// same arithmetic.
struct FrameOverheadStats {
  double framed_eval_ns = 0.0;
  double unframed_eval_ns = 0.0;
  double framed_forward_ns = 0.0;
  double unframed_forward_ns = 0.0;
};

[[nodiscard]] FrameOverheadStats measure_frame_overhead(std::uint64_t seed, std::uint64_t trials);

}  // namespace geoexpr::bench
