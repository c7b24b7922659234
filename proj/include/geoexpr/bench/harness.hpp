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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace geoexpr::bench {

/// Keeps a value alive against dead-code elimination in timing loops.
template <typename T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

/// Minimum duration of one timed batch. Short batches drown in clock
/// resolution; the floor is overridable through BENCH_BATCH_NS.
[[nodiscard]] inline std::uint64_t batch_floor_ns() {
  if (const char* env = std::getenv("BENCH_BATCH_NS")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::uint64_t>(v);
  }
  return 10000;  // 10 us
}

struct TimingStats {
  double mean_ns = 0.0;
  double stddev_ns = 0.0;
  std::uint64_t batch = 0;
  std::uint64_t batches = 0;
};

/// Warm up, auto-tune the batch size so one measurement exceeds the floor,
/// then time ~`trials` iterations in batches. Mean and standard deviation
/// are over the per-batch per-iteration estimates, with the slowest 5% of
/// batches discarded; on shared machines, scheduler stalls land in whole
/// batches and would otherwise dominate the mean.
template <typename F>
[[nodiscard]] TimingStats time_loop(F&& iteration, std::uint64_t trials) {
  using clock = std::chrono::steady_clock;
  const auto elapsed_ns = [](clock::time_point a, clock::time_point b) {
    return static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
  };

  // Warmup doubles as the batch-size estimate.
  std::uint64_t probe = 32;
  double est_ns = 0.0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    const auto t0 = clock::now();
    for (std::uint64_t i = 0; i < probe; ++i) iteration();
    const auto t1 = clock::now();
    const double total = elapsed_ns(t0, t1);
    if (total > 1000.0) {
      est_ns = total / static_cast<double>(probe);
      break;
    }
    probe *= 4;
  }
  if (est_ns <= 0.0) est_ns = 1.0;

  std::uint64_t batch =
      static_cast<std::uint64_t>(std::ceil(static_cast<double>(batch_floor_ns()) / est_ns));
  if (batch < 1) batch = 1;
  if (batch > trials) batch = trials;
  std::uint64_t batches = trials / batch;
  if (batches < 1) batches = 1;

  std::vector<double> per_iter(batches);
  for (std::uint64_t b = 0; b < batches; ++b) {
    const auto t0 = clock::now();
    for (std::uint64_t i = 0; i < batch; ++i) iteration();
    const auto t1 = clock::now();
    per_iter[b] = elapsed_ns(t0, t1) / static_cast<double>(batch);
  }

  std::sort(per_iter.begin(), per_iter.end());
  std::uint64_t keep = batches - std::max<std::uint64_t>(batches / 20, batches > 1 ? 1 : 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t b = 0; b < keep; ++b) {
    sum += per_iter[b];
    sum_sq += per_iter[b] * per_iter[b];
  }
  const double n = static_cast<double>(keep);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  return TimingStats{mean, std::sqrt(var), batch, keep};
}

}  // namespace geoexpr::bench
