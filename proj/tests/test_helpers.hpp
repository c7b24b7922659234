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

#include <Eigen/Core>

#include <random>

namespace geoexpr::test {

inline std::mt19937_64 seeded_rng(unsigned seed = 12345) { return std::mt19937_64{seed}; }

template <typename A, typename B>
double max_abs(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Independent matrix exponential by scaling and squaring with a Taylor
/// series. Oracle for the closed-form exp maps; deliberately shares no code
/// with them.
template <int N>
Eigen::Matrix<double, N, N> matexp_taylor(const Eigen::Matrix<double, N, N>& a) {
  using Mat = Eigen::Matrix<double, N, N>;
  int squarings = 0;
  Mat scaled = a;
  while (scaled.cwiseAbs().maxCoeff() > 0.25) {
    scaled /= 2.0;
    ++squarings;
  }
  Mat result = Mat::Identity();
  Mat term = Mat::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = (term * scaled / static_cast<double>(k)).eval();
    result += term;
  }
  for (int i = 0; i < squarings; ++i) {
    result = (result * result).eval();
  }
  return result;
}

}  // namespace geoexpr::test
