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

#include <vector>

#include "geoexpr/manifold.hpp"

// Hand-coded reference implementations of the two benchmark problems,
// written the way one would for production: intermediate products reused,
// -v^x M evaluated as per-column cross products, sub-Jacobians shared.

namespace geoexpr::bench {

/// One rotation-chain trial: p2 = (prod_i C_i) p1.
struct ChainInput {
  std::vector<SO3Rotation> rotations;  // C_1 (outermost) .. C_N
  EuclideanVector p1;
};

/// Value plus the N+1 Jacobians, rotations first (outermost to innermost),
/// then the Jacobian with respect to p1.
struct ChainResult {
  EuclideanVector p2;
  std::vector<Eigen::Matrix3d> jac_rotation;
  Eigen::Matrix3d jac_p1;
};

/// dp2/dC_i = -p2^x C_1 ... C_{i-1}; dp2/dp1 = C_1 ... C_N. The prefix
/// products are computed once and shared; cross-operator products are
/// evaluated columnwise. Buffers in `out` are reused across calls.
void hand_chain(const ChainInput& in, ChainResult& out);

[[nodiscard]] inline ChainResult hand_chain(const ChainInput& in) {
  ChainResult out;
  hand_chain(in, out);
  return out;
}

/// One IMU-residual trial: r = log((C_tilde exp(phi))^-1 o C_wi^-1 C_wj).
struct ImuInput {
  SO3Rotation c_tilde;
  RotationVector phi;
  SO3Rotation c_wi;
  SO3Rotation c_wj;
};

struct ImuResult {
  RotationVector r;
  Eigen::Matrix3d jac_c_tilde;
  Eigen::Matrix3d jac_phi;
  Eigen::Matrix3d jac_c_wi;
  Eigen::Matrix3d jac_c_wj;
  // |r| close to pi sits at the log-map singularity; such records are
  // flagged and excluded from timing statistics.
  bool near_singularity = false;
};

void hand_imu(const ImuInput& in, ImuResult& out);

[[nodiscard]] inline ImuResult hand_imu(const ImuInput& in) {
  ImuResult out;
  hand_imu(in, out);
  return out;
}

}  // namespace geoexpr::bench
