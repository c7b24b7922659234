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

#include <Eigen/QR>

#include <random>

#include "geoexpr/manifold/ops.hpp"

namespace geoexpr {

/// Rotation uniformly distributed on SO(3) (Haar measure), deterministic for
/// a fixed generator state. Implemented as the QR factor of a Gaussian matrix
/// with the sign convention fixed, reflected into det +1 if needed.
template <typename Rng>
[[nodiscard]] SO3Rotation random_rotation(Rng& rng) {
  std::normal_distribution<double> gauss{0.0, 1.0};
  Eigen::Matrix3d a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = gauss(rng);
    }
  }
  const Eigen::HouseholderQR<Eigen::Matrix3d> qr(a);
  Eigen::Matrix3d q = qr.householderQ();
  const Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0.0) q.col(2) = -q.col(2);
  return SO3Rotation{q};
}

/// Vector with i.i.d. entries uniform in [-bound, bound].
template <typename Rng>
[[nodiscard]] Eigen::Vector3d random_vector3(Rng& rng, double bound = 1.0) {
  std::uniform_real_distribution<double> uni{-bound, bound};
  return {uni(rng), uni(rng), uni(rng)};
}

/// Rotation vector with norm strictly below the given bound (default keeps a
/// margin inside the injectivity radius pi).
template <typename Rng>
[[nodiscard]] RotationVector random_rotation_vector(Rng& rng, double max_norm = M_PI - 1e-3) {
  std::uniform_real_distribution<double> uni{-1.0, 1.0};
  Eigen::Vector3d v{uni(rng), uni(rng), uni(rng)};
  const double n = v.norm();
  if (n < 1e-12) return RotationVector::Zero();
  std::uniform_real_distribution<double> radius{0.0, max_norm};
  return RotationVector{v / n * radius(rng)};
}

template <typename Rng>
[[nodiscard]] SE3Transform random_transform(Rng& rng, double translation_bound = 1.0) {
  return SE3Transform{random_rotation(rng), random_vector3(rng, translation_bound)};
}

template <typename Rng>
[[nodiscard]] Twist random_twist(Rng& rng, double max_angle = M_PI - 1e-3) {
  return Twist{random_rotation_vector(rng, max_angle).vector(), random_vector3(rng)};
}

}  // namespace geoexpr
