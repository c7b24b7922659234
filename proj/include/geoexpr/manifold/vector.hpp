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
#include <Eigen/Geometry>

#include "geoexpr/manifold/so3.hpp"

namespace geoexpr {

/// A plain R^3 quantity (displacement, velocity, ...).
class EuclideanVector {
 public:
  EuclideanVector() : v_(Eigen::Vector3d::Zero()) {}
  explicit EuclideanVector(const Eigen::Vector3d& v) : v_(v) {}
  EuclideanVector(double x, double y, double z) : v_(x, y, z) {}

  [[nodiscard]] const Eigen::Vector3d& vector() const { return v_; }

  static EuclideanVector Zero() { return EuclideanVector{}; }

  EuclideanVector operator-() const { return EuclideanVector{-v_}; }
  EuclideanVector operator+(const EuclideanVector& o) const { return EuclideanVector{v_ + o.v_}; }
  EuclideanVector operator-(const EuclideanVector& o) const { return EuclideanVector{v_ - o.v_}; }
  EuclideanVector operator*(double s) const { return EuclideanVector{v_ * s}; }
  friend EuclideanVector operator*(double s, const EuclideanVector& v) { return v * s; }

 private:
  Eigen::Vector3d v_;
};

/// Action of an so(3) element on a vector: cross(phi) * v.
[[nodiscard]] inline EuclideanVector apply_so3(const RotationVector& phi,
                                               const EuclideanVector& v) {
  return EuclideanVector{phi.vector().cross(v.vector())};
}

}  // namespace geoexpr
