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

#include "geoexpr/manifold/so3.hpp"

namespace geoexpr {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// An element of se(3): rotational and translational tangent components.
/// The stacked 6-vector layout is [rotational; translational].
class Twist {
 public:
  Twist() : rot_(Eigen::Vector3d::Zero()), trans_(Eigen::Vector3d::Zero()) {}
  Twist(const Eigen::Vector3d& rotational, const Eigen::Vector3d& translational)
      : rot_(rotational), trans_(translational) {}
  explicit Twist(const Vector6d& stacked)
      : rot_(stacked.head<3>()), trans_(stacked.tail<3>()) {}

  [[nodiscard]] const Eigen::Vector3d& rotational() const { return rot_; }
  [[nodiscard]] const Eigen::Vector3d& translational() const { return trans_; }

  [[nodiscard]] Vector6d stacked() const {
    Vector6d v;
    v << rot_, trans_;
    return v;
  }

  static Twist Zero() { return Twist{}; }

  Twist operator-() const { return {-rot_, -trans_}; }
  Twist operator+(const Twist& o) const { return {rot_ + o.rot_, trans_ + o.trans_}; }
  Twist operator-(const Twist& o) const { return {rot_ - o.rot_, trans_ - o.trans_}; }
  Twist operator*(double s) const { return {rot_ * s, trans_ * s}; }
  friend Twist operator*(double s, const Twist& t) { return t * s; }

 private:
  Eigen::Vector3d rot_;
  Eigen::Vector3d trans_;
};

/// An element of SE(3): a rotation plus a translation.
class SE3Transform {
 public:
  SE3Transform() : t_(Eigen::Vector3d::Zero()) {}
  SE3Transform(const SO3Rotation& rotation, const Eigen::Vector3d& translation)
      : r_(rotation), t_(translation) {}

  [[nodiscard]] const SO3Rotation& rotation() const { return r_; }
  [[nodiscard]] const Eigen::Vector3d& translation() const { return t_; }

  static SE3Transform Identity() { return SE3Transform{}; }

  [[nodiscard]] Eigen::Matrix4d homogeneous() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = r_.matrix();
    m.topRightCorner<3, 1>() = t_;
    return m;
  }

 private:
  SO3Rotation r_;
  Eigen::Vector3d t_;
};

/// Exponential map se(3) -> SE(3), using the so(3) left Jacobian as the
/// V-matrix for the translation.
[[nodiscard]] inline SE3Transform exp_se3(const Twist& xi) {
  const SO3Rotation r = exp_so3(RotationVector{xi.rotational()});
  const Eigen::Vector3d t = so3_left_jacobian(xi.rotational()) * xi.translational();
  return SE3Transform{r, t};
}

/// Logarithmic map SE(3) -> se(3); rotational part satisfies |phi| <= pi.
[[nodiscard]] inline Twist log_se3(const SE3Transform& tf) {
  const RotationVector phi = log_so3(tf.rotation());
  const Eigen::Vector3d rho = so3_left_jacobian_inverse(phi.vector()) * tf.translation();
  return Twist{phi.vector(), rho};
}

/// Adjoint of an SE(3) element with respect to the [rotational; translational]
/// tangent layout.
[[nodiscard]] inline Matrix6d se3_adjoint(const SE3Transform& tf) {
  Matrix6d ad = Matrix6d::Zero();
  const Eigen::Matrix3d& r = tf.rotation().matrix();
  ad.topLeftCorner<3, 3>() = r;
  ad.bottomRightCorner<3, 3>() = r;
  ad.bottomLeftCorner<3, 3>() = cross(tf.translation()) * r;
  return ad;
}

namespace detail {

// Off-diagonal block of the SE(3) left Jacobian (Barfoot's Q matrix).
[[nodiscard]] inline Eigen::Matrix3d se3_left_jacobian_q(const Eigen::Vector3d& phi,
                                                         const Eigen::Vector3d& rho) {
  const double theta = phi.norm();
  const Eigen::Matrix3d px = cross(phi);
  const Eigen::Matrix3d rx = cross(rho);

  double c1, c2, c3;
  if (theta < kSmallAngle) {
    const double t2 = theta * theta;
    c1 = 1.0 / 6.0 - t2 / 120.0;
    c2 = 1.0 / 24.0 - t2 / 720.0;
    c3 = c2 - 3.0 * (-1.0 / 120.0 + t2 / 5040.0);
  } else {
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    const double t4 = t2 * t2;
    const double t5 = t4 * theta;
    const double s = std::sin(theta);
    c1 = (theta - s) / t3;
    c2 = (1.0 - t2 / 2.0 - std::cos(theta)) / t4;
    c3 = c2 - 3.0 * (theta - s - t3 / 6.0) / t5;
  }

  const Eigen::Matrix3d pr = px * rx;
  const Eigen::Matrix3d rp = rx * px;
  const Eigen::Matrix3d prp = pr * px;
  return 0.5 * rx + c1 * (pr + rp + prp) - c2 * (px * pr + rp * px - 3.0 * prp) -
         0.5 * c3 * (prp * px + px * pr * px);
}

}  // namespace detail

/// Left Jacobian of SE(3) for the [rotational; translational] tangent layout.
[[nodiscard]] inline Matrix6d se3_left_jacobian(const Twist& xi) {
  Matrix6d j = Matrix6d::Zero();
  const Eigen::Matrix3d j3 = so3_left_jacobian(xi.rotational());
  j.topLeftCorner<3, 3>() = j3;
  j.bottomRightCorner<3, 3>() = j3;
  j.bottomLeftCorner<3, 3>() = detail::se3_left_jacobian_q(xi.rotational(), xi.translational());
  return j;
}

/// Inverse of the left Jacobian of SE(3).
[[nodiscard]] inline Matrix6d se3_left_jacobian_inverse(const Twist& xi) {
  Matrix6d j = Matrix6d::Zero();
  const Eigen::Matrix3d j3i = so3_left_jacobian_inverse(xi.rotational());
  const Eigen::Matrix3d q = detail::se3_left_jacobian_q(xi.rotational(), xi.translational());
  j.topLeftCorner<3, 3>() = j3i;
  j.bottomRightCorner<3, 3>() = j3i;
  j.bottomLeftCorner<3, 3>() = -j3i * q * j3i;
  return j;
}

}  // namespace geoexpr
