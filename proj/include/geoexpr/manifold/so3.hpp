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

#include <cmath>

namespace geoexpr {

/// Skew-symmetric matrix of a 3-vector, such that cross(v) * w == v x w.
[[nodiscard]] inline Eigen::Matrix3d cross(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  // clang-format off
  m <<    0.0, -v.z(),  v.y(),
        v.z(),    0.0, -v.x(),
       -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

/// Inverse of cross(): extracts the vector from a skew-symmetric matrix.
[[nodiscard]] inline Eigen::Vector3d vee(const Eigen::Matrix3d& m) {
  return {m(2, 1), m(0, 2), m(1, 0)};
}

namespace detail {

// Angles below this switch the Rodrigues/log coefficients to their
// second-order Taylor expansions.
inline constexpr double kSmallAngle = 1e-6;

// Angles above this take the dedicated antipodal branch of the log map.
// The main-branch coefficient theta/(2 sin theta) loses accuracy as sin
// theta shrinks, well before the antipode itself.
inline constexpr double kNearPiAngle = 3.0;

inline double sinc(double theta) {  // sin(t)/t
  if (theta < kSmallAngle) {
    return 1.0 - theta * theta / 6.0;
  }
  return std::sin(theta) / theta;
}

inline double one_minus_cos_over_t2(double theta) {  // (1-cos t)/t^2
  if (theta < kSmallAngle) {
    return 0.5 - theta * theta / 24.0;
  }
  return (1.0 - std::cos(theta)) / (theta * theta);
}

inline double t_minus_sin_over_t3(double theta) {  // (t-sin t)/t^3
  if (theta < kSmallAngle) {
    return 1.0 / 6.0 - theta * theta / 120.0;
  }
  return (theta - std::sin(theta)) / (theta * theta * theta);
}

}  // namespace detail

/// An element of so(3), stored as the minimal R^3 rotation vector
/// (axis times angle, in radians).
class RotationVector {
 public:
  RotationVector() : v_(Eigen::Vector3d::Zero()) {}
  explicit RotationVector(const Eigen::Vector3d& v) : v_(v) {}
  RotationVector(double x, double y, double z) : v_(x, y, z) {}

  [[nodiscard]] const Eigen::Vector3d& vector() const { return v_; }
  [[nodiscard]] double angle() const { return v_.norm(); }

  static RotationVector Zero() { return RotationVector{}; }

  RotationVector operator-() const { return RotationVector{-v_}; }
  RotationVector operator+(const RotationVector& o) const { return RotationVector{v_ + o.v_}; }
  RotationVector operator-(const RotationVector& o) const { return RotationVector{v_ - o.v_}; }
  RotationVector operator*(double s) const { return RotationVector{v_ * s}; }
  friend RotationVector operator*(double s, const RotationVector& p) { return p * s; }

 private:
  Eigen::Vector3d v_;
};

/// An element of SO(3), stored as an orthonormal 3x3 matrix with det +1.
class SO3Rotation {
 public:
  SO3Rotation() : m_(Eigen::Matrix3d::Identity()) {}
  explicit SO3Rotation(const Eigen::Matrix3d& m) : m_(m) {}

  [[nodiscard]] const Eigen::Matrix3d& matrix() const { return m_; }

  static SO3Rotation Identity() { return SO3Rotation{}; }

  /// Deviation from orthonormality and unit determinant, for invariant checks.
  [[nodiscard]] double orthonormality_error() const {
    const double ortho = (m_.transpose() * m_ - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    const double det = std::abs(m_.determinant() - 1.0);
    return std::max(ortho, det);
  }

 private:
  Eigen::Matrix3d m_;
};

/// Exponential map so(3) -> SO(3) by the Rodrigues formula.
[[nodiscard]] inline SO3Rotation exp_so3(const RotationVector& phi) {
  const Eigen::Vector3d& v = phi.vector();
  const double theta = v.norm();
  const double a = detail::sinc(theta);
  const double b = detail::one_minus_cos_over_t2(theta);
  const Eigen::Matrix3d vx = cross(v);
  return SO3Rotation{Eigen::Matrix3d::Identity() + a * vx + b * (vx * vx)};
}

/// Logarithmic map SO(3) -> so(3). The result satisfies |log| <= pi.
///
/// Rotations with angle above detail::kNearPiAngle take a dedicated branch:
/// the axis direction is recovered from the symmetric part of C using its
/// largest diagonal entry, and the overall sign comes from the
/// skew-symmetric part when it carries signal. At the exact antipode the
/// sign is a tie broken so the axis's largest-magnitude component is
/// nonnegative.
[[nodiscard]] inline RotationVector log_so3(const SO3Rotation& rot) {
  const Eigen::Matrix3d& m = rot.matrix();
  const double c = std::clamp((m.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(c);

  if (theta < detail::kSmallAngle) {
    const double coeff = 0.5 * (1.0 + theta * theta / 12.0);
    return RotationVector{coeff * vee(m - m.transpose())};
  }

  if (theta > detail::kNearPiAngle) {
    int k = 0;
    m.diagonal().maxCoeff(&k);
    Eigen::Vector3d axis;
    axis[k] = std::sqrt(std::max((m(k, k) - c) / (1.0 - c), 0.0));
    for (int i = 0; i < 3; ++i) {
      if (i != k) {
        axis[i] = (m(i, k) + m(k, i)) / (2.0 * (1.0 - c) * axis[k]);
      }
    }
    axis.normalize();

    const Eigen::Vector3d skew = vee(m - m.transpose());  // = 2 sin(theta) * axis
    // acos is ill-conditioned at the antipode; the skew magnitude recovers
    // the residual angle to full precision.
    const double residual = std::asin(std::min(0.5 * skew.norm(), 1.0));
    const double angle = M_PI - residual;

    const double along = skew.dot(axis);
    if (std::abs(along) > 1e-10) {
      if (along < 0.0) axis = -axis;
    } else {
      int imax = 0;
      axis.cwiseAbs().maxCoeff(&imax);
      if (axis[imax] < 0.0) axis = -axis;
    }
    return RotationVector{angle * axis};
  }

  // theta/(2 sin theta) with sin taken of the acos result: errors in theta
  // cancel in the ratio while the skew part carries the true magnitude.
  return RotationVector{theta / (2.0 * std::sin(theta)) * vee(m - m.transpose())};
}

/// Left Jacobian of SO(3): relates additive tangent increments to left
/// group perturbations, exp(phi + d) ~ exp(J_l(phi) d) * exp(phi).
[[nodiscard]] inline Eigen::Matrix3d so3_left_jacobian(const Eigen::Vector3d& phi) {
  const double theta = phi.norm();
  const Eigen::Matrix3d px = cross(phi);
  return Eigen::Matrix3d::Identity() + detail::one_minus_cos_over_t2(theta) * px +
         detail::t_minus_sin_over_t3(theta) * (px * px);
}

/// Inverse of the left Jacobian of SO(3).
[[nodiscard]] inline Eigen::Matrix3d so3_left_jacobian_inverse(const Eigen::Vector3d& phi) {
  const double theta = phi.norm();
  const Eigen::Matrix3d px = cross(phi);
  double coeff;
  if (theta < detail::kSmallAngle) {
    coeff = 1.0 / 12.0 + theta * theta / 720.0;
  } else {
    coeff = 1.0 / (theta * theta) -
            (1.0 + std::cos(theta)) / (2.0 * theta * std::sin(theta));
  }
  return Eigen::Matrix3d::Identity() - 0.5 * px + coeff * (px * px);
}

}  // namespace geoexpr
