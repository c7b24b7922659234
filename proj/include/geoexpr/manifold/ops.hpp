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

#include <type_traits>

#include "geoexpr/manifold/se3.hpp"
#include "geoexpr/manifold/so3.hpp"
#include "geoexpr/manifold/vector.hpp"

namespace geoexpr {

// Group operations -----------------------------------------------------------

[[nodiscard]] inline SO3Rotation compose(const SO3Rotation& a, const SO3Rotation& b) {
  return SO3Rotation{a.matrix() * b.matrix()};
}

[[nodiscard]] inline SE3Transform compose(const SE3Transform& a, const SE3Transform& b) {
  return SE3Transform{compose(a.rotation(), b.rotation()),
                      a.rotation().matrix() * b.translation() + a.translation()};
}

[[nodiscard]] inline SO3Rotation inverse(const SO3Rotation& a) {
  return SO3Rotation{a.matrix().transpose()};
}

[[nodiscard]] inline SE3Transform inverse(const SE3Transform& a) {
  const Eigen::Matrix3d rt = a.rotation().matrix().transpose();
  return SE3Transform{SO3Rotation{rt}, -(rt * a.translation())};
}

[[nodiscard]] inline EuclideanVector rotate(const SO3Rotation& c, const EuclideanVector& v) {
  return EuclideanVector{c.matrix() * v.vector()};
}

[[nodiscard]] inline EuclideanVector transform(const SE3Transform& t, const EuclideanVector& v) {
  return EuclideanVector{t.rotation().matrix() * v.vector() + t.translation()};
}

/// Rotation inverse applied in one step: C^-1 * v without forming C^-1.
[[nodiscard]] inline EuclideanVector inverse_apply(const SO3Rotation& c,
                                                   const EuclideanVector& v) {
  return EuclideanVector{c.matrix().transpose() * v.vector()};
}

/// Transform inverse applied in one step using modified coefficients:
/// R^T (v - t), without forming the inverse transform.
[[nodiscard]] inline EuclideanVector inverse_apply(const SE3Transform& t,
                                                   const EuclideanVector& v) {
  return EuclideanVector{t.rotation().matrix().transpose() * (v.vector() - t.translation())};
}

// Generic exp/log entry points used by templated code.

[[nodiscard]] inline SO3Rotation exp_map(const RotationVector& phi) { return exp_so3(phi); }
[[nodiscard]] inline SE3Transform exp_map(const Twist& xi) { return exp_se3(xi); }
[[nodiscard]] inline RotationVector log_map(const SO3Rotation& c) { return log_so3(c); }
[[nodiscard]] inline Twist log_map(const SE3Transform& t) { return log_se3(t); }

// Boxplus / boxminus: g [+] phi = exp(phi) o g,  g1 [-] g2 = log(g1 o g2^-1).
// The left perturbation convention is fixed library-wide; every local
// Jacobian is defined against it.

[[nodiscard]] inline SO3Rotation boxplus(const SO3Rotation& g, const RotationVector& phi) {
  return compose(exp_so3(phi), g);
}

[[nodiscard]] inline SE3Transform boxplus(const SE3Transform& g, const Twist& xi) {
  return compose(exp_se3(xi), g);
}

[[nodiscard]] inline RotationVector boxminus(const SO3Rotation& a, const SO3Rotation& b) {
  return log_so3(compose(a, inverse(b)));
}

[[nodiscard]] inline Twist boxminus(const SE3Transform& a, const SE3Transform& b) {
  return log_se3(compose(a, inverse(b)));
}

// Value traits ----------------------------------------------------------------

enum class ValueKind { Group, Tangent, Vector };

template <typename V>
struct value_traits;

template <>
struct value_traits<SO3Rotation> {
  static constexpr ValueKind kind = ValueKind::Group;
  static constexpr int tangent_dim = 3;
  using Tangent = RotationVector;
};

template <>
struct value_traits<SE3Transform> {
  static constexpr ValueKind kind = ValueKind::Group;
  static constexpr int tangent_dim = 6;
  using Tangent = Twist;
};

template <>
struct value_traits<RotationVector> {
  static constexpr ValueKind kind = ValueKind::Tangent;
  static constexpr int tangent_dim = 3;
  using Tangent = RotationVector;
};

template <>
struct value_traits<Twist> {
  static constexpr ValueKind kind = ValueKind::Tangent;
  static constexpr int tangent_dim = 6;
  using Tangent = Twist;
};

template <>
struct value_traits<EuclideanVector> {
  static constexpr ValueKind kind = ValueKind::Vector;
  static constexpr int tangent_dim = 3;
  using Tangent = EuclideanVector;
};

template <typename V>
inline constexpr int tangent_dim_v = value_traits<V>::tangent_dim;

template <typename V>
inline constexpr bool is_group_value_v = value_traits<V>::kind == ValueKind::Group;

template <typename V>
inline constexpr bool is_tangent_value_v = value_traits<V>::kind == ValueKind::Tangent;

template <typename V>
inline constexpr bool is_vector_value_v = value_traits<V>::kind == ValueKind::Vector;

/// The tangent type paired with a group type (SO3Rotation -> RotationVector).
template <typename V>
using tangent_of_t = typename value_traits<V>::Tangent;

// Perturbation interface shared by the finite-difference oracle and the
// local-Jacobian contract: x [+] (h * basis_i), differences via [-].

[[nodiscard]] inline RotationVector tangent_from_stacked(const Eigen::Vector3d& v,
                                                         const RotationVector*) {
  return RotationVector{v};
}

[[nodiscard]] inline Twist tangent_from_stacked(const Vector6d& v, const Twist*) {
  return Twist{v};
}

template <typename V>
struct manifold_ops;

template <>
struct manifold_ops<SO3Rotation> {
  static constexpr int dim = 3;
  static SO3Rotation perturb(const SO3Rotation& x, const Eigen::Vector3d& d) {
    return boxplus(x, RotationVector{d});
  }
  static Eigen::Vector3d difference(const SO3Rotation& a, const SO3Rotation& b) {
    return boxminus(a, b).vector();
  }
};

template <>
struct manifold_ops<SE3Transform> {
  static constexpr int dim = 6;
  static SE3Transform perturb(const SE3Transform& x, const Vector6d& d) {
    return boxplus(x, Twist{d});
  }
  static Vector6d difference(const SE3Transform& a, const SE3Transform& b) {
    return boxminus(a, b).stacked();
  }
};

template <>
struct manifold_ops<EuclideanVector> {
  static constexpr int dim = 3;
  static EuclideanVector perturb(const EuclideanVector& x, const Eigen::Vector3d& d) {
    return EuclideanVector{x.vector() + d};
  }
  static Eigen::Vector3d difference(const EuclideanVector& a, const EuclideanVector& b) {
    return a.vector() - b.vector();
  }
};

template <>
struct manifold_ops<RotationVector> {
  static constexpr int dim = 3;
  static RotationVector perturb(const RotationVector& x, const Eigen::Vector3d& d) {
    return RotationVector{x.vector() + d};
  }
  static Eigen::Vector3d difference(const RotationVector& a, const RotationVector& b) {
    return a.vector() - b.vector();
  }
};

template <>
struct manifold_ops<Twist> {
  static constexpr int dim = 6;
  static Twist perturb(const Twist& x, const Vector6d& d) { return x + Twist{d}; }
  static Vector6d difference(const Twist& a, const Twist& b) { return (a - b).stacked(); }
};

}  // namespace geoexpr
