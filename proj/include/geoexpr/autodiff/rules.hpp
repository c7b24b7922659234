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

#include "geoexpr/expr/evaluator.hpp"
#include "geoexpr/expr/lazy.hpp"

// The elementary Jacobian table: for every evaluator node kind, the local
// Jacobian of the node's value with respect to each operand, evaluated at
// the cached values. All rules follow the left perturbation convention
// g [+] phi = exp(phi) o g; each is validated against the central
// finite-difference oracle in the permanent test suite.
//
// SO(3) rules (C, v denote operand values, y the cached result):
//   rotate:    d(C v)/dC = -(C v)^x = -y^x,      d(C v)/dv = C
//   compose:   d(C1 C2)/dC1 = I,                 d(C1 C2)/dC2 = C1
//   inverse:   d(C^-1)/dC = -C^-1
//   exp:       d exp(phi)/dphi = J_l(phi)
//   log:       d log(C)/dC = J_l^-1(log C)
//   boxplus:   d(g [+] phi)/dg = exp(phi),       d/dphi = J_l(phi)
//   boxminus:  d(g1 [-] g2)/dg1 = J_l^-1(r),     d/dg2 = -J_l^-1(r) Ad(g1 g2^-1)
// SE(3) rules replace C by Ad(T) and J_l by the se(3) left Jacobian.

namespace geoexpr {

namespace detail {

template <typename Ev>
inline constexpr int node_dim_v = tangent_dim_v<value_t<typename Ev::ExprType>>;

template <int I, typename Ev>
using child_evaluator_t =
    std::conditional_t<I == 0, typename Ev::Child0, typename Ev::Child1>;

template <int I, typename Ev>
inline constexpr int child_dim_v = tangent_dim_v<value_t<child_evaluator_t<I, Ev>>>;

[[nodiscard]] inline DenseMatrix<3, 6> transform_wrt_pose(const Eigen::Vector3d& y) {
  DenseMatrix<3, 6> out;
  out.m.leftCols<3>() = -cross(y);
  out.m.rightCols<3>() = Eigen::Matrix3d::Identity();
  return out;
}

// d(C^-1 p)/dC = y^x C^T, built as one cross product per column.
[[nodiscard]] inline DenseMatrix<3, 3> inverse_rotate_wrt_rotation(const Eigen::Matrix3d& c,
                                                                   const Eigen::Vector3d& y) {
  DenseMatrix<3, 3> out;
  for (int j = 0; j < 3; ++j) {
    out.m.col(j) = y.cross(Eigen::Vector3d{c.row(j).transpose()});
  }
  return out;
}

// d(T^-1 p)/dT = [R^T p^x | -R^T] for the [rotational; translational] layout.
[[nodiscard]] inline DenseMatrix<3, 6> inverse_transform_wrt_pose(const SE3Transform& t,
                                                                  const Eigen::Vector3d& p) {
  const Eigen::Matrix3d rt = t.rotation().matrix().transpose();
  DenseMatrix<3, 6> out;
  out.m.leftCols<3>() = rt * cross(p);
  out.m.rightCols<3>() = -rt;
  return out;
}

}  // namespace detail

/// Local Jacobian of an evaluator node's value with respect to its I-th
/// operand, as a lazy form over the cached values.
template <int I, typename Ev>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE auto elementary_jacobian(const Ev& ev) {
  using E = typename Ev::ExprType;
  using V = value_t<E>;
  constexpr NodeKind k = kind_of_v<E>;
  constexpr int dim = detail::node_dim_v<Ev>;

  if constexpr (Ev::fused_inverse) {
    // Fused inverse-apply nodes differentiate directly with respect to the
    // inverted operand; the inverse itself is never formed.
    using Inner = value_t<typename Ev::Child0>;
    if constexpr (std::is_same_v<Inner, SO3Rotation>) {
      if constexpr (I == 0) {
        return detail::inverse_rotate_wrt_rotation(ev.lhs().value().matrix(),
                                                   ev.value().vector());
      } else {
        return TransposedRef<3, 3>{&ev.lhs().value().matrix()};
      }
    } else {
      if constexpr (I == 0) {
        return detail::inverse_transform_wrt_pose(ev.lhs().value(), ev.rhs().value().vector());
      } else {
        return TransposedRef<3, 3>{&ev.lhs().value().rotation().matrix()};
      }
    }
  } else if constexpr (k == NodeKind::Inverse) {
    if constexpr (std::is_same_v<V, SO3Rotation>) {
      return DenseMatrix<3, 3>{-ev.value().matrix()};
    } else {
      return DenseMatrix<6, 6>{-se3_adjoint(ev.value())};
    }
  } else if constexpr (k == NodeKind::ExpMap) {
    if constexpr (std::is_same_v<V, SO3Rotation>) {
      return DenseMatrix<3, 3>{so3_left_jacobian(ev.child().value().vector())};
    } else {
      return DenseMatrix<6, 6>{se3_left_jacobian(ev.child().value())};
    }
  } else if constexpr (k == NodeKind::LogMap) {
    if constexpr (std::is_same_v<V, RotationVector>) {
      return DenseMatrix<3, 3>{so3_left_jacobian_inverse(ev.value().vector())};
    } else {
      return DenseMatrix<6, 6>{se3_left_jacobian_inverse(ev.value())};
    }
  } else if constexpr (k == NodeKind::Negate) {
    return ScaledIdentity<dim>{-1.0};
  } else if constexpr (k == NodeKind::Scale) {
    return ScaledIdentity<dim>{ev.factor()};
  } else if constexpr (k == NodeKind::Compose) {
    if constexpr (I == 0) {
      return IdentityMatrix<dim>{};
    } else if constexpr (std::is_same_v<V, SO3Rotation>) {
      return MatrixRef<3, 3>{&ev.lhs().value().matrix()};
    } else {
      return DenseMatrix<6, 6>{se3_adjoint(ev.lhs().value())};
    }
  } else if constexpr (k == NodeKind::Rotate) {
    if constexpr (I == 0) {
      return CrossMatrix{-ev.value().vector()};
    } else {
      return MatrixRef<3, 3>{&ev.lhs().value().matrix()};
    }
  } else if constexpr (k == NodeKind::Transform) {
    if constexpr (I == 0) {
      return detail::transform_wrt_pose(ev.value().vector());
    } else {
      return MatrixRef<3, 3>{&ev.lhs().value().rotation().matrix()};
    }
  } else if constexpr (k == NodeKind::Sum) {
    return IdentityMatrix<dim>{};
  } else if constexpr (k == NodeKind::Difference) {
    if constexpr (I == 0) {
      return IdentityMatrix<dim>{};
    } else {
      return ScaledIdentity<dim>{-1.0};
    }
  } else if constexpr (k == NodeKind::BoxPlus) {
    if constexpr (I == 0) {
      if constexpr (std::is_same_v<V, SO3Rotation>) {
        return MatrixRef<3, 3>{&ev.exp_of_tangent().matrix()};
      } else {
        return DenseMatrix<6, 6>{se3_adjoint(ev.exp_of_tangent())};
      }
    } else {
      if constexpr (std::is_same_v<V, SO3Rotation>) {
        return DenseMatrix<3, 3>{so3_left_jacobian(ev.rhs().value().vector())};
      } else {
        return DenseMatrix<6, 6>{se3_left_jacobian(ev.rhs().value())};
      }
    }
  } else {
    static_assert(k == NodeKind::BoxMinus);
    if constexpr (std::is_same_v<V, RotationVector>) {
      const Eigen::Matrix3d jli = so3_left_jacobian_inverse(ev.value().vector());
      if constexpr (I == 0) {
        return DenseMatrix<3, 3>{jli};
      } else {
        return DenseMatrix<3, 3>{-jli * ev.relative().matrix()};
      }
    } else {
      const Matrix6d jli = se3_left_jacobian_inverse(ev.value());
      if constexpr (I == 0) {
        return DenseMatrix<6, 6>{jli};
      } else {
        return DenseMatrix<6, 6>{-jli * se3_adjoint(ev.relative())};
      }
    }
  }
}

}  // namespace geoexpr
