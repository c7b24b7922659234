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

#include <type_traits>

#include "geoexpr/manifold/so3.hpp"

// Lazy matrix forms used for intermediate Jacobians. Structure known at
// compile time is exploited in products: identities vanish without any
// arithmetic, scaled identities stay scalar, and cross-operator factors
// turn into per-column (or per-row) cross products instead of dense 3x3
// builds.

#ifndef GEOEXPR_ALWAYS_INLINE
#if defined(__GNUC__) || defined(__clang__)
#define GEOEXPR_ALWAYS_INLINE __attribute__((always_inline)) inline
#else
#define GEOEXPR_ALWAYS_INLINE inline
#endif
#endif

namespace geoexpr {

/// N x N identity; eliminated from products at compile time.
template <int N>
struct IdentityMatrix {
  static constexpr int kRows = N;
  static constexpr int kCols = N;
};

/// s * Identity; products stay scalar until a dense factor appears.
template <int N>
struct ScaledIdentity {
  static constexpr int kRows = N;
  static constexpr int kCols = N;
  double factor;
};

/// Lazy skew-symmetric matrix a^x. Multiplication evaluates as cross
/// products column- or row-wise; the dense 3x3 form is built only when
/// materialized explicitly.
struct CrossMatrix {
  static constexpr int kRows = 3;
  static constexpr int kCols = 3;
  Eigen::Vector3d axis;
};

template <int R, int C>
struct DenseMatrix {
  static constexpr int kRows = R;
  static constexpr int kCols = C;
  Eigen::Matrix<double, R, C> m;
};

/// Reference to a matrix owned by an evaluator cache entry.
template <int R, int C>
struct MatrixRef {
  static constexpr int kRows = R;
  static constexpr int kCols = C;
  const Eigen::Matrix<double, R, C>* m;
};

/// Transposed view of a cached matrix; products read through the transpose
/// without materializing it.
template <int R, int C>
struct TransposedRef {
  static constexpr int kRows = R;
  static constexpr int kCols = C;
  const Eigen::Matrix<double, C, R>* m;
};

namespace detail {

template <typename T>
struct is_identity : std::false_type {};
template <int N>
struct is_identity<IdentityMatrix<N>> : std::true_type {};

template <typename T>
struct is_scaled_identity : std::false_type {};
template <int N>
struct is_scaled_identity<ScaledIdentity<N>> : std::true_type {};

template <typename T>
struct is_cross : std::false_type {};
template <>
struct is_cross<CrossMatrix> : std::true_type {};

template <typename T>
struct is_dense : std::false_type {};
template <int R, int C>
struct is_dense<DenseMatrix<R, C>> : std::true_type {};

template <typename T>
struct is_matrix_ref : std::false_type {};
template <int R, int C>
struct is_matrix_ref<MatrixRef<R, C>> : std::true_type {};

template <typename T>
struct is_transposed_ref : std::false_type {};
template <int R, int C>
struct is_transposed_ref<TransposedRef<R, C>> : std::true_type {};

}  // namespace detail

template <typename T>
concept LazyMatrixForm =
    detail::is_identity<T>::value || detail::is_scaled_identity<T>::value ||
    detail::is_cross<T>::value || detail::is_dense<T>::value ||
    detail::is_matrix_ref<T>::value || detail::is_transposed_ref<T>::value;

template <LazyMatrixForm T>
inline constexpr int lazy_rows_v = T::kRows;
template <LazyMatrixForm T>
inline constexpr int lazy_cols_v = T::kCols;

/// Eigen view of a lazy form: a reference or lazy Eigen expression where
/// structure allows, a dense temporary otherwise.
template <LazyMatrixForm T>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE decltype(auto) lazy_eigen(const T& x) {
  if constexpr (detail::is_identity<T>::value) {
    return Eigen::Matrix<double, T::kRows, T::kRows>::Identity();
  } else if constexpr (detail::is_scaled_identity<T>::value) {
    return (x.factor * Eigen::Matrix<double, T::kRows, T::kRows>::Identity()).eval();
  } else if constexpr (detail::is_cross<T>::value) {
    return cross(x.axis);
  } else if constexpr (detail::is_dense<T>::value) {
    return (x.m);
  } else if constexpr (detail::is_matrix_ref<T>::value) {
    return (*x.m);
  } else {
    return x.m->transpose();
  }
}

/// Dense materialization, as an owning fixed-size matrix.
template <LazyMatrixForm T>
[[nodiscard]] Eigen::Matrix<double, T::kRows, T::kCols> materialize(const T& x) {
  return lazy_eigen(x);
}

/// Product of two lazy forms. The result type depends on the operand
/// structure: identity factors disappear (zero arithmetic, asserted by the
/// type-level tests), scalar factors fold, and cross factors evaluate as
/// columnwise or rowwise cross products.
template <LazyMatrixForm A, LazyMatrixForm B>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE auto lazy_mul(const A& a, const B& b) {
  static_assert(lazy_cols_v<A> == lazy_rows_v<B>, "inner dimensions must agree");
  using detail::is_cross;
  using detail::is_identity;
  using detail::is_scaled_identity;

  if constexpr (is_identity<A>::value) {
    return b;
  } else if constexpr (is_identity<B>::value) {
    return a;
  } else if constexpr (is_scaled_identity<A>::value && is_scaled_identity<B>::value) {
    return ScaledIdentity<A::kRows>{a.factor * b.factor};
  } else if constexpr (is_scaled_identity<A>::value && is_cross<B>::value) {
    return CrossMatrix{a.factor * b.axis};
  } else if constexpr (is_cross<A>::value && is_scaled_identity<B>::value) {
    return CrossMatrix{b.factor * a.axis};
  } else if constexpr (is_scaled_identity<A>::value) {
    return DenseMatrix<B::kRows, B::kCols>{a.factor * lazy_eigen(b)};
  } else if constexpr (is_scaled_identity<B>::value) {
    return DenseMatrix<A::kRows, A::kCols>{lazy_eigen(a) * b.factor};
  } else if constexpr (is_cross<A>::value && is_cross<B>::value) {
    // a^x b^x = b a^T - (a . b) I
    return DenseMatrix<3, 3>{b.axis * a.axis.transpose() -
                             a.axis.dot(b.axis) * Eigen::Matrix3d::Identity()};
  } else if constexpr (is_cross<A>::value) {
    // a^x M: one cross product per column, no 3x3 build
    DenseMatrix<3, B::kCols> out;
    const auto& m = lazy_eigen(b);
    for (int j = 0; j < B::kCols; ++j) {
      out.m.col(j) = a.axis.cross(Eigen::Vector3d{m.col(j)});
    }
    return out;
  } else if constexpr (is_cross<B>::value) {
    // M a^x: row_i = row_i x a
    DenseMatrix<A::kRows, 3> out;
    const auto& m = lazy_eigen(a);
    for (int i = 0; i < A::kRows; ++i) {
      out.m.row(i) = Eigen::Vector3d{m.row(i).transpose()}.cross(b.axis);
    }
    return out;
  } else {
    return DenseMatrix<A::kRows, B::kCols>{lazy_eigen(a) * lazy_eigen(b)};
  }
}

}  // namespace geoexpr
