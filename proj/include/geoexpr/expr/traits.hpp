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

#include <tuple>
#include <type_traits>

#include "geoexpr/frames/rules.hpp"
#include "geoexpr/manifold/ops.hpp"

// Structural recursion over expression trees is forced inline. Trees with
// repeated leaf types would otherwise share out-of-line instantiations while
// all-distinct (frame-tagged) trees inline fully, so identical arithmetic
// would compile to different code depending on tagging alone.
#ifndef GEOEXPR_ALWAYS_INLINE
#if defined(__GNUC__) || defined(__clang__)
#define GEOEXPR_ALWAYS_INLINE __attribute__((always_inline)) inline
#else
#define GEOEXPR_ALWAYS_INLINE inline
#endif
#endif

namespace geoexpr {

enum class NodeKind {
  Leaf,
  Inverse,
  ExpMap,
  LogMap,
  Negate,
  Compose,
  Rotate,
  Transform,
  Sum,
  Difference,
  Scale,
  BoxPlus,
  BoxMinus,
};

[[nodiscard]] constexpr std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::Inverse: return "Inverse";
    case NodeKind::ExpMap: return "ExpMap";
    case NodeKind::LogMap: return "LogMap";
    case NodeKind::Negate: return "Negate";
    case NodeKind::Compose: return "Compose";
    case NodeKind::Rotate: return "Rotate";
    case NodeKind::Transform: return "Transform";
    case NodeKind::Sum: return "Sum";
    case NodeKind::Difference: return "Difference";
    case NodeKind::Scale: return "Scale";
    case NodeKind::BoxPlus: return "BoxPlus";
    case NodeKind::BoxMinus: return "BoxMinus";
  }
  return "?";
}

/// Per-node static description: result value type, frame signature, kind.
/// Specialized for every expression template; the full tree shape is part
/// of each node's type.
template <typename E>
struct expr_traits;

template <typename E>
concept Expression = requires { typename expr_traits<std::remove_cvref_t<E>>::Value; };

template <Expression E>
using value_t = typename expr_traits<std::remove_cvref_t<E>>::Value;

template <Expression E>
using sig_t = typename expr_traits<std::remove_cvref_t<E>>::Sig;

template <Expression E>
inline constexpr NodeKind kind_of_v = expr_traits<std::remove_cvref_t<E>>::kind;

template <typename E>
concept LeafExpr = Expression<E> && kind_of_v<E> == NodeKind::Leaf;

template <typename E>
concept GroupExpr = Expression<E> && is_group_value_v<value_t<E>>;

template <typename E>
concept So3Expr = Expression<E> && std::same_as<value_t<E>, SO3Rotation>;

template <typename E>
concept Se3Expr = Expression<E> && std::same_as<value_t<E>, SE3Transform>;

template <typename E>
concept VectorExpr = Expression<E> && std::same_as<value_t<E>, EuclideanVector>;

template <typename E>
concept TangentExpr = Expression<E> && is_tangent_value_v<value_t<E>>;

/// Vector-space expressions: R^3 quantities and minimal tangent elements.
template <typename E>
concept VectorLikeExpr = VectorExpr<E> || TangentExpr<E>;

// Children of expression nodes: leaves are held by reference (they must
// outlive the expression's evaluation), inner nodes by value.
template <typename E>
using child_store_t = std::conditional_t<LeafExpr<E>, const E&, E>;

/// CRTP base providing member sugar over the free-function surface.
/// Definitions resolve at instantiation, after all expression headers.
template <typename Derived>
class ExprBase {
 public:
  [[nodiscard]] const Derived& derived() const { return static_cast<const Derived&>(*this); }

  template <typename D = Derived>
  [[nodiscard]] auto inverse() const {
    return make_inverse(derived());
  }

  template <typename D = Derived>
  [[nodiscard]] auto exp_map() const {
    return make_exp_map(derived());
  }

  template <typename To = Unframed, typename D = Derived>
  [[nodiscard]] auto log_map() const {
    return make_log_map<To>(derived());
  }

  template <typename D = Derived>
  [[nodiscard]] auto eval() const {
    return evaluate_framed(derived());
  }

  /// With targets: strongly typed forward mode, one Jacobian per target.
  /// Without targets: reverse mode, one Jacobian per leaf in left-to-right
  /// order. Both share a single cached value evaluation.
  template <typename... Targets>
  [[nodiscard]] auto eval_with_jacobians(const Targets&... targets) const {
    if constexpr (sizeof...(Targets) == 0) {
      return reverse_jacobians(derived());
    } else {
      return typed_forward_jacobians(derived(), targets...);
    }
  }

  template <typename D = Derived>
  [[nodiscard]] std::string render() const {
    return render_tree(derived());
  }
};

// Leaf collection ------------------------------------------------------------

namespace detail {

template <typename... Ts>
using tuple_cat_t = decltype(std::tuple_cat(std::declval<Ts>()...));

// Leaf tuples are concatenated from each node's Children tuple (declared by
// every expr_traits specialization; empty for leaves).
template <typename E, bool IsLeaf = (kind_of_v<E> == NodeKind::Leaf)>
struct leaf_tuple;

template <typename E>
struct leaf_tuple<E, true> {
  using type = std::tuple<E>;
};

template <typename E>
struct leaf_tuple<E, false> {
  template <typename Tup>
  struct cat;
  template <typename... Cs>
  struct cat<std::tuple<Cs...>> {
    using type = tuple_cat_t<typename leaf_tuple<Cs>::type...>;
  };
  using type = typename cat<typename expr_traits<E>::Children>::type;
};

template <typename Leaf, typename Tuple>
struct tuple_contains : std::false_type {};
template <typename Leaf, typename... Ts>
struct tuple_contains<Leaf, std::tuple<Ts...>>
    : std::bool_constant<(std::is_same_v<Leaf, Ts> || ...)> {};

template <typename Tuple>
struct tuple_all_unique;
template <>
struct tuple_all_unique<std::tuple<>> : std::true_type {};
template <typename T, typename... Rest>
struct tuple_all_unique<std::tuple<T, Rest...>>
    : std::bool_constant<!tuple_contains<T, std::tuple<Rest...>>::value &&
                         tuple_all_unique<std::tuple<Rest...>>::value> {};

template <typename Leaf, typename Tuple>
struct tuple_index_of;
template <typename Leaf, typename... Ts>
struct tuple_index_of<Leaf, std::tuple<Leaf, Ts...>> : std::integral_constant<int, 0> {};
template <typename Leaf, typename T, typename... Ts>
struct tuple_index_of<Leaf, std::tuple<T, Ts...>>
    : std::integral_constant<int, 1 + tuple_index_of<Leaf, std::tuple<Ts...>>::value> {};

}  // namespace detail

/// Left-to-right tuple of the leaf types of an expression.
template <Expression E>
using leaf_types_t = typename detail::leaf_tuple<std::remove_cvref_t<E>>::type;

/// Whether a leaf type occurs anywhere in the expression. Used for
/// compile-time zero pruning in the Jacobian evaluators.
template <typename Leaf, typename E>
inline constexpr bool contains_leaf_v =
    detail::tuple_contains<std::remove_cvref_t<Leaf>, leaf_types_t<E>>::value;

/// Whether every leaf of the expression has a distinct static type; the
/// uniqueness guarantee behind the typed forward and reverse evaluators.
template <typename E>
inline constexpr bool leaf_types_unique_v = detail::tuple_all_unique<leaf_types_t<E>>::value;

template <typename Leaf, typename E>
inline constexpr int leaf_index_v =
    detail::tuple_index_of<std::remove_cvref_t<Leaf>, leaf_types_t<E>>::value;

template <typename E>
inline constexpr int leaf_count_v = std::tuple_size_v<leaf_types_t<E>>;

}  // namespace geoexpr
