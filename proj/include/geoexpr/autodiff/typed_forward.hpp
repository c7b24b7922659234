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

#include <cstdio>
#include <cstdlib>
#include <tuple>

#include "geoexpr/autodiff/local_jacobian.hpp"
#include "geoexpr/autodiff/rules.hpp"

// Strongly typed forward-mode evaluator. Requires every leaf of the
// expression to have a distinct static type (frame semantics provide this
// for free); the traversal for each target is then fully predetermined at
// compile time, with no runtime branching and lazy intermediate Jacobians.

namespace geoexpr {

namespace detail {

// Jacobian of the node's value with respect to the unique leaf of type
// Target, as a lazy form. Branches that cannot contain Target are pruned
// at compile time and never traversed.
template <typename Target, typename Ev>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE auto typed_forward_lazy(const Ev& ev) {
  using E = typename Ev::ExprType;
  if constexpr (kind_of_v<E> == NodeKind::Leaf) {
    static_assert(std::is_same_v<E, Target>);
    return IdentityMatrix<node_dim_v<Ev>>{};
  } else if constexpr (Ev::arity == 1 || contains_leaf_v<Target, typename Ev::Child0>) {
    return lazy_mul(elementary_jacobian<0>(ev), typed_forward_lazy<Target>(evaluator_child<0>(ev)));
  } else {
    static_assert(contains_leaf_v<Target, typename Ev::Child1>);
    return lazy_mul(elementary_jacobian<1>(ev), typed_forward_lazy<Target>(evaluator_child<1>(ev)));
  }
}

// Address of the unique leaf of the given type, for the debug-build
// aliasing check.
template <typename Target, typename Ev>
[[nodiscard]] const Target* find_leaf(const Ev& ev) {
  using E = typename Ev::ExprType;
  if constexpr (kind_of_v<E> == NodeKind::Leaf) {
    return &ev.leaf();
  } else if constexpr (Ev::arity == 1) {
    return find_leaf<Target>(ev.child());
  } else if constexpr (contains_leaf_v<Target, typename Ev::Child0>) {
    return find_leaf<Target>(evaluator_child<0>(ev));
  } else {
    return find_leaf<Target>(evaluator_child<1>(ev));
  }
}

}  // namespace detail

/// Whether the target object is the very leaf of its type inside the
/// expression backing the evaluator. The typed evaluators assume all
/// instances of a type refer to one object; this is the runtime face of
/// that guarantee.
template <typename Target, typename Ev>
[[nodiscard]] bool target_aliases_leaf(const Ev& ev, const Target& target) {
  if constexpr (contains_leaf_v<Target, typename Ev::ExprType>) {
    return detail::find_leaf<Target>(ev) == &target;
  } else {
    return true;  // absent targets carry no aliasing obligation
  }
}

namespace detail {

template <typename Target, typename Ev>
void assert_target_aliasing([[maybe_unused]] const Ev& ev,
                            [[maybe_unused]] const Target& target) {
#ifndef NDEBUG
  if (!target_aliases_leaf(ev, target)) {
    std::fprintf(stderr,
                 "eval_with_jacobians: target is not the expression's leaf of type %.*s\n",
                 static_cast<int>(detail::raw_type_name<Target>().size()),
                 detail::raw_type_name<Target>().data());
    std::abort();
  }
#endif
}

template <typename Target, typename Ev>
[[nodiscard]] auto typed_forward_one(const Ev& ev, const Target& target) {
  using Root = typename Ev::ExprType;
  constexpr int rows = node_dim_v<Ev>;
  constexpr int cols = tangent_dim_v<value_t<Target>>;
  if constexpr (!contains_leaf_v<Target, Root>) {
    return LocalJacobian<rows, cols>::Zero();
  } else {
    assert_target_aliasing(ev, target);
    return LocalJacobian<rows, cols>{materialize(typed_forward_lazy<Target>(ev))};
  }
}

}  // namespace detail

/// Value and one local Jacobian per target, by strongly typed forward-mode
/// differentiation over a shared evaluation cache.
template <Expression E, LeafExpr... Targets>
[[nodiscard]] auto typed_forward_jacobians(const E& e, const Targets&... targets) {
  static_assert(leaf_types_unique_v<E>,
                "typed forward mode requires every leaf of the expression to "
                "have a distinct static type (distinct frame signature)");
  const Evaluator<E> ev(e);
  return std::tuple{Framed<value_t<E>, sig_t<E>>{ev.value()},
                    detail::typed_forward_one(ev, targets)...};
}

}  // namespace geoexpr
