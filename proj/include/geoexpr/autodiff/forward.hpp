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

#include <cstdint>

#include "geoexpr/autodiff/local_jacobian.hpp"
#include "geoexpr/autodiff/rules.hpp"

// Forward-mode evaluator without the uniqueness guarantee. Leaves sharing
// the target's static type are resolved by a runtime object-identity check;
// branches whose static type cannot contain the target are pruned at
// compile time. Intermediate Jacobians are dense matrices wrapped in the
// optional-zero representation.

namespace geoexpr {

/// Count of elementary Jacobian materializations performed by the untyped
/// forward evaluator on this thread. Pruned branches contribute nothing;
/// the zero-pruning tests assert on this.
[[nodiscard]] inline std::uint64_t& forward_rule_evaluations() {
  thread_local std::uint64_t count = 0;
  return count;
}

namespace detail {

template <typename Ev, typename Target>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE auto forward_jacobian_impl(const Ev& ev, const Target& target) {
  using E = typename Ev::ExprType;
  constexpr int rows = node_dim_v<Ev>;
  constexpr int cols = tangent_dim_v<value_t<Target>>;
  using Jac = LocalJacobian<rows, cols>;

  if constexpr (!contains_leaf_v<Target, E>) {
    // The Jacobian is known to be zero at compile time; the branch is not
    // traversed.
    return Jac::Zero();
  } else if constexpr (kind_of_v<E> == NodeKind::Leaf) {
    return (&ev.leaf() == &target) ? Jac::Identity() : Jac::Zero();
  } else {
    Jac total = Jac::Zero();
    const auto accumulate = [&](auto index_c, const auto& child) {
      constexpr int index = decltype(index_c)::value;
      const auto child_jac = forward_jacobian_impl(child, target);
      if (!child_jac.is_zero()) {
        ++forward_rule_evaluations();
        const auto elem = materialize(elementary_jacobian<index>(ev));
        if (total.is_zero()) {
          total = Jac{elem * child_jac.matrix()};
        } else {
          total = Jac{total.matrix() + elem * child_jac.matrix()};
        }
      }
    };
    if constexpr (contains_leaf_v<Target, typename Ev::Child0>) {
      accumulate(std::integral_constant<int, 0>{}, evaluator_child<0>(ev));
    }
    if constexpr (Ev::arity == 2) {
      if constexpr (contains_leaf_v<Target, typename Ev::Child1>) {
        accumulate(std::integral_constant<int, 1>{}, evaluator_child<1>(ev));
      }
    }
    return total;
  }
}

}  // namespace detail

/// Forward-mode local Jacobian of the expression with respect to one target
/// leaf object. A target type absent from the tree yields the exact-zero
/// Jacobian. The cache is built internally; see forward_jacobian_cached for
/// reuse across targets.
template <Expression E, LeafExpr Target>
[[nodiscard]] auto forward_jacobian(const E& e, const Target& target) {
  const Evaluator<E> ev(e);
  return detail::forward_jacobian_impl(ev, target);
}

/// Forward-mode Jacobian over an existing evaluation cache.
template <typename Ev, LeafExpr Target>
[[nodiscard]] auto forward_jacobian_cached(const Ev& ev, const Target& target) {
  return detail::forward_jacobian_impl(ev, target);
}

}  // namespace geoexpr
