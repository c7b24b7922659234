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

#include "geoexpr/autodiff/local_jacobian.hpp"
#include "geoexpr/autodiff/rules.hpp"

// Reverse-mode evaluator: one backward sweep computes the Jacobians of the
// root with respect to every leaf. The adjoint is seeded with the identity
// at the root and multiplied by the elementary Jacobians along each path;
// intermediate adjoints use the same lazy forms as the forward evaluators.

namespace geoexpr {

namespace detail {

template <int RootDim, typename LeafTuple>
struct reverse_output;

template <int RootDim, typename... Leaves>
struct reverse_output<RootDim, std::tuple<Leaves...>> {
  using type = std::tuple<LocalJacobian<RootDim, tangent_dim_v<value_t<Leaves>>>...>;
};

template <int RootDim, typename E>
using reverse_output_t = typename reverse_output<RootDim, leaf_types_t<E>>::type;

template <typename Root, typename Ev, typename Adj, typename Out>
GEOEXPR_ALWAYS_INLINE void reverse_sweep(const Ev& ev, const Adj& adjoint, Out& out) {
  using E = typename Ev::ExprType;
  if constexpr (kind_of_v<E> == NodeKind::Leaf) {
    std::get<static_cast<size_t>(leaf_index_v<E, Root>)>(out) = materialize(adjoint);
  } else {
    reverse_sweep<Root>(evaluator_child<0>(ev), lazy_mul(adjoint, elementary_jacobian<0>(ev)),
                        out);
    if constexpr (Ev::arity == 2) {
      reverse_sweep<Root>(evaluator_child<1>(ev), lazy_mul(adjoint, elementary_jacobian<1>(ev)),
                          out);
    }
  }
}

}  // namespace detail

/// Value plus local Jacobians for all leaves, ordered by left-to-right leaf
/// position in the source expression, computed in one reverse sweep.
template <Expression E>
[[nodiscard]] auto reverse_jacobians(const E& e) {
  static_assert(leaf_types_unique_v<E>,
                "reverse mode requires every leaf of the expression to have "
                "a distinct static type (distinct frame signature)");
  constexpr int root_dim = tangent_dim_v<value_t<E>>;
  const Evaluator<E> ev(e);
  detail::reverse_output_t<root_dim, E> jacobians;
  detail::reverse_sweep<E>(ev, IdentityMatrix<root_dim>{}, jacobians);
  return std::tuple_cat(std::tuple{Framed<value_t<E>, sig_t<E>>{ev.value()}},
                        std::move(jacobians));
}

}  // namespace geoexpr
