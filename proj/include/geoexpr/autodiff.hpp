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

#include "geoexpr/autodiff/forward.hpp"
#include "geoexpr/autodiff/local_jacobian.hpp"
#include "geoexpr/autodiff/reverse.hpp"
#include "geoexpr/autodiff/rules.hpp"
#include "geoexpr/autodiff/typed_forward.hpp"

namespace geoexpr {

/// Value and Jacobians in one call: with targets, typed forward mode (one
/// Jacobian per target, in target order); with no targets, reverse mode
/// (one Jacobian per leaf, left to right). One cached evaluation backs
/// both the value and the derivative passes.
template <Expression E, LeafExpr... Targets>
[[nodiscard]] auto eval_with_jacobians(const E& e, const Targets&... targets) {
  if constexpr (sizeof...(Targets) == 0) {
    return reverse_jacobians(e);
  } else {
    return typed_forward_jacobians(e, targets...);
  }
}

}  // namespace geoexpr
