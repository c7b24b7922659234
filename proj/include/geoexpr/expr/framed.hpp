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

#include "geoexpr/expr/traits.hpp"
#include "geoexpr/frames/tags.hpp"

namespace geoexpr {

/// A concrete manifold or vector value carrying a compile-time frame
/// signature. Framed values are the leaves of every expression tree; the
/// frame descriptors have no runtime representation and no runtime cost.
///
/// Declaring per-frame empty structs is all the setup required:
///
///   struct World; struct Body;
///   Rotation<World, Body> r{some_rotation};
template <typename V, typename Sig>
class Framed : public ExprBase<Framed<V, Sig>> {
  static_assert(sig_well_formed_v<Sig>,
                "frame signatures are all-or-nothing: either every descriptor "
                "is Unframed or none is");
  static_assert(is_group_value_v<V> ? is_map_sig_v<Sig> : is_vec_sig_v<Sig>,
                "coordinate mappings carry two descriptors, vector and "
                "tangent quantities carry three");

 public:
  using Value = V;
  using SigType = Sig;

  Framed() = default;
  explicit Framed(const V& value) : v_(value) {}

  /// Evaluates an expression with a matching signature into a value.
  template <Expression E>
    requires(!std::same_as<std::remove_cvref_t<E>, Framed> && std::same_as<value_t<E>, V> &&
             std::same_as<sig_t<E>, Sig>)
  Framed(const E& expr) : v_(evaluate(expr)) {}  // NOLINT: converting by evaluation is the point

  [[nodiscard]] const V& value() const { return v_; }

 private:
  V v_;
};

template <typename V, typename S>
struct expr_traits<Framed<V, S>> {
  using Value = V;
  using Sig = S;
  using Children = std::tuple<>;
  static constexpr NodeKind kind = NodeKind::Leaf;
};

// Framed aliases for each value kind, defaulting to no frame semantics.

template <typename A = Unframed, typename B = Unframed>
using Rotation = Framed<SO3Rotation, MapSig<A, B>>;

template <typename A = Unframed, typename B = Unframed>
using RigidTransform = Framed<SE3Transform, MapSig<A, B>>;

template <typename D = Unframed, typename A = Unframed, typename B = Unframed>
using Point = Framed<EuclideanVector, VecSig<D, A, B>>;

template <typename D = Unframed, typename A = Unframed, typename B = Unframed>
using RotationTangent = Framed<RotationVector, VecSig<D, A, B>>;

template <typename D = Unframed, typename A = Unframed, typename B = Unframed>
using TwistTangent = Framed<Twist, VecSig<D, A, B>>;

}  // namespace geoexpr
