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

#include "geoexpr/frames/tags.hpp"

// The rule system for propagating coordinate frame semantics through
// geometric operations. Each rule exposes `valid` and, when valid, the
// `result` signature. Mixing a framed with an unframed operand is invalid;
// all-identical and all-Unframed descriptors satisfy every rule. Checking
// happens entirely at compile time; see frames/check.hpp for the runtime
// mirror used in reporting and tests.

namespace geoexpr::rules {

namespace detail {

template <typename L, typename R>
inline constexpr bool mixed_framing_v = sig_all_unframed_v<L> != sig_all_unframed_v<R>;

}  // namespace detail

// Sum: p_D_AC = p_D_AB + p_D_BC, in either operand order.
template <typename L, typename R>
struct Sum {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename B, typename D2, typename A2, typename B2>
struct Sum<VecSig<D, A, B>, VecSig<D2, A2, B2>> {
  using L = VecSig<D, A, B>;
  using R = VecSig<D2, A2, B2>;
  static constexpr bool direct = std::is_same_v<D, D2> && std::is_same_v<B, A2>;
  static constexpr bool commuted = std::is_same_v<D, D2> && std::is_same_v<B2, A>;
  static constexpr bool valid =
      !detail::mixed_framing_v<L, R> && (direct || commuted);
  using result = std::conditional_t<direct, VecSig<D, A, B2>, VecSig<D, A2, B>>;
};

// Negative: -p_D_AB = p_D_BA.
template <typename Sig>
struct Negative {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename B>
struct Negative<VecSig<D, A, B>> {
  static constexpr bool valid = true;
  using result = VecSig<D, B, A>;
};

// Difference: p_D_AB = p_D_AC - p_D_BC.
template <typename L, typename R>
struct Difference {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename C, typename D2, typename B, typename C2>
struct Difference<VecSig<D, A, C>, VecSig<D2, B, C2>> {
  using L = VecSig<D, A, C>;
  using R = VecSig<D2, B, C2>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<D, D2> &&
                                std::is_same_v<C, C2>;
  using result = VecSig<D, A, B>;
};

// Scaling: a * p_A_BC keeps every descriptor.
template <typename Sig>
struct Scaling {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename B>
struct Scaling<VecSig<D, A, B>> {
  static constexpr bool valid = true;
  using result = VecSig<D, A, B>;
};

// Composition: Phi_AC = Phi_AB o Phi_BC.
template <typename L, typename R>
struct Composition {
  static constexpr bool valid = false;
};
template <typename A, typename B, typename B2, typename C>
struct Composition<MapSig<A, B>, MapSig<B2, C>> {
  using L = MapSig<A, B>;
  using R = MapSig<B2, C>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<B, B2>;
  using result = MapSig<A, C>;
};

// Inverse: Phi_BA = (Phi_AB)^-1.
template <typename Sig>
struct Inverse {
  static constexpr bool valid = false;
};
template <typename A, typename B>
struct Inverse<MapSig<A, B>> {
  static constexpr bool valid = true;
  using result = MapSig<B, A>;
};

// Rotation: p_D_BC = Phi_DA(p_A_BC).
template <typename L, typename R>
struct Rotation {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename A2, typename B, typename C>
struct Rotation<MapSig<D, A>, VecSig<A2, B, C>> {
  using L = MapSig<D, A>;
  using R = VecSig<A2, B, C>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<A, A2>;
  using result = VecSig<D, B, C>;
};

// Transformation: p_A_AC = T_AB(p_B_BC); the operand must be expressed in
// and anchored at the transform's source frame.
template <typename L, typename R>
struct Transformation {
  static constexpr bool valid = false;
};
template <typename A, typename B, typename B2, typename B3, typename C>
struct Transformation<MapSig<A, B>, VecSig<B2, B3, C>> {
  using L = MapSig<A, B>;
  using R = VecSig<B2, B3, C>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<B, B2> &&
                                std::is_same_v<B, B3>;
  using result = VecSig<A, A, C>;
};

// Manifold plus: Phi_AB = Phi_AB [+] phi_A_AB. No perturbed frame is
// introduced; the group signature is preserved.
template <typename L, typename R>
struct ManifoldPlus {
  static constexpr bool valid = false;
};
template <typename A, typename B, typename D2, typename A2, typename B2>
struct ManifoldPlus<MapSig<A, B>, VecSig<D2, A2, B2>> {
  using L = MapSig<A, B>;
  using R = VecSig<D2, A2, B2>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<D2, A> &&
                                std::is_same_v<A2, A> && std::is_same_v<B2, B>;
  using result = MapSig<A, B>;
};

// Manifold minus: phi_A_AB = Phi_AB [-] Phi_AB; both operands carry the
// same signature.
template <typename L, typename R>
struct ManifoldMinus {
  static constexpr bool valid = false;
};
template <typename A, typename B, typename A2, typename B2>
struct ManifoldMinus<MapSig<A, B>, MapSig<A2, B2>> {
  using L = MapSig<A, B>;
  using R = MapSig<A2, B2>;
  static constexpr bool valid = !detail::mixed_framing_v<L, R> && std::is_same_v<A, A2> &&
                                std::is_same_v<B, B2>;
  using result = VecSig<A, A, B>;
};

// Exp map: Phi_AA = exp(phi_A_AB). Semantically non-bijective: the B
// descriptor is absent from the result.
template <typename Sig>
struct ExpMap {
  static constexpr bool valid = false;
};
template <typename D, typename A, typename B>
struct ExpMap<VecSig<D, A, B>> {
  static constexpr bool valid = std::is_same_v<D, A>;
  using result = MapSig<A, A>;
};

// Log map: phi_A_AB = log_B(Phi_AA). The lost descriptor returns as an
// explicit frame argument.
template <typename Sig, typename To>
struct LogMap {
  static constexpr bool valid = false;
};
template <typename A, typename A2, typename To>
struct LogMap<MapSig<A, A2>, To> {
  static constexpr bool operand_ok = std::is_same_v<A, A2>;
  static constexpr bool framing_ok =
      std::is_same_v<A, Unframed> == std::is_same_v<To, Unframed>;
  static constexpr bool valid = operand_ok && framing_ok;
  using result = VecSig<A, A, To>;
};

}  // namespace geoexpr::rules
