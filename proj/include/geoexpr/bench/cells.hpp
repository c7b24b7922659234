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

#include <array>
#include <utility>

#include "geoexpr/autodiff.hpp"
#include "geoexpr/bench/hand_coded.hpp"
#include "geoexpr/expr.hpp"

// Expression-tree counterparts of the two benchmark problems. The chain is
// built at compile time per length N, with a distinct frame per link so the
// leaf-type uniqueness guarantee holds and the typed evaluators apply.

namespace geoexpr::bench {

template <int I>
struct Fr {};  // chain frame labels Fr<0> (innermost) .. Fr<N>

/// The K-th rotation (1-based, outermost first) of an N-chain maps frame
/// Fr<N-K> into Fr<N-K+1>. The unframed variant exists so the zero-overhead
/// claim can be timed against byte-identical code paths.
template <int N, int K, bool WithFrames = true>
using ChainRotation =
    std::conditional_t<WithFrames, Rotation<Fr<N - K + 1>, Fr<N - K>>, Rotation<>>;

namespace detail {

template <int N, bool WithFrames, typename Seq>
struct chain_rotations;
template <int N, bool WithFrames, size_t... Is>
struct chain_rotations<N, WithFrames, std::index_sequence<Is...>> {
  using type = std::tuple<ChainRotation<N, static_cast<int>(Is) + 1, WithFrames>...>;
};

}  // namespace detail

/// Leaves of one rotation-chain instance. The expression references these
/// members; the cell must outlive any expression built from it.
template <int N, bool WithFrames = true>
class ChainCell {
  static_assert(N >= 1);

 public:
  using RotationTuple =
      typename detail::chain_rotations<N, WithFrames, std::make_index_sequence<N>>::type;
  using P1 = std::conditional_t<WithFrames, Point<Fr<0>, Fr<0>, Fr<0>>, Point<>>;

  void load(const ChainInput& in) {
    [&]<size_t... Is>(std::index_sequence<Is...>) {
      ((std::get<Is>(rotations_) =
            std::tuple_element_t<Is, RotationTuple>{in.rotations[Is]}),
       ...);
    }(std::make_index_sequence<N>{});
    p1_ = P1{in.p1};
  }

  [[nodiscard]] const RotationTuple& rotations() const { return rotations_; }
  [[nodiscard]] const P1& p1() const { return p1_; }

  /// (R_1 * R_2 * ... * R_N) * p1, left-nested as written in user code.
  [[nodiscard]] auto expression() const { return compose_prefix<N>() * p1_; }

 private:
  template <int K>
  [[nodiscard]] decltype(auto) compose_prefix() const {
    if constexpr (K == 1) {
      return (std::get<0>(rotations_));
    } else {
      return compose_prefix<K - 1>() * std::get<K - 1>(rotations_);
    }
  }

  RotationTuple rotations_;
  P1 p1_;
};

template <int N>
void chain_typed_forward(const ChainCell<N>& cell, ChainResult& out) {
  const auto expr = cell.expression();
  const auto result = std::apply(
      [&](const auto&... rots) { return typed_forward_jacobians(expr, rots..., cell.p1()); },
      cell.rotations());
  out.p2 = std::get<0>(result).value();
  out.jac_rotation.resize(N);
  [&]<size_t... Is>(std::index_sequence<Is...>) {
    ((out.jac_rotation[Is] = std::get<Is + 1>(result).dense()), ...);
  }(std::make_index_sequence<N>{});
  out.jac_p1 = std::get<N + 1>(result).dense();
}

template <int N>
void chain_reverse(const ChainCell<N>& cell, ChainResult& out) {
  const auto expr = cell.expression();
  const auto result = reverse_jacobians(expr);
  out.p2 = std::get<0>(result).value();
  out.jac_rotation.resize(N);
  [&]<size_t... Is>(std::index_sequence<Is...>) {
    ((out.jac_rotation[Is] = std::get<Is + 1>(result).dense()), ...);
  }(std::make_index_sequence<N>{});
  out.jac_p1 = std::get<N + 1>(result).dense();
}

template <int N>
void chain_forward(const ChainCell<N>& cell, ChainResult& out) {
  const auto expr = cell.expression();
  const Evaluator<std::remove_cvref_t<decltype(expr)>> ev(expr);
  out.p2 = ev.value();
  out.jac_rotation.resize(N);
  [&]<size_t... Is>(std::index_sequence<Is...>) {
    ((out.jac_rotation[Is] =
          forward_jacobian_cached(ev, std::get<Is>(cell.rotations())).dense()),
     ...);
  }(std::make_index_sequence<N>{});
  out.jac_p1 = forward_jacobian_cached(ev, cell.p1()).dense();
}

template <int N>
void chain_hand(const ChainCell<N>& cell, ChainInput& scratch, ChainResult& out) {
  // The hand-coded reference reads the same leaf values as the expressions.
  scratch.rotations.resize(N);
  [&]<size_t... Is>(std::index_sequence<Is...>) {
    ((scratch.rotations[Is] = std::get<Is>(cell.rotations()).value()), ...);
  }(std::make_index_sequence<N>{});
  scratch.p1 = cell.p1().value();
  hand_chain(scratch, out);
}

// IMU factor ------------------------------------------------------------------

struct FrW {};
struct FrI {};
struct FrJ {};
struct FrK {};

/// Leaves of the IMU-residual expression
/// r = log((C_tilde exp(phi))^-1 o (C_wi^-1 C_wj)).
class ImuCell {
 public:
  void load(const ImuInput& in) {
    c_tilde_ = Rotation<FrI, FrJ>{in.c_tilde};
    phi_ = RotationTangent<FrJ, FrJ, FrK>{in.phi};
    c_wi_ = Rotation<FrW, FrI>{in.c_wi};
    c_wj_ = Rotation<FrW, FrJ>{in.c_wj};
  }

  [[nodiscard]] auto expression() const {
    return ((c_tilde_ * phi_.exp_map()).inverse() * (c_wi_.inverse() * c_wj_))
        .template log_map<FrI>();
  }

  [[nodiscard]] const Rotation<FrI, FrJ>& c_tilde() const { return c_tilde_; }
  [[nodiscard]] const RotationTangent<FrJ, FrJ, FrK>& phi() const { return phi_; }
  [[nodiscard]] const Rotation<FrW, FrI>& c_wi() const { return c_wi_; }
  [[nodiscard]] const Rotation<FrW, FrJ>& c_wj() const { return c_wj_; }

 private:
  Rotation<FrI, FrJ> c_tilde_;
  RotationTangent<FrJ, FrJ, FrK> phi_;
  Rotation<FrW, FrI> c_wi_;
  Rotation<FrW, FrJ> c_wj_;
};

inline void imu_typed_forward(const ImuCell& cell, ImuResult& out) {
  const auto expr = cell.expression();
  const auto [r, jt, jphi, jwi, jwj] =
      typed_forward_jacobians(expr, cell.c_tilde(), cell.phi(), cell.c_wi(), cell.c_wj());
  out.r = r.value();
  out.jac_c_tilde = jt.dense();
  out.jac_phi = jphi.dense();
  out.jac_c_wi = jwi.dense();
  out.jac_c_wj = jwj.dense();
}

inline void imu_reverse(const ImuCell& cell, ImuResult& out) {
  const auto expr = cell.expression();
  const auto [r, jt, jphi, jwi, jwj] = reverse_jacobians(expr);
  out.r = r.value();
  out.jac_c_tilde = jt.dense();
  out.jac_phi = jphi.dense();
  out.jac_c_wi = jwi.dense();
  out.jac_c_wj = jwj.dense();
}

inline void imu_forward(const ImuCell& cell, ImuResult& out) {
  const auto expr = cell.expression();
  const Evaluator<std::remove_cvref_t<decltype(expr)>> ev(expr);
  out.r = ev.value();
  out.jac_c_tilde = forward_jacobian_cached(ev, cell.c_tilde()).dense();
  out.jac_phi = forward_jacobian_cached(ev, cell.phi()).dense();
  out.jac_c_wi = forward_jacobian_cached(ev, cell.c_wi()).dense();
  out.jac_c_wj = forward_jacobian_cached(ev, cell.c_wj()).dense();
}

inline void imu_hand(const ImuCell& cell, ImuInput& scratch, ImuResult& out) {
  scratch.c_tilde = cell.c_tilde().value();
  scratch.phi = cell.phi().value();
  scratch.c_wi = cell.c_wi().value();
  scratch.c_wj = cell.c_wj().value();
  hand_imu(scratch, out);
}

}  // namespace geoexpr::bench
