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

#include <string_view>
#include <type_traits>

namespace geoexpr {

/// Reserved frame descriptor for values carrying no frame semantics.
/// Signatures are all-or-nothing: every descriptor Unframed, or none.
struct Unframed {};

/// Frame descriptors are arbitrary type-level labels; declaring an empty
/// struct per physical frame is enough. No runtime representation exists.
///
/// Signature of a coordinate mapping Phi_AB or T_AB: maps quantities
/// expressed in frame B into frame A.
template <typename ToT, typename FromT>
struct MapSig {
  using To = ToT;
  using From = FromT;
  static constexpr int arity = 2;
};

/// Signature of a vector-like quantity p_D_AB: the quantity of B relative
/// to A (from A to B), expressed in frame D.
template <typename InT, typename FromT, typename ToT>
struct VecSig {
  using In = InT;
  using From = FromT;
  using To = ToT;
  static constexpr int arity = 3;
};

template <typename Sig>
struct is_map_sig : std::false_type {};
template <typename A, typename B>
struct is_map_sig<MapSig<A, B>> : std::true_type {};
template <typename Sig>
inline constexpr bool is_map_sig_v = is_map_sig<Sig>::value;

template <typename Sig>
struct is_vec_sig : std::false_type {};
template <typename D, typename A, typename B>
struct is_vec_sig<VecSig<D, A, B>> : std::true_type {};
template <typename Sig>
inline constexpr bool is_vec_sig_v = is_vec_sig<Sig>::value;

namespace detail {

template <typename Sig>
struct sig_unframed;
template <typename A, typename B>
struct sig_unframed<MapSig<A, B>>
    : std::bool_constant<std::is_same_v<A, Unframed> && std::is_same_v<B, Unframed>> {};
template <typename D, typename A, typename B>
struct sig_unframed<VecSig<D, A, B>>
    : std::bool_constant<std::is_same_v<D, Unframed> && std::is_same_v<A, Unframed> &&
                         std::is_same_v<B, Unframed>> {};

template <typename Sig>
struct sig_framed;
template <typename A, typename B>
struct sig_framed<MapSig<A, B>>
    : std::bool_constant<!std::is_same_v<A, Unframed> && !std::is_same_v<B, Unframed>> {};
template <typename D, typename A, typename B>
struct sig_framed<VecSig<D, A, B>>
    : std::bool_constant<!std::is_same_v<D, Unframed> && !std::is_same_v<A, Unframed> &&
                         !std::is_same_v<B, Unframed>> {};

}  // namespace detail

/// True when every descriptor is Unframed.
template <typename Sig>
inline constexpr bool sig_all_unframed_v = detail::sig_unframed<Sig>::value;

/// True when no descriptor is Unframed.
template <typename Sig>
inline constexpr bool sig_fully_framed_v = detail::sig_framed<Sig>::value;

/// Partially framed signatures are rejected at value construction.
template <typename Sig>
inline constexpr bool sig_well_formed_v = sig_all_unframed_v<Sig> || sig_fully_framed_v<Sig>;

using UnframedMapSig = MapSig<Unframed, Unframed>;
using UnframedVecSig = VecSig<Unframed, Unframed, Unframed>;

namespace detail {

// Compiler-assisted tag name, for debug rendering only.
template <typename T>
constexpr std::string_view raw_type_name() {
#if defined(__clang__) || defined(__GNUC__)
  constexpr std::string_view p = __PRETTY_FUNCTION__;
  constexpr auto start = p.find("T = ") + 4;
  constexpr auto end = p.find_first_of(";]", start);
  return p.substr(start, end - start);
#else
  return "?";
#endif
}

}  // namespace detail

/// Short printable name of a frame tag (namespace qualifiers stripped).
template <typename T>
constexpr std::string_view frame_name() {
  constexpr std::string_view full = detail::raw_type_name<T>();
  constexpr auto pos = full.rfind("::");
  if constexpr (pos != std::string_view::npos) {
    return full.substr(pos + 2);
  } else {
    return full;
  }
}

}  // namespace geoexpr
