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

#include <string>

#include "geoexpr/expr/nodes.hpp"

namespace geoexpr {

/// Printable form of a compile-time frame signature: "(A,B)" or "(D,A,B)".
template <typename Sig>
[[nodiscard]] std::string sig_string() {
  std::string out = "(";
  if constexpr (is_map_sig_v<Sig>) {
    out += frame_name<typename Sig::To>();
    out += ",";
    out += frame_name<typename Sig::From>();
  } else {
    out += frame_name<typename Sig::In>();
    out += ",";
    out += frame_name<typename Sig::From>();
    out += ",";
    out += frame_name<typename Sig::To>();
  }
  out += ")";
  return out;
}

namespace detail {

template <Expression E>
void render_node(const E& e, int depth, std::string& out) {
  out.append(static_cast<size_t>(2 * depth), ' ');
  out += node_kind_name(kind_of_v<E>);
  out += " ";
  out += sig_string<sig_t<E>>();
  out += "\n";
  constexpr NodeKind k = kind_of_v<E>;
  if constexpr (k == NodeKind::Leaf) {
    // no children
  } else if constexpr (k == NodeKind::Inverse || k == NodeKind::ExpMap ||
                       k == NodeKind::LogMap || k == NodeKind::Negate || k == NodeKind::Scale) {
    render_node(e.child(), depth + 1, out);
  } else {
    render_node(e.lhs(), depth + 1, out);
    render_node(e.rhs(), depth + 1, out);
  }
}

}  // namespace detail

/// Text outline of an expression tree: one node per line (kind plus frame
/// signature), two-space indentation per depth level.
template <Expression E>
[[nodiscard]] std::string render_tree(const E& e) {
  std::string out;
  detail::render_node(e, 0, out);
  return out;
}

}  // namespace geoexpr
