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
#include <vector>

#include "geoexpr/bench/hand_coded.hpp"

namespace geoexpr::bench {

/// One timing round of the N=10 chain: value evaluation and the untyped
/// forward Jacobian with respect to p1.
struct FrameKernelTimes {
  double eval_ns = 0.0;
  double forward_ns = 0.0;
};

// Defined in per-configuration translation units; see
// src/bench/frame_kernel_impl.hpp for why.
[[nodiscard]] FrameKernelTimes time_framed_chain(const std::vector<ChainInput>& pool,
                                                 std::uint64_t trials);
[[nodiscard]] FrameKernelTimes time_unframed_chain(const std::vector<ChainInput>& pool,
                                                   std::uint64_t trials);

}  // namespace geoexpr::bench
