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

#include "geoexpr/bench/cells.hpp"
#include "geoexpr/bench/frame_kernels.hpp"
#include "geoexpr/bench/harness.hpp"

// Shared implementation of the frame-overhead timing kernels. Each
// configuration is compiled in its own translation unit so the optimizer
// sees the two instantiations in identical, isolated contexts; together
// with the forced inlining of the expression recursion this makes the
// framed and unframed kernels compile to the same instruction stream.

namespace geoexpr::bench::detail {

template <bool WithFrames>
FrameKernelTimes time_chain_kernels(const std::vector<ChainInput>& pool, std::uint64_t trials) {
  ChainCell<10, WithFrames> cell;
  FrameKernelTimes times;
  {
    size_t idx = 0;
    EuclideanVector out;
    const auto iter = [&]() {
      cell.load(pool[idx]);
      idx = (idx + 1) % pool.size();
      out = evaluate(cell.expression());
      do_not_optimize(out);
    };
    times.eval_ns = time_loop(iter, trials).mean_ns;
  }
  {
    size_t idx = 0;
    const auto iter = [&]() {
      cell.load(pool[idx]);
      idx = (idx + 1) % pool.size();
      const auto jac = forward_jacobian(cell.expression(), cell.p1());
      do_not_optimize(jac);
    };
    times.forward_ns = time_loop(iter, trials).mean_ns;
  }
  return times;
}

}  // namespace geoexpr::bench::detail
