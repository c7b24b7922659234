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

#include "frame_kernel_impl.hpp"

namespace geoexpr::bench {

FrameKernelTimes time_unframed_chain(const std::vector<ChainInput>& pool, std::uint64_t trials) {
  return detail::time_chain_kernels<false>(pool, trials);
}

}  // namespace geoexpr::bench
