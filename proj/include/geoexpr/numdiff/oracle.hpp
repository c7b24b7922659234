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

#include <stdexcept>
#include <string>
#include <type_traits>

#include "geoexpr/autodiff/local_jacobian.hpp"
#include "geoexpr/manifold/ops.hpp"

namespace geoexpr {

/// Central finite-difference settings. The default step balances truncation
/// against round-off at 64-bit precision.
struct OracleConfig {
  double step = 1e-6;
  double tolerance = 1e-5;
};

/// Central-difference local Jacobian of f at x.
///
/// Column i is [f(x [+] h e_i) [-] f(x [+] -h e_i)] / (2h), where the
/// perturbation and difference operators are boxplus/boxminus for group
/// values and plain +/- for Euclidean and tangent values. This path is
/// deliberately independent of the analytic Jacobian rules it validates.
template <typename F, typename X>
[[nodiscard]] auto fd_jacobian(F&& f, const X& x, const OracleConfig& cfg = {}) {
  using OpsX = manifold_ops<X>;
  using Y = std::remove_cvref_t<std::invoke_result_t<F&, const X&>>;
  using OpsY = manifold_ops<Y>;

  if (!(cfg.step > 0.0) || !(cfg.tolerance > 0.0)) {
    throw std::invalid_argument("fd_jacobian: step and tolerance must be positive");
  }

  Eigen::Matrix<double, OpsY::dim, OpsX::dim> jac;
  Eigen::Matrix<double, OpsX::dim, 1> delta = Eigen::Matrix<double, OpsX::dim, 1>::Zero();
  for (int i = 0; i < OpsX::dim; ++i) {
    delta[i] = cfg.step;
    const Y fp = f(OpsX::perturb(x, delta));
    delta[i] = -cfg.step;
    const Y fm = f(OpsX::perturb(x, delta));
    delta[i] = 0.0;

    const Eigen::Matrix<double, OpsY::dim, 1> col =
        OpsY::difference(fp, fm) / (2.0 * cfg.step);
    if (!col.allFinite()) {
      throw std::runtime_error("fd_jacobian: non-finite result in column " + std::to_string(i));
    }
    jac.col(i) = col;
  }
  return LocalJacobian<OpsY::dim, OpsX::dim>{jac};
}

}  // namespace geoexpr
