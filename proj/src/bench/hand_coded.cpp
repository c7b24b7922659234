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

#include "geoexpr/bench/hand_coded.hpp"

namespace geoexpr::bench {

namespace {

// out = -v^x m, one cross product per column.
inline void neg_cross_times(const Eigen::Vector3d& v, const Eigen::Matrix3d& m,
                            Eigen::Matrix3d& out) {
  for (int j = 0; j < 3; ++j) {
    out.col(j) = m.col(j).cross(v);  // (m_j x v) = -(v x m_j)
  }
}

}  // namespace

void hand_chain(const ChainInput& in, ChainResult& out) {
  const size_t n = in.rotations.size();
  out.jac_rotation.resize(n);

  // dp2/dC_1 = -p2^x needs p2 first; prefix products A_i = C_1 ... C_i are
  // shared between the value, dp2/dp1, and every rotation Jacobian.
  Eigen::Matrix3d prefix = in.rotations[0].matrix();
  std::vector<Eigen::Matrix3d>& jac = out.jac_rotation;
  // Stash A_{i-1} in jac[i] while building, then overwrite in place.
  for (size_t i = 1; i < n; ++i) {
    jac[i] = prefix;
    prefix = prefix * in.rotations[i].matrix();
  }
  out.jac_p1 = prefix;
  const Eigen::Vector3d p2 = prefix * in.p1.vector();
  out.p2 = EuclideanVector{p2};

  out.jac_rotation[0] = -cross(p2);
  for (size_t i = 1; i < n; ++i) {
    const Eigen::Matrix3d a_prev = jac[i];
    neg_cross_times(p2, a_prev, jac[i]);
  }
}

void hand_imu(const ImuInput& in, ImuResult& out) {
  // a = c_tilde * exp(phi); b = c_wi^T c_wj; d = a^T b; r = log(d)
  const Eigen::Matrix3d e = exp_so3(in.phi).matrix();
  const Eigen::Matrix3d a = in.c_tilde.matrix() * e;
  const Eigen::Matrix3d b = in.c_wi.matrix().transpose() * in.c_wj.matrix();
  const Eigen::Matrix3d d = a.transpose() * b;
  const RotationVector r = log_so3(SO3Rotation{d});
  out.r = r;
  out.near_singularity = r.angle() > M_PI - 1e-3;

  // l = Jl^-1(r); all four Jacobians share l a^T.
  const Eigen::Matrix3d l = so3_left_jacobian_inverse(r.vector());
  out.jac_c_tilde = -l * a.transpose();
  out.jac_phi = out.jac_c_tilde * in.c_tilde.matrix() * so3_left_jacobian(in.phi.vector());
  out.jac_c_wi = out.jac_c_tilde * in.c_wi.matrix().transpose();
  out.jac_c_wj = -out.jac_c_wi;
}

}  // namespace geoexpr::bench
