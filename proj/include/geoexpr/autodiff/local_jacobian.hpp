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

#include <Eigen/Core>

#include <optional>

namespace geoexpr {

/// Dense tangent-space Jacobian block with a distinguished exact-zero state.
///
/// Dimensions are always those of the minimal representation: 3 for SO(3),
/// so(3) and R^3 blocks, 6 for SE(3) and se(3). The empty state represents
/// the exactly-zero Jacobian without storing or touching any entries.
template <int Rows, int Cols>
class LocalJacobian {
 public:
  using Matrix = Eigen::Matrix<double, Rows, Cols>;

  static constexpr int kRows = Rows;
  static constexpr int kCols = Cols;

  LocalJacobian() = default;
  LocalJacobian(const Matrix& m) : m_(m) {}  // NOLINT: implicit by design of the AD sums

  static LocalJacobian Zero() { return LocalJacobian{}; }
  static LocalJacobian Identity()
    requires(Rows == Cols)
  {
    return LocalJacobian{Matrix::Identity()};
  }

  [[nodiscard]] bool is_zero() const { return !m_.has_value(); }

  /// Dense value; materializes zero on demand.
  [[nodiscard]] Matrix dense() const { return m_ ? *m_ : Matrix::Zero(); }

  /// Stored matrix. Only valid when not in the zero state.
  [[nodiscard]] const Matrix& matrix() const { return *m_; }

 private:
  std::optional<Matrix> m_;
};

}  // namespace geoexpr
