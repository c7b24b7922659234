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

#include <doctest.h>

#include <sstream>

#include "geoexpr/bench/cells.hpp"
#include "geoexpr/bench/harness.hpp"
#include "geoexpr/bench/suite.hpp"
#include "geoexpr/numdiff/oracle.hpp"
#include "test_helpers.hpp"

using namespace geoexpr;
using namespace geoexpr::bench;

TEST_CASE("hand_chain at the identity instance") {
  ChainInput in;
  in.rotations.assign(3, SO3Rotation::Identity());
  in.p1 = EuclideanVector{0.3, -0.2, 0.9};
  const ChainResult out = hand_chain(in);
  CHECK(test::max_abs(out.p2.vector(), in.p1.vector()) == 0.0);
  CHECK(test::max_abs(out.jac_p1, Eigen::Matrix3d::Identity()) == 0.0);
  for (const auto& j : out.jac_rotation) {
    CHECK(test::max_abs(j, (-cross(in.p1.vector())).eval()) == 0.0);
  }
}

TEST_CASE("hand_chain matches the direct chain formulas") {
  auto rng = test::seeded_rng(157);
  for (int trial = 0; trial < 20; ++trial) {
    ChainInput in;
    in.rotations = {random_rotation(rng), random_rotation(rng), random_rotation(rng)};
    in.p1 = EuclideanVector{random_vector3(rng)};
    const ChainResult out = hand_chain(in);

    const Eigen::Matrix3d c1 = in.rotations[0].matrix();
    const Eigen::Matrix3d c2 = in.rotations[1].matrix();
    const Eigen::Matrix3d c3 = in.rotations[2].matrix();
    const Eigen::Vector3d p2 = c1 * c2 * c3 * in.p1.vector();

    CHECK(test::max_abs(out.p2.vector(), p2) < 1e-14);
    CHECK(test::max_abs(out.jac_p1, (c1 * c2 * c3).eval()) < 1e-14);
    CHECK(test::max_abs(out.jac_rotation[0], (-cross(p2)).eval()) < 1e-14);
    CHECK(test::max_abs(out.jac_rotation[1], (-cross(p2) * c1).eval()) < 1e-14);
    CHECK(test::max_abs(out.jac_rotation[2], (-cross(p2) * c1 * c2).eval()) < 1e-14);
  }
}

TEST_CASE("hand_chain N=10 agrees with the reverse evaluator") {
  auto rng = test::seeded_rng(163);
  ChainInput in;
  in.rotations.reserve(10);
  for (int i = 0; i < 10; ++i) in.rotations.push_back(random_rotation(rng));
  in.p1 = EuclideanVector{random_vector3(rng)};

  const ChainResult hand = hand_chain(in);
  ChainCell<10> cell;
  cell.load(in);
  ChainResult rev;
  chain_reverse(cell, rev);

  CHECK(test::max_abs(hand.p2.vector(), rev.p2.vector()) < 1e-10);
  for (int i = 0; i < 10; ++i) {
    CHECK(test::max_abs(hand.jac_rotation[static_cast<size_t>(i)],
                        rev.jac_rotation[static_cast<size_t>(i)]) < 1e-10);
  }
  CHECK(test::max_abs(hand.jac_p1, rev.jac_p1) < 1e-10);
}

TEST_CASE("hand_imu: exact-match residual and oracle agreement") {
  auto rng = test::seeded_rng(167);

  ImuInput exact;
  exact.c_wi = random_rotation(rng);
  exact.c_wj = random_rotation(rng);
  exact.c_tilde = compose(inverse(exact.c_wi), exact.c_wj);
  exact.phi = RotationVector::Zero();
  CHECK(hand_imu(exact).r.vector().cwiseAbs().maxCoeff() < 1e-12);

  for (int trial = 0; trial < 10; ++trial) {
    ImuInput in;
    in.c_tilde = random_rotation(rng);
    in.phi = random_rotation_vector(rng, 0.5);
    in.c_wi = random_rotation(rng);
    in.c_wj = random_rotation(rng);
    const ImuResult out = hand_imu(in);
    if (out.near_singularity) continue;

    const auto residual = [&](const SO3Rotation& ct, const RotationVector& ph,
                              const SO3Rotation& wi, const SO3Rotation& wj) {
      return log_so3(compose(inverse(compose(ct, exp_so3(ph))), compose(inverse(wi), wj)));
    };
    const auto ft = fd_jacobian(
        [&](const SO3Rotation& x) { return residual(x, in.phi, in.c_wi, in.c_wj); }, in.c_tilde);
    const auto fphi = fd_jacobian(
        [&](const RotationVector& x) { return residual(in.c_tilde, x, in.c_wi, in.c_wj); },
        in.phi);
    const auto fwi = fd_jacobian(
        [&](const SO3Rotation& x) { return residual(in.c_tilde, in.phi, x, in.c_wj); }, in.c_wi);
    const auto fwj = fd_jacobian(
        [&](const SO3Rotation& x) { return residual(in.c_tilde, in.phi, in.c_wi, x); }, in.c_wj);
    CHECK(test::max_abs(out.jac_c_tilde, ft.dense()) < 1e-5);
    CHECK(test::max_abs(out.jac_phi, fphi.dense()) < 1e-5);
    CHECK(test::max_abs(out.jac_c_wi, fwi.dense()) < 1e-5);
    CHECK(test::max_abs(out.jac_c_wj, fwj.dense()) < 1e-5);

    // cross-method agreement with the reverse evaluator
    ImuCell cell;
    cell.load(in);
    ImuResult rev;
    imu_reverse(cell, rev);
    CHECK(test::max_abs(out.r.vector(), rev.r.vector()) < 1e-10);
    CHECK(test::max_abs(out.jac_c_tilde, rev.jac_c_tilde) < 1e-10);
    CHECK(test::max_abs(out.jac_phi, rev.jac_phi) < 1e-10);
    CHECK(test::max_abs(out.jac_c_wi, rev.jac_c_wi) < 1e-10);
    CHECK(test::max_abs(out.jac_c_wj, rev.jac_c_wj) < 1e-10);
  }
}

TEST_CASE("benchmark records: cardinality, determinism, CSV shape") {
  BenchmarkSpec spec;
  spec.experiment = Experiment::Chain;
  spec.trials = 64;
  spec.seed = 7;
  const auto records = run_benchmarks(spec);
  CHECK(records.size() == 40);  // N = 1..10, four methods each

  for (const auto& r : records) {
    CHECK(r.max_abs_dev <= kMaxDeviation);
  }

  BenchmarkSpec imu_spec;
  imu_spec.experiment = Experiment::Imu;
  imu_spec.trials = 64;
  const auto imu_records = run_benchmarks(imu_spec);
  CHECK(imu_records.size() == 4);

  // CSV: mandatory header, deterministic non-timing columns
  std::ostringstream csv1, csv2;
  write_csv(csv1, imu_records);
  const auto imu_again = run_benchmarks(imu_spec);
  write_csv(csv2, imu_again);
  std::istringstream s1(csv1.str()), s2(csv2.str());
  std::string line1, line2;
  std::getline(s1, line1);
  std::getline(s2, line2);
  CHECK(line1 == "experiment,N,method,trials,mean_ns,stddev_ns,max_abs_dev");
  CHECK(line1 == line2);
  while (std::getline(s1, line1) && std::getline(s2, line2)) {
    // timing columns (5 and 6) may differ; the rest must not
    const auto strip_timing = [](const std::string& line) {
      std::istringstream ss(line);
      std::string field, kept;
      for (int i = 0; std::getline(ss, field, ','); ++i) {
        if (i == 4 || i == 5) continue;
        kept += field + ",";
      }
      return kept;
    };
    CHECK(strip_timing(line1) == strip_timing(line2));
  }
}

TEST_CASE("batch floor override and spec validation") {
  setenv("BENCH_BATCH_NS", "54321", 1);
  CHECK(batch_floor_ns() == 54321);
  unsetenv("BENCH_BATCH_NS");
  CHECK(batch_floor_ns() == 10000);

  BenchmarkSpec bad;
  bad.trials = 0;
  CHECK_THROWS_AS(static_cast<void>(run_benchmarks(bad)), std::invalid_argument);
  bad.trials = 16;
  bad.n_min = 5;
  bad.n_max = 2;
  CHECK_THROWS_AS(static_cast<void>(run_benchmarks(bad)), std::invalid_argument);

  CHECK_THROWS_AS(
      static_cast<void>(fd_jacobian([](const EuclideanVector& v) { return v; },
                                    EuclideanVector{1, 2, 3}, OracleConfig{.step = -1.0})),
      std::invalid_argument);
}

TEST_CASE("verify sweep logs per cell and passes") {
  BenchmarkSpec spec;
  spec.experiment = Experiment::Chain;
  spec.n_max = 3;
  std::ostringstream log;
  CHECK(verify_benchmarks(spec, log));
  int lines = 0;
  std::istringstream in(log.str());
  for (std::string line; std::getline(in, line);) {
    CHECK(line.substr(0, 2) == "ok");
    ++lines;
  }
  CHECK(lines == 12);  // 3 chain lengths, four methods
}
