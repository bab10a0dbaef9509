// Copyright 2026 The Geosyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <numbers>

#include <gtest/gtest.h>

#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"
#include "oracles.hpp"

namespace geosyn {
namespace {

using std::numbers::pi;
using testing::Gen;

TEST(Connect, SameEndpointsGiveZeroVelocity) {
  const RobotModel model = testing::planar_model({});
  const Configuration q{0.4, -1.0};
  const ConnectResult r = connect(model, q, q, 1.0);
  EXPECT_TRUE(r.velocity.v.isZero(0.0));
  EXPECT_TRUE(r.velocity.base == q);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Connect, ConstantMetricIsEuclidean) {
  const RobotModel model = testing::cartesian_model(2.0, 1.0);
  const Configuration a{0.1, 0.2}, b{-0.5, 1.4};
  const ConnectResult r = connect(model, a, b, 2.0);
  EXPECT_LT(testing::max_abs(r.velocity.v - (b.values() - a.values()) / 2.0), 1e-12);
}

TEST(Connect, PlanarRoundTrip) {
  const RobotModel model = testing::planar_model({});
  const Configuration q0{0.0, pi / 2}, q1{1.0, 0.5};
  const ConnectResult r = connect(model, q0, q1, 1.0);
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_GT(r.iterations, 0);
  const GeodesicTrajectory traj = shoot(model, r.velocity, 1.0);
  EXPECT_LT(testing::max_abs(traj.back().q - q1.values()), 1e-6);
  EXPECT_EQ(testing::max_abs(traj.back().q - q1.values()), r.residual);
}

TEST(Connect, RoundTripOnRandomPairs) {
  const RobotModel model = testing::planar_model({});
  Gen gen(127);
  for (int trial = 0; trial < 10; ++trial) {
    const Configuration q0 = gen.config(2, -1, 1);
    const Configuration q1(q0.values() + gen.vector(2, -1, 1));
    const ConnectResult r = connect(model, q0, q1, 1.0);
    const GeodesicTrajectory traj = shoot(model, r.velocity, 1.0);
    EXPECT_LT(testing::max_abs(traj.back().q - q1.values()), 1e-8);
  }
}

TEST(Connect, NoAngleWrapping) {
  const RobotModel model = testing::pendulum_model(1.0, 1.0);
  const ConnectResult r = connect(model, Configuration{0.0}, Configuration{0.5 + 2 * pi}, 1.0);
  EXPECT_NEAR(r.velocity.v[0], 0.5 + 2 * pi, 1e-9);
}

TEST(Connect, RespectsIntegratorStep) {
  const RobotModel model = testing::planar_model({});
  const Configuration q0{0.0, 1.0}, q1{0.8, 0.2};
  ConnectOptions options;
  options.step = 0.01;
  const ConnectResult r = connect(model, q0, q1, 1.0, options);
  EXPECT_LT(testing::max_abs(shoot(model, r.velocity, 1.0, 0.01).back().q - q1.values()), 1e-8);
}

TEST(Connect, NonConvergenceReportsBestResidual) {
  const RobotModel model = testing::planar_model({});
  ConnectOptions options;
  options.max_iterations = 1;
  options.tolerance = 1e-14;
  try {
    connect(model, Configuration{0.0, 0.3}, Configuration{2.0, -1.0}, 1.0, options);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.best_residual(), 0.0);
    EXPECT_NE(std::string(e.what()).find("best residual"), std::string::npos);
  }
}

TEST(Connect, PreconditionsEnforced) {
  const RobotModel model = testing::planar_model({});
  EXPECT_THROW(connect(model, Configuration{0.0, 0.0}, Configuration{1.0, 0.0}, 0.0),
               InvalidArgumentError);
  EXPECT_THROW(connect(model, Configuration{0.0, 0.0}, Configuration{1.0}, 1.0), DimensionError);
}

TEST(Connect, SevenDofRoundTrip) {
  const RobotModel model = testing::bundled_model("arm7.json");
  const Configuration q0{0.0, 0.3, 0.0, 0.8, 0.0, 0.2, 0.0};
  const Configuration q1{0.3, 0.1, -0.2, 1.1, 0.2, 0.0, 0.1};
  const ConnectResult r = connect(model, q0, q1, 1.0);
  EXPECT_LT(testing::max_abs(shoot(model, r.velocity, 1.0).back().q - q1.values()), 1e-8);
}

}  // namespace
}  // namespace geosyn
