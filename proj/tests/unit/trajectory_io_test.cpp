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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/trajectory_io.hpp"
#include "oracles.hpp"

namespace geosyn {
namespace {

std::string to_csv(const RobotModel& model, const GeodesicTrajectory& traj) {
  std::ostringstream out;
  write_trajectory_csv(out, model, traj);
  return out.str();
}

TEST(TrajectoryCsv, Header) {
  EXPECT_EQ(trajectory_csv_header(2), "t,q1,q2,qd1,qd2,qdd1,qdd2,energy");
  EXPECT_EQ(trajectory_csv_header(1), "t,q1,qd1,qdd1,energy");
}

TEST(TrajectoryCsv, FullPrecisionRoundTrip) {
  const RobotModel model = testing::bundled_model("arm7.json");
  testing::Gen gen(191);
  const Configuration q = gen.config(7);
  const GeodesicTrajectory traj = shoot(model, gen.tangent(q), 0.2, 0.01);
  const GeodesicTrajectory back = read_trajectory_csv(to_csv(model, traj));
  ASSERT_EQ(back.samples.size(), traj.samples.size());
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    ASSERT_EQ(back.samples[i].t, traj.samples[i].t);
    ASSERT_TRUE(back.samples[i].q == traj.samples[i].q);
    ASSERT_TRUE(back.samples[i].qdot == traj.samples[i].qdot);
    ASSERT_TRUE(back.samples[i].qddot == traj.samples[i].qddot);
  }
  EXPECT_EQ(back.energy, traj.energy);
  EXPECT_EQ(back.duration, traj.duration);
  EXPECT_LT(max_relative_energy_drift(model, back), 1e-6);
  EXPECT_LT(max_ode_residual(model, back), 1e-8);
}

TEST(TrajectoryCsv, PendulumRowsAndLastValue) {
  const RobotModel model = testing::pendulum_model(1.0, 1.0);
  const std::string csv =
      to_csv(model, shoot(model, TangentVector(Configuration{0.0}, Eigen::VectorXd::Ones(1)), 1.0));
  std::istringstream in(csv);
  std::string line, last;
  int rows = -1;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  EXPECT_EQ(rows, 1001);
  EXPECT_EQ(last.rfind("1,1,1,0,0.5", 0), 0u) << last;
}

TEST(TrajectoryCsv, FormatDoubleUsesSeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(TrajectoryCsv, RejectsMalformedInput) {
  EXPECT_THROW(read_trajectory_csv(""), ParseError);
  EXPECT_THROW(read_trajectory_csv("t,q1,qd1,qdd1,energy\n"), ParseError);
  EXPECT_THROW(read_trajectory_csv("t,x1,qd1,qdd1,energy\n0,0,0,0,0\n"), ParseError);
  EXPECT_THROW(read_trajectory_csv("t,q1,qd1,qdd1,energy\n0,0,0,0\n"), ParseError);
  EXPECT_THROW(read_trajectory_csv("t,q1,qd1,qdd1,energy\n0,0,0,0,0\n0,1,0,0,0\n"), ParseError);
  try {
    read_trajectory_csv("t,q1,qd1,qdd1,energy\n0,0,0,0,0\n0.1,abc,0,0,0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.locus(), "line 3");
  }
}

TEST(TrajectoryCsv, SaveLeavesNoPartialFile) {
  const RobotModel model = testing::planar_model({});
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "geosyn_io_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / "traj.csv";
  const GeodesicTrajectory traj =
      shoot(model, TangentVector(Configuration{0.0, 1.0}, Eigen::Vector2d(1, 0)), 0.1, 0.01);
  save_trajectory_csv(path, model, traj);
  EXPECT_TRUE(std::filesystem::exists(path));
  EXPECT_FALSE(std::filesystem::exists(dir / "traj.csv.partial"));
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), to_csv(model, traj));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace geosyn
