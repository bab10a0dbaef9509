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
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/transport.hpp"
#include "oracles.hpp"

namespace geosyn {
namespace {

using std::numbers::pi;
using testing::Gen;

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(TransportAlong, IdentityOnConstantMetric) {
  const RobotModel model = testing::cartesian_model(1.0, 3.0);
  const Configuration q{0.1, 0.2};
  const GeodesicTrajectory curve = shoot(model, TangentVector(q, Eigen::Vector2d(0.5, -1.0)), 1.0);
  const TangentVector v(q, Eigen::Vector2d(2.0, 7.0));
  const TransportResult r = transport_along(model, curve, v);
  EXPECT_LT(testing::max_abs(r.vector.v - v.v), 1e-12);
  EXPECT_TRUE(r.vector.base.values() == curve.back().q);
  ASSERT_TRUE(r.path);
  EXPECT_EQ(r.path->samples.size(), curve.samples.size());
}

TEST(TransportAlong, GeodesicVelocityIsSelfParallel) {
  const RobotModel model = testing::bundled_model("arm7.json");
  Gen gen(131);
  const Configuration q = gen.config(7);
  const TangentVector v = gen.tangent(q);
  const GeodesicTrajectory curve = shoot(model, v, 1.0);
  const std::vector<Eigen::VectorXd> field = transport_field(model, curve, v);
  ASSERT_EQ(field.size(), curve.samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    worst = std::max(worst, testing::max_abs(field[i] - curve.samples[i].qdot));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(TransportAlong, PreservesInnerProducts) {
  const RobotModel model = testing::planar_model({});
  Gen gen(137);
  for (int trial = 0; trial < 10; ++trial) {
    const Configuration q = gen.config(2);
    const GeodesicTrajectory curve = shoot(model, gen.tangent(q), 1.0);
    const std::vector<TangentVector> in{gen.tangent(q), gen.tangent(q)};
    const std::vector<TangentVector> out = transport_along(model, curve, in);
    const Configuration end(curve.back().q);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = a; b < 2; ++b) {
        const double before = inner_product(model, q, in[a], in[b]);
        const double after = inner_product(model, end, out[a], out[b]);
        const double scale = riemannian_norm(model, in[a]) * riemannian_norm(model, in[b]);
        EXPECT_LT(std::abs(after - before) / scale, 1e-6);
      }
    }
  }
}

TEST(TransportAlong, LinearInTheVector) {
  const RobotModel model = testing::bundled_model("arm7.json");
  Gen gen(139);
  const Configuration q = gen.config(7);
  const GeodesicTrajectory curve = shoot(model, gen.tangent(q), 1.0);
  const TangentVector u = gen.tangent(q), v = gen.tangent(q);
  const double alpha = 1.7, beta = -0.6;
  const std::vector<TangentVector> in{u, v, TangentVector(q, alpha * u.v + beta * v.v)};
  const std::vector<TangentVector> out = transport_along(model, curve, in);
  EXPECT_LT(testing::max_abs(out[2].v - (alpha * out[0].v + beta * out[1].v)), 1e-8);
}

TEST(TransportAlong, BatchMatchesSingle) {
  const RobotModel model = testing::planar_model({});
  const Configuration q{0.3, 1.0};
  const GeodesicTrajectory curve = shoot(model, TangentVector(q, Eigen::Vector2d(0.4, -0.9)), 1.0);
  const std::vector<TangentVector> in{TangentVector(q, Eigen::Vector2d(1, 0)),
                                      TangentVector(q, Eigen::Vector2d(0, 1))};
  const std::vector<TangentVector> batch = transport_along(model, curve, in);
  for (std::size_t i = 0; i < in.size(); ++i) {
    EXPECT_LT(testing::max_abs(batch[i].v - transport_along(model, curve, in[i]).vector.v), 1e-14);
  }
}

TEST(TransportAlong, RoundTripAlongReversedGeodesic) {
  const RobotModel model = testing::planar_model({});
  Gen gen(149);
  for (int trial = 0; trial < 5; ++trial) {
    const Configuration q = gen.config(2);
    const GeodesicTrajectory forward = shoot(model, gen.tangent(q), 1.0);
    const TangentVector v = gen.tangent(q);
    const TangentVector there = transport_along(model, forward, v).vector;
    const GeodesicTrajectory back =
        shoot(model, TangentVector(there.base, -forward.back().qdot), 1.0);
    const TangentVector home = transport_along(model, back, there).vector;
    EXPECT_LT(testing::max_abs(home.v - v.v), 1e-5);
  }
}

TEST(TransportAlong, BaseMismatchRejected) {
  const RobotModel model = testing::planar_model({});
  const Configuration q{0.0, 1.0};
  const GeodesicTrajectory curve = shoot(model, TangentVector(q, Eigen::Vector2d(1, 0)), 1.0);
  EXPECT_THROW(transport_along(model, curve, TangentVector(Configuration{0.0, 1.1}, Eigen::Vector2d(1, 0))),
               BaseMismatchError);
  EXPECT_THROW(transport_along(model, GeodesicTrajectory{}, TangentVector(q, Eigen::Vector2d(1, 0))),
               InvalidArgumentError);
}

TEST(TransportAlong, RejectsNonGeodesicCurves) {
  const RobotModel model = testing::planar_model({});
  const Configuration a{0.0, 0.5}, b{1.2, 1.5};
  const GeodesicTrajectory line = straight_line_path(model, a, b, 1.0);
  EXPECT_THROW(transport_along(model, line, TangentVector(a, Eigen::Vector2d(1, 0))),
               InvalidArgumentError);
}

TEST(TransportAlongPath, IsometryAlongArbitraryCurve) {
  // A wobbly non-geodesic loop; metric compatibility still preserves norms.
  const RobotModel model = testing::planar_model({});
  const detail::CurveFunction curve = [](double t) {
    Eigen::VectorXd q(2), qd(2);
    q << 0.5 * std::sin(2 * pi * t), 1.0 + 0.8 * std::sin(pi * t);
    qd << pi * std::cos(2 * pi * t), 0.8 * pi * std::cos(pi * t);
    return std::pair{q, qd};
  };
  const std::vector<double> grid = time_grid(1.0, 1e-3);
  const Eigen::Vector2d v0(0.3, -0.7);
  const std::vector<Eigen::VectorXd> field = detail::transport_along_path(model, curve, grid, v0);
  ASSERT_EQ(field.size(), grid.size());
  const Configuration start(curve(0.0).first), end(curve(1.0).first);
  const double before = inner_product(model, start, TangentVector(start, v0), TangentVector(start, v0));
  const double after =
      inner_product(model, end, TangentVector(end, field.back()), TangentVector(end, field.back()));
  EXPECT_LT(relative_gap(after, before), 1e-8);
}

TEST(TransportAlongPath, ClosedLoopHasHolonomy) {
  const RobotModel model = testing::planar_model({});
  const detail::CurveFunction loop = [](double t) {
    Eigen::VectorXd q(2), qd(2);
    q << 0.6 * std::cos(2 * pi * t), 1.2 + 0.6 * std::sin(2 * pi * t);
    qd << -1.2 * pi * std::sin(2 * pi * t), 1.2 * pi * std::cos(2 * pi * t);
    return std::pair{q, qd};
  };
  const Eigen::Vector2d v0(1.0, 0.0);
  const auto field = detail::transport_along_path(model, loop, time_grid(1.0, 1e-3), v0);
  EXPECT_GT(testing::max_abs(field.back() - v0), 1e-3);
}

TEST(TransportTo, SameBaseIsIdentity) {
  const RobotModel model = testing::planar_model({});
  const TangentVector v(Configuration{0.2, 0.9}, Eigen::Vector2d(0.3, 0.4));
  const TransportResult r = transport_to(model, v, v.base);
  EXPECT_TRUE(r.vector.v == v.v);
  EXPECT_TRUE(r.vector.base == v.base);
}

TEST(TransportTo, ConstantMetricKeepsComponents) {
  const RobotModel model = testing::cartesian_model(2.0, 0.5);
  const TangentVector v(Configuration{0.0, 0.0}, Eigen::Vector2d(1.5, -2.5));
  const TransportResult r = transport_to(model, v, Configuration{3.0, -1.0});
  EXPECT_LT(testing::max_abs(r.vector.v - v.v), 1e-12);
}

TEST(TransportTo, LandsExactlyOnTargetAndMatchesConnectingGeodesic) {
  const RobotModel model = testing::planar_model({});
  const Configuration from{0.0, pi / 2}, to{0.8, 0.9};
  const TangentVector v(from, Eigen::Vector2d(0.5, -0.2));
  const TransportResult r = transport_to(model, v, to);
  EXPECT_TRUE(r.vector.base == to);
  const GeodesicTrajectory geo = shoot(model, connect(model, from, to, 1.0).velocity, 1.0);
  EXPECT_LT(testing::max_abs(r.vector.v - transport_along(model, geo, v).vector.v), 1e-14);
}

TEST(TransportTo, PairwiseInnerProductsPreserved) {
  const RobotModel model = testing::planar_model({});
  Gen gen(151);
  for (int trial = 0; trial < 5; ++trial) {
    const Configuration from = gen.config(2, -1, 1);
    const Configuration to(from.values() + gen.vector(2, -0.7, 0.7));
    const TangentVector u = gen.tangent(from), v = gen.tangent(from);
    const TangentVector tu = transport_to(model, u, to).vector;
    const TangentVector tv = transport_to(model, v, to).vector;
    const double before = inner_product(model, from, u, v);
    const double after = inner_product(model, to, tu, tv);
    const double scale = riemannian_norm(model, u) * riemannian_norm(model, v);
    EXPECT_LT(std::abs(after - before) / scale, 1e-6);
  }
}

}  // namespace
}  // namespace geosyn
