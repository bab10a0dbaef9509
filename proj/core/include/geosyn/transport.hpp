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
#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "geosyn/geodesic.hpp"
#include "geosyn/robot_model.hpp"
#include "geosyn/types.hpp"

namespace geosyn {

/// A parallel-transported vector together with the geodesic that carried it.
struct TransportResult {
  TangentVector vector;
  std::shared_ptr<const GeodesicTrajectory> path;
};

/// Levi-Civita parallel transport of `v` along a geodesic produced by shoot().
/// The transport equation dv/dt = -G^-1 Γ(qdot, v) is integrated jointly with
/// the geodesic state on the curve's own time grid; throws
/// InvalidArgumentError if the curve does not reproduce under re-integration.
TransportResult transport_along(const RobotModel& model, const GeodesicTrajectory& curve,
                                const TangentVector& v);

/// Transports several vectors in one pass along the same curve.
std::vector<TangentVector> transport_along(const RobotModel& model,
                                           const GeodesicTrajectory& curve,
                                           std::span<const TangentVector> vectors);

/// The transported vector at every sample of `curve` (index-aligned).
std::vector<Eigen::VectorXd> transport_field(const RobotModel& model,
                                             const GeodesicTrajectory& curve,
                                             const TangentVector& v);

/// Moves `v` into the tangent space at `target` along the connecting geodesic
/// found by connect(). Identity when v is already based at target.
TransportResult transport_to(const RobotModel& model, const TangentVector& v,
                             const Configuration& target, double duration = 1.0,
                             const ConnectOptions& options = {});

namespace detail {

/// Position and velocity of an arbitrary curve at time t.
using CurveFunction =
    std::function<std::pair<Eigen::VectorXd, Eigen::VectorXd>(double t)>;

/// Transport along a user-described (not necessarily geodesic) curve, RK4 on
/// `grid`. Internal: used by tests and validation only.
std::vector<Eigen::VectorXd> transport_along_path(const RobotModel& model,
                                                  const CurveFunction& curve,
                                                  const std::vector<double>& grid,
                                                  const Eigen::VectorXd& v);

}  // namespace detail

}  // namespace geosyn
