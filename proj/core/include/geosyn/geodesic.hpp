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

#include <vector>

#include <Eigen/Core>

#include "geosyn/robot_model.hpp"
#include "geosyn/types.hpp"

namespace geosyn {

/// Default fixed RK4 step in seconds.
inline constexpr double kDefaultStep = 1e-3;

struct TrajectorySample {
  double t = 0.0;
  Eigen::VectorXd q;
  Eigen::VectorXd qdot;
  Eigen::VectorXd qddot;
};

/// Time-sampled joint-space curve. shoot() produces geodesics; the same
/// container also carries reference paths such as straight-line
/// interpolations. `energy` is the kinetic energy of the first sample.
struct GeodesicTrajectory {
  std::vector<TrajectorySample> samples;
  double duration = 0.0;
  double energy = 0.0;

  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }
  TangentVector initial_state() const;
  TangentVector terminal_state() const;
};

/// Uniform grid 0, step, 2 step, ..., duration. The final interval is shorter
/// when duration is not a multiple of step.
std::vector<double> time_grid(double duration, double step);

/// qddot = -G(q)^-1 c(q, qdot) from Christoffel symbols of the first kind.
Eigen::VectorXd geodesic_acceleration(const RobotModel& model, const Configuration& q,
                                      const TangentVector& qdot);

/// Integrates the geodesic equation from `start` with fixed-step RK4.
/// Throws SingularMetricError or DivergenceError carrying the failure time.
GeodesicTrajectory shoot(const RobotModel& model, const TangentVector& start,
                         double duration, double step = kDefaultStep);

/// Same initial-value problem, but the velocity-product term comes from
/// zero-gravity recursive Newton-Euler and the mass matrix from unit-
/// acceleration inverse dynamics. Shares no code with shoot() beyond RK4.
GeodesicTrajectory passive_dynamics_oracle(const RobotModel& model,
                                           const TangentVector& start,
                                           double duration, double step = kDefaultStep);

/// Zero-torque, zero-gravity forward dynamics through inverse_dynamics().
Eigen::VectorXd passive_acceleration(const RobotModel& model, const Eigen::VectorXd& q,
                                     const Eigen::VectorXd& qdot);

struct ConnectOptions {
  double tolerance = 1e-8;     ///< per-joint terminal error
  int max_iterations = 50;
  double perturbation = 1e-6;  ///< finite-difference Jacobian step
  double step = kDefaultStep;  ///< integrator step used by every shot
};

struct ConnectResult {
  TangentVector velocity;
  double residual = 0.0;  ///< max-abs terminal error of the final shot
  int iterations = 0;
};

/// Single-shooting damped Newton for the initial velocity whose geodesic
/// reaches `q1` after `duration`. Starts from (q1 - q0) / duration and halves
/// the update whenever the residual grows. No angle wrapping is applied.
ConnectResult connect(const RobotModel& model, const Configuration& q0,
                      const Configuration& q1, double duration,
                      const ConnectOptions& options = {});

/// Trapezoidal quadrature of sqrt(qdotᵀ G qdot) over the samples.
double riemannian_length(const RobotModel& model, const GeodesicTrajectory& traj);

/// Constant-speed straight line q0 + (t / duration)(q1 - q0) sampled on the
/// same grid shoot() would use.
GeodesicTrajectory straight_line_path(const RobotModel& model, const Configuration& q0,
                                      const Configuration& q1, double duration,
                                      double step = kDefaultStep);

/// max_t |k(t) - k(0)| / max(k(0), eps).
double max_relative_energy_drift(const RobotModel& model, const GeodesicTrajectory& traj);

/// max over samples of ||G(q) qddot + c(q, qdot)||_inf.
double max_ode_residual(const RobotModel& model, const GeodesicTrajectory& traj);

struct SampleLimitViolation {
  std::size_t sample = 0;
  LimitViolation violation;
};

/// Post-hoc joint-limit report. Trajectories are generated limit-blind.
std::vector<SampleLimitViolation> check_limits(const RobotModel& model,
                                               const GeodesicTrajectory& traj);

}  // namespace geosyn
