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
#include "geosyn/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "geosyn/dynamics.hpp"
#include "geosyn/errors.hpp"
#include "geosyn/metric.hpp"
#include "kernels.hpp"
#include "rk4.hpp"

namespace geosyn {

namespace {

constexpr double kMaxSpeed = 1e6;

void check_timing(double duration, double step) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgumentError("duration must be positive");
  }
  if (!(step > 0.0) || step > duration) {
    throw InvalidArgumentError("step must satisfy 0 < step <= duration");
  }
}

void guard_state(double t, const Eigen::VectorXd& q, const Eigen::VectorXd& qdot) {
  if (!q.allFinite() || !qdot.allFinite()) {
    throw DivergenceError("non-finite state", t);
  }
  if (qdot.norm() > kMaxSpeed) {
    throw DivergenceError("joint speed exceeded divergence bound", t);
  }
}

// Integrates x = [q; qdot] with the given acceleration law and records samples.
template <class Accel>
GeodesicTrajectory integrate_second_order(const RobotModel& model,
                                          const TangentVector& start, double duration,
                                          double step, Accel&& accel) {
  model.check_dimension(start.base);
  check_timing(duration, step);
  const Eigen::Index n = model.dof();
  const std::vector<double> grid = time_grid(duration, step);

  Eigen::VectorXd x(2 * n);
  x << start.base.values(), start.v;

  GeodesicTrajectory traj;
  traj.duration = duration;
  traj.samples.reserve(grid.size());
  detail::integrate_rk4(
      x, grid,
      [&](const Eigen::VectorXd& s) {
        Eigen::VectorXd dx(2 * n);
        dx.head(n) = s.tail(n);
        dx.tail(n) = accel(Eigen::VectorXd(s.head(n)), Eigen::VectorXd(s.tail(n)));
        return dx;
      },
      [&](std::size_t, double t, const Eigen::VectorXd& s, const Eigen::VectorXd& ds) {
        guard_state(t, s.head(n), s.tail(n));
        traj.samples.push_back({t, s.head(n), s.tail(n), ds.tail(n)});
      });

  const Eigen::MatrixXd G0 = mass_matrix(model, start.base);
  traj.energy = 0.5 * start.v.dot(G0 * start.v);
  return traj;
}

}  // namespace

TangentVector GeodesicTrajectory::initial_state() const {
  return TangentVector(Configuration(front().q), front().qdot);
}

TangentVector GeodesicTrajectory::terminal_state() const {
  return TangentVector(Configuration(back().q), back().qdot);
}

std::vector<double> time_grid(double duration, double step) {
  check_timing(duration, step);
  // Tolerate representation error so that e.g. 1.0 / 1e-3 gives 1000 steps.
  const double ratio = duration / step;
  auto steps = static_cast<std::size_t>(std::ceil(ratio - 1e-9 * ratio));
  steps = std::max<std::size_t>(steps, 1);
  std::vector<double> grid(steps + 1);
  for (std::size_t k = 0; k < steps; ++k) grid[k] = double(k) * step;
  grid[steps] = duration;
  return grid;
}

Eigen::VectorXd geodesic_acceleration(const RobotModel& model, const Configuration& q,
                                      const TangentVector& qdot) {
  model.check_dimension(q);
  require_base(q, qdot);
  const detail::LocalGeometry geo = detail::local_geometry(model, q.values());
  return -geo.llt.solve(detail::contract(geo.gamma, qdot.v, qdot.v));
}

GeodesicTrajectory shoot(const RobotModel& model, const TangentVector& start,
                         double duration, double step) {
  return integrate_second_order(
      model, start, duration, step,
      [&](const Eigen::VectorXd& q, const Eigen::VectorXd& qdot) -> Eigen::VectorXd {
        const detail::LocalGeometry geo = detail::local_geometry(model, q);
        return -geo.llt.solve(detail::contract(geo.gamma, qdot, qdot));
      });
}

Eigen::VectorXd passive_acceleration(const RobotModel& model, const Eigen::VectorXd& q,
                                     const Eigen::VectorXd& qdot) {
  const Eigen::Index n = model.dof();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  const Eigen::VectorXd bias = inverse_dynamics(model, q, qdot, zero);
  Eigen::MatrixXd G(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    G.col(j) = inverse_dynamics(model, q, zero, Eigen::VectorXd::Unit(n, j));
  }
  G = 0.5 * (G + G.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) {
    throw SingularMetricError("mass matrix is not positive definite");
  }
  return -llt.solve(bias);
}

GeodesicTrajectory passive_dynamics_oracle(const RobotModel& model,
                                           const TangentVector& start,
                                           double duration, double step) {
  return integrate_second_order(
      model, start, duration, step,
      [&](const Eigen::VectorXd& q, const Eigen::VectorXd& qdot) {
        return passive_acceleration(model, q, qdot);
      });
}

double riemannian_length(const RobotModel& model, const GeodesicTrajectory& traj) {
  double length = 0.0;
  double previous_speed = 0.0;
  Eigen::MatrixXd G;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const TrajectorySample& s = traj.samples[k];
    model.check_dimension(s.q);
    detail::crba(model, s.q, G);
    const double speed = std::sqrt(std::max(0.0, s.qdot.dot(G * s.qdot)));
    if (k > 0) {
      length += 0.5 * (speed + previous_speed) * (s.t - traj.samples[k - 1].t);
    }
    previous_speed = speed;
  }
  return length;
}

GeodesicTrajectory straight_line_path(const RobotModel& model, const Configuration& q0,
                                      const Configuration& q1, double duration,
                                      double step) {
  model.check_dimension(q0);
  model.check_dimension(q1);
  const std::vector<double> grid = time_grid(duration, step);
  const Eigen::VectorXd delta = q1.values() - q0.values();
  const Eigen::VectorXd velocity = delta / duration;
  GeodesicTrajectory traj;
  traj.duration = duration;
  traj.samples.reserve(grid.size());
  for (double t : grid) {
    traj.samples.push_back({t, q0.values() + (t / duration) * delta, velocity,
                            Eigen::VectorXd::Zero(model.dof())});
  }
  const Eigen::MatrixXd G0 = mass_matrix(model, q0);
  traj.energy = 0.5 * velocity.dot(G0 * velocity);
  return traj;
}

double max_relative_energy_drift(const RobotModel& model,
                                 const GeodesicTrajectory& traj) {
  if (traj.samples.empty()) return 0.0;
  Eigen::MatrixXd G;
  double k0 = 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const TrajectorySample& s = traj.samples[k];
    detail::crba(model, s.q, G);
    const double energy = 0.5 * s.qdot.dot(G * s.qdot);
    if (k == 0) k0 = energy;
    worst = std::max(worst, std::abs(energy - k0));
  }
  return worst / std::max(k0, std::numeric_limits<double>::min());
}

double max_ode_residual(const RobotModel& model, const GeodesicTrajectory& traj) {
  double worst = 0.0;
  for (const TrajectorySample& s : traj.samples) {
    const detail::LocalGeometry geo = detail::local_geometry(model, s.q);
    const Eigen::VectorXd r = geo.G * s.qddot + detail::contract(geo.gamma, s.qdot, s.qdot);
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<SampleLimitViolation> check_limits(const RobotModel& model,
                                               const GeodesicTrajectory& traj) {
  std::vector<SampleLimitViolation> out;
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    for (const LimitViolation& v : check_limits(model, Configuration(traj.samples[k].q))) {
      out.push_back({k, v});
    }
  }
  return out;
}

}  // namespace geosyn
