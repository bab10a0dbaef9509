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
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/LU>

#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"

namespace geosyn {

namespace {

constexpr int kMaxHalvings = 30;

struct EndpointMap {
  const RobotModel& model;
  const Configuration& q0;
  const Eigen::VectorXd& target;
  double duration;
  double step;

  Eigen::VectorXd operator()(const Eigen::VectorXd& v) const {
    const GeodesicTrajectory traj = shoot(model, TangentVector(q0, v), duration, step);
    return traj.back().q - target;
  }
};

}  // namespace

ConnectResult connect(const RobotModel& model, const Configuration& q0,
                      const Configuration& q1, double duration,
                      const ConnectOptions& options) {
  model.check_dimension(q0);
  model.check_dimension(q1);
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgumentError("duration must be positive");
  }
  if (!(options.tolerance > 0.0) || options.max_iterations < 0 ||
      !(options.perturbation > 0.0)) {
    throw InvalidArgumentError("invalid boundary-value solver options");
  }
  const Eigen::Index n = model.dof();
  const EndpointMap endpoint{model, q0, q1.values(), duration, options.step};

  Eigen::VectorXd v = (q1.values() - q0.values()) / duration;
  Eigen::VectorXd r = endpoint(v);
  double best = r.cwiseAbs().maxCoeff();

  int iteration = 0;
  while (best >= options.tolerance) {
    if (iteration == options.max_iterations) {
      throw ConvergenceError("geodesic boundary-value solve did not converge after " +
                                 std::to_string(iteration) + " iterations",
                             best);
    }
    ++iteration;

    Eigen::MatrixXd J(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::VectorXd vp = v;
      vp[j] += options.perturbation * std::max(1.0, std::abs(v[j]));
      J.col(j) = (endpoint(vp) - r) / (vp[j] - v[j]);
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
    if (!lu.isInvertible()) {
      throw ConvergenceError("singular shooting Jacobian (conjugate point?)", best);
    }
    const Eigen::VectorXd dv = lu.solve(-r);

    double alpha = 1.0;
    std::optional<Eigen::VectorXd> accepted_v, accepted_r;
    for (int h = 0; h <= kMaxHalvings; ++h, alpha *= 0.5) {
      const Eigen::VectorXd candidate = v + alpha * dv;
      try {
        Eigen::VectorXd rc = endpoint(candidate);
        if (rc.allFinite() && rc.norm() < r.norm()) {
          accepted_v = candidate;
          accepted_r = std::move(rc);
          break;
        }
      } catch (const DivergenceError&) {
      } catch (const SingularMetricError&) {
      }
    }
    if (!accepted_v) {
      throw ConvergenceError("damped Newton step failed to reduce the residual", best);
    }
    v = std::move(*accepted_v);
    r = std::move(*accepted_r);
    best = r.cwiseAbs().maxCoeff();
  }
  return {TangentVector(q0, v), best, iteration};
}

}  // namespace geosyn
