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

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "geosyn/errors.hpp"

namespace geosyn::detail {

// Classical fixed-step Runge-Kutta over a precomputed time grid.
// `rhs(x)` returns dx/dt for the autonomous system. `observe(k, t, x, dx)`
// sees every grid point together with the derivative already evaluated there,
// so callers can record accelerations without a second evaluation.
template <class Rhs, class Observer>
void integrate_rk4(Eigen::VectorXd x, const std::vector<double>& grid, Rhs&& rhs,
                   Observer&& observe) {
  const std::size_t n = grid.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double t = grid[k];
    Eigen::VectorXd k1;
    try {
      k1 = rhs(x);
    } catch (const SingularMetricError&) {
      throw SingularMetricError("mass matrix is not positive definite", t);
    }
    observe(k, t, x, k1);
    if (k + 1 == n) break;
    const double h = grid[k + 1] - t;
    try {
      const Eigen::VectorXd k2 = rhs(x + (0.5 * h) * k1);
      const Eigen::VectorXd k3 = rhs(x + (0.5 * h) * k2);
      const Eigen::VectorXd k4 = rhs(x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const SingularMetricError&) {
      throw SingularMetricError("mass matrix is not positive definite", t);
    }
  }
}

}  // namespace geosyn::detail
