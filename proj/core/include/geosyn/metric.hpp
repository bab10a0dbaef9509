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

/// Dense N x N x N array of doubles, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Eigen::Index n) : n_(n), data_(std::size_t(n * n * n), 0.0) {}

  Eigen::Index dimension() const noexcept { return n_; }
  double& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[std::size_t((i * n_ + j) * n_ + k)];
  }
  double operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[std::size_t((i * n_ + j) * n_ + k)];
  }
  double max_abs() const;

 private:
  Eigen::Index n_ = 0;
  std::vector<double> data_;
};

/// The kinetic-energy metric at one configuration.
struct MetricTensor {
  Configuration base;
  Eigen::MatrixXd g;
};

/// dg(i, j, k) = d g_ij / d q_k.
struct MetricDerivatives {
  Configuration base;
  Tensor3 dg;
};

/// Christoffel symbols of the first kind, gamma(i, j, k) = Γ_ijk, symmetric
/// in (j, k).
struct ChristoffelFirst {
  Configuration base;
  Tensor3 gamma;
};

MetricTensor metric_at(const RobotModel& model, const Configuration& q);

/// Central differences of the mass matrix with per-coordinate step
/// h_k = 1e-6 * max(1, |q_k|).
MetricDerivatives metric_derivatives(const RobotModel& model, const Configuration& q);

ChristoffelFirst christoffel_first(const RobotModel& model, const Configuration& q);
ChristoffelFirst christoffel_first(const MetricDerivatives& derivatives);

/// c_i = Σ_jk Γ_ijk qdot_j qdot_k. `qdot` must be based at `q`.
Eigen::VectorXd coriolis_vector(const RobotModel& model, const Configuration& q,
                                const TangentVector& qdot);

/// ½ qdotᵀ G(q) qdot.
double kinetic_energy(const RobotModel& model, const Configuration& q,
                      const TangentVector& qdot);

/// uᵀ G(q) v.
double inner_product(const RobotModel& model, const Configuration& q,
                     const TangentVector& u, const TangentVector& v);

/// Riemannian norm sqrt(<v, v>_G) at v's own base.
double riemannian_norm(const RobotModel& model, const TangentVector& v);

/// Throws BaseMismatchError unless `v` is based exactly at `q`.
void require_base(const Configuration& q, const TangentVector& v);

}  // namespace geosyn
