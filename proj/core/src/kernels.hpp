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

// Unchecked numerical kernels shared by the metric, geodesic and transport
// modules. Callers have already validated dimensions.

#include <Eigen/Core>
#include <Eigen/Cholesky>

#include "geosyn/metric.hpp"
#include "geosyn/robot_model.hpp"

namespace geosyn::detail {

// Composite rigid body algorithm. Writes the full symmetric matrix.
void crba(const RobotModel& model, const Eigen::VectorXd& q, Eigen::MatrixXd& G);

// Factorizes G; throws SingularMetricError when it is not positive definite.
Eigen::LLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& G);

// Central-difference metric derivatives, dg(i, j, k) = d g_ij / d q_k.
void metric_derivatives_fd(const RobotModel& model, const Eigen::VectorXd& q,
                           Tensor3& dg);

// gamma(i, j, k) = 0.5 (dg(i,j,k) + dg(i,k,j) - dg(j,k,i)).
void christoffel_from_derivatives(const Tensor3& dg, Tensor3& gamma);

// out_i = sum_jk gamma(i, j, k) a_j b_k.
Eigen::VectorXd contract(const Tensor3& gamma, const Eigen::VectorXd& a,
                         const Eigen::VectorXd& b);

// Everything the geodesic and transport right-hand sides need at one q.
struct LocalGeometry {
  Eigen::MatrixXd G;
  Eigen::LLT<Eigen::MatrixXd> llt;
  Tensor3 gamma;
};
LocalGeometry local_geometry(const RobotModel& model, const Eigen::VectorXd& q);

}  // namespace geosyn::detail
