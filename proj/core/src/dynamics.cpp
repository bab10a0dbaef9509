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
#include "geosyn/dynamics.hpp"

#include <vector>

#include "geosyn/errors.hpp"
#include "kernels.hpp"
#include "spatial.hpp"

namespace geosyn {

namespace detail {

void crba(const RobotModel& model, const Eigen::VectorXd& q, Eigen::MatrixXd& G) {
  const Eigen::Index n = model.dof();
  const auto& joints = model.joints();
  const auto& links = model.links();

  std::vector<spatial::Transform> X(static_cast<std::size_t>(n));
  std::vector<spatial::Vector6d> S(static_cast<std::size_t>(n));
  std::vector<spatial::Matrix6d> Ic(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ui = std::size_t(i);
    X[ui] = spatial::parent_to_child(joints[ui], q[i]);
    S[ui] = spatial::motion_subspace(joints[ui]);
    Ic[ui] = spatial::inertia(links[ui + 1]);
  }
  for (Eigen::Index i = n - 1; i > 0; --i) {
    const auto ui = std::size_t(i);
    const spatial::Matrix6d Xm = X[ui].motion_matrix();
    Ic[ui - 1].noalias() += Xm.transpose() * Ic[ui] * Xm;
  }

  G.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    spatial::Vector6d F = Ic[std::size_t(i)] * S[std::size_t(i)];
    G(i, i) = S[std::size_t(i)].dot(F);
    for (Eigen::Index j = i; j > 0; --j) {
      F = X[std::size_t(j)].apply_transpose_force(F);
      G(i, j - 1) = F.dot(S[std::size_t(j - 1)]);
      G(j - 1, i) = G(i, j - 1);
    }
  }
}

Eigen::LLT<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& G) {
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) {
    throw SingularMetricError("mass matrix is not positive definite");
  }
  return llt;
}

}  // namespace detail

Eigen::MatrixXd mass_matrix(const RobotModel& model, const Configuration& q) {
  model.check_dimension(q);
  Eigen::MatrixXd G;
  detail::crba(model, q.values(), G);
  detail::factorize(G);
  return G;
}

Eigen::VectorXd inverse_dynamics(const RobotModel& model, const Eigen::VectorXd& q,
                                 const Eigen::VectorXd& qdot,
                                 const Eigen::VectorXd& qddot) {
  model.check_dimension(q);
  model.check_dimension(qdot);
  model.check_dimension(qddot);
  const Eigen::Index n = model.dof();
  const auto& joints = model.joints();
  const auto& links = model.links();

  std::vector<spatial::Transform> X(static_cast<std::size_t>(n));
  std::vector<spatial::Vector6d> S(static_cast<std::size_t>(n)), f(static_cast<std::size_t>(n));
  spatial::Vector6d v = spatial::Vector6d::Zero();
  spatial::Vector6d a = spatial::Vector6d::Zero();
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ui = std::size_t(i);
    X[ui] = spatial::parent_to_child(joints[ui], q[i]);
    S[ui] = spatial::motion_subspace(joints[ui]);
    const spatial::Vector6d vj = S[ui] * qdot[i];
    v = X[ui].apply_motion(v) + vj;
    a = X[ui].apply_motion(a) + S[ui] * qddot[i] + spatial::cross_motion(v, vj);
    const spatial::Matrix6d I = spatial::inertia(links[ui + 1]);
    f[ui] = I * a + spatial::cross_force(v, I * v);
  }
  Eigen::VectorXd tau(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const auto ui = std::size_t(i);
    tau[i] = S[ui].dot(f[ui]);
    if (i > 0) f[ui - 1] += X[ui].apply_transpose_force(f[ui]);
  }
  return tau;
}

}  // namespace geosyn
