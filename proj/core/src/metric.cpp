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
#include "geosyn/metric.hpp"

#include <algorithm>
#include <cmath>

#include "geosyn/errors.hpp"
#include "kernels.hpp"

namespace geosyn {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

namespace detail {

void metric_derivatives_fd(const RobotModel& model, const Eigen::VectorXd& q,
                           Tensor3& dg) {
  const Eigen::Index n = model.dof();
  dg = Tensor3(n);
  Eigen::VectorXd qp = q, qm = q;
  Eigen::MatrixXd Gp, Gm;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(q[k]));
    qp[k] = q[k] + h;
    qm[k] = q[k] - h;
    crba(model, qp, Gp);
    crba(model, qm, Gm);
    // Divide by the representable step actually taken.
    const double span = qp[k] - qm[k];
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        dg(i, j, k) = (Gp(i, j) - Gm(i, j)) / span;
      }
    }
    qp[k] = q[k];
    qm[k] = q[k];
  }
}

void christoffel_from_derivatives(const Tensor3& dg, Tensor3& gamma) {
  const Eigen::Index n = dg.dimension();
  gamma = Tensor3(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        gamma(i, j, k) = 0.5 * (dg(i, j, k) + dg(i, k, j) - dg(j, k, i));
      }
    }
  }
}

Eigen::VectorXd contract(const Tensor3& gamma, const Eigen::VectorXd& a,
                         const Eigen::VectorXd& b) {
  const Eigen::Index n = gamma.dimension();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      double inner = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) inner += gamma(i, j, k) * b[k];
      sum += a[j] * inner;
    }
    out[i] = sum;
  }
  return out;
}

LocalGeometry local_geometry(const RobotModel& model, const Eigen::VectorXd& q) {
  LocalGeometry geo;
  crba(model, q, geo.G);
  geo.llt = factorize(geo.G);
  Tensor3 dg;
  metric_derivatives_fd(model, q, dg);
  christoffel_from_derivatives(dg, geo.gamma);
  return geo;
}

}  // namespace detail

void require_base(const Configuration& q, const TangentVector& v) {
  if (!(v.base == q)) {
    throw BaseMismatchError("tangent vector is not based at the given configuration");
  }
}

MetricTensor metric_at(const RobotModel& model, const Configuration& q) {
  return {q, mass_matrix(model, q)};
}

MetricDerivatives metric_derivatives(const RobotModel& model, const Configuration& q) {
  model.check_dimension(q);
  MetricDerivatives out{q, Tensor3()};
  detail::metric_derivatives_fd(model, q.values(), out.dg);
  return out;
}

ChristoffelFirst christoffel_first(const MetricDerivatives& derivatives) {
  ChristoffelFirst out{derivatives.base, Tensor3()};
  detail::christoffel_from_derivatives(derivatives.dg, out.gamma);
  return out;
}

ChristoffelFirst christoffel_first(const RobotModel& model, const Configuration& q) {
  return christoffel_first(metric_derivatives(model, q));
}

Eigen::VectorXd coriolis_vector(const RobotModel& model, const Configuration& q,
                                const TangentVector& qdot) {
  model.check_dimension(q);
  require_base(q, qdot);
  const ChristoffelFirst christoffel = christoffel_first(model, q);
  return detail::contract(christoffel.gamma, qdot.v, qdot.v);
}

double kinetic_energy(const RobotModel& model, const Configuration& q,
                      const TangentVector& qdot) {
  return 0.5 * inner_product(model, q, qdot, qdot);
}

double inner_product(const RobotModel& model, const Configuration& q,
                     const TangentVector& u, const TangentVector& v) {
  model.check_dimension(q);
  require_base(q, u);
  require_base(q, v);
  const Eigen::MatrixXd G = mass_matrix(model, q);
  return u.v.dot(G * v.v);
}

double riemannian_norm(const RobotModel& model, const TangentVector& v) {
  return std::sqrt(inner_product(model, v.base, v, v));
}

}  // namespace geosyn
