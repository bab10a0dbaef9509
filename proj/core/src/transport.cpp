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
#include "geosyn/transport.hpp"

#include <algorithm>
#include <cmath>

#include "geosyn/errors.hpp"
#include "geosyn/metric.hpp"
#include "kernels.hpp"
#include "rk4.hpp"

namespace geosyn {

namespace {

// Integrates [q; qdot; v_1; ...; v_m] along the geodesic through the curve's
// first sample and reports the stacked transported vectors at each sample.
std::vector<Eigen::VectorXd> transport_stacked(const RobotModel& model,
                                               const GeodesicTrajectory& curve,
                                               const std::vector<Eigen::VectorXd>& vs) {
  if (curve.samples.empty()) {
    throw InvalidArgumentError("cannot transport along an empty curve");
  }
  const Eigen::Index n = model.dof();
  const auto m = Eigen::Index(vs.size());
  model.check_dimension(curve.front().q);

  std::vector<double> grid;
  grid.reserve(curve.samples.size());
  for (const TrajectorySample& s : curve.samples) grid.push_back(s.t);

  Eigen::VectorXd x(2 * n + m * n);
  x.head(n) = curve.front().q;
  x.segment(n, n) = curve.front().qdot;
  for (Eigen::Index i = 0; i < m; ++i) x.segment(2 * n + i * n, n) = vs[std::size_t(i)];

  std::vector<Eigen::VectorXd> out;
  out.reserve(grid.size());
  detail::integrate_rk4(
      x, grid,
      [&](const Eigen::VectorXd& s) {
        const Eigen::VectorXd q = s.head(n);
        const Eigen::VectorXd qdot = s.segment(n, n);
        const detail::LocalGeometry geo = detail::local_geometry(model, q);
        Eigen::VectorXd ds(s.size());
        ds.head(n) = qdot;
        ds.segment(n, n) = -geo.llt.solve(detail::contract(geo.gamma, qdot, qdot));
        for (Eigen::Index i = 0; i < m; ++i) {
          const Eigen::VectorXd vi = s.segment(2 * n + i * n, n);
          ds.segment(2 * n + i * n, n) =
              -geo.llt.solve(detail::contract(geo.gamma, qdot, vi));
        }
        return ds;
      },
      [&](std::size_t k, double t, const Eigen::VectorXd& s, const Eigen::VectorXd&) {
        const Eigen::VectorXd& ref = curve.samples[k].q;
        const double scale = 1.0 + ref.cwiseAbs().maxCoeff();
        if (!s.allFinite() || (s.head(n) - ref).cwiseAbs().maxCoeff() > 1e-9 * scale) {
          throw InvalidArgumentError("carrying curve is not the geodesic of its initial "
                                     "state (diverged at t=" + std::to_string(t) + ")");
        }
        out.push_back(s.tail(m * n));
      });
  return out;
}

}  // namespace

std::vector<TangentVector> transport_along(const RobotModel& model,
                                           const GeodesicTrajectory& curve,
                                           std::span<const TangentVector> vectors) {
  if (curve.samples.empty()) {
    throw InvalidArgumentError("cannot transport along an empty curve");
  }
  const Configuration start(curve.front().q);
  std::vector<Eigen::VectorXd> raw;
  raw.reserve(vectors.size());
  for (const TangentVector& v : vectors) {
    model.check_dimension(v.v);
    require_base(start, v);
    raw.push_back(v.v);
  }
  const std::vector<Eigen::VectorXd> stacked = transport_stacked(model, curve, raw);
  const Configuration end(curve.back().q);
  const Eigen::Index n = model.dof();
  std::vector<TangentVector> out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.emplace_back(end, stacked.back().segment(Eigen::Index(i) * n, n));
  }
  return out;
}

TransportResult transport_along(const RobotModel& model, const GeodesicTrajectory& curve,
                                const TangentVector& v) {
  std::vector<TangentVector> out =
      transport_along(model, curve, std::span<const TangentVector>(&v, 1));
  return {std::move(out.front()), std::make_shared<const GeodesicTrajectory>(curve)};
}

std::vector<Eigen::VectorXd> transport_field(const RobotModel& model,
                                             const GeodesicTrajectory& curve,
                                             const TangentVector& v) {
  if (curve.samples.empty()) {
    throw InvalidArgumentError("cannot transport along an empty curve");
  }
  model.check_dimension(v.v);
  require_base(Configuration(curve.front().q), v);
  return transport_stacked(model, curve, {v.v});
}

TransportResult transport_to(const RobotModel& model, const TangentVector& v,
                             const Configuration& target, double duration,
                             const ConnectOptions& options) {
  model.check_dimension(v.base);
  model.check_dimension(target);
  if (v.base == target) {
    GeodesicTrajectory still;
    still.duration = 0.0;
    still.samples.push_back({0.0, target.values(), Eigen::VectorXd::Zero(model.dof()),
                             Eigen::VectorXd::Zero(model.dof())});
    return {v, std::make_shared<const GeodesicTrajectory>(std::move(still))};
  }
  const ConnectResult link = connect(model, v.base, target, duration, options);
  auto path = std::make_shared<const GeodesicTrajectory>(
      shoot(model, link.velocity, duration, options.step));
  std::vector<TangentVector> moved =
      transport_along(model, *path, std::span<const TangentVector>(&v, 1));
  // The geodesic lands within the solver tolerance of target; rebase exactly.
  return {TangentVector(target, moved.front().v), std::move(path)};
}

namespace detail {

std::vector<Eigen::VectorXd> transport_along_path(const RobotModel& model,
                                                  const CurveFunction& curve,
                                                  const std::vector<double>& grid,
                                                  const Eigen::VectorXd& v) {
  const Eigen::Index n = model.dof();
  model.check_dimension(v);
  // Time rides along as the last state entry so stages see the right t.
  Eigen::VectorXd x(n + 1);
  x.head(n) = v;
  x[n] = grid.front();
  std::vector<Eigen::VectorXd> out;
  out.reserve(grid.size());
  integrate_rk4(
      x, grid,
      [&](const Eigen::VectorXd& s) {
        const auto [q, qdot] = curve(s[n]);
        const LocalGeometry geo = local_geometry(model, q);
        Eigen::VectorXd ds(n + 1);
        ds.head(n) = -geo.llt.solve(contract(geo.gamma, qdot, Eigen::VectorXd(s.head(n))));
        ds[n] = 1.0;
        return ds;
      },
      [&](std::size_t, double, const Eigen::VectorXd& s, const Eigen::VectorXd&) {
        out.push_back(s.head(n));
      });
  return out;
}

}  // namespace detail

}  // namespace geosyn
