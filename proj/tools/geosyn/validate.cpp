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
#include "geosyn/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "geosyn/dynamics.hpp"
#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/synergy.hpp"
#include "geosyn/transport.hpp"

namespace geosyn::cli {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kEnergyTol = 1e-6;
constexpr double kOracleTol = 1e-6;
constexpr double kReversalTol = 1e-5;
constexpr double kScalingTol = 1e-6;
constexpr double kMinimalityTol = 1e-9;
constexpr double kIsometryTol = 1e-6;
constexpr double kLinearityTol = 1e-8;
constexpr double kTransportRoundTripTol = 1e-5;
constexpr double kSelfParallelTol = 1e-6;
constexpr double kBasisTol = 1e-10;
constexpr double kReconstructTol = 1e-8;
constexpr double kFlatTol = 1e-12;

class Sampler {
 public:
  Sampler(std::uint64_t seed, Eigen::Index dof) : engine_(seed), dof_(dof) {}

  Eigen::VectorXd uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Eigen::VectorXd v(dof_);
    for (Eigen::Index i = 0; i < dof_; ++i) v[i] = dist(engine_);
    return v;
  }
  Configuration configuration() { return Configuration(uniform(-M_PI, M_PI)); }
  Eigen::VectorXd velocity() { return uniform(-1.0, 1.0); }
  double scalar(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  Eigen::Index dof_;
};

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

double max_sample_gap(const GeodesicTrajectory& a, const GeodesicTrajectory& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(a.samples.size(), b.samples.size()); ++k) {
    worst = std::max(worst, max_abs(a.samples[k].q - b.samples[k].q));
  }
  return worst;
}

// Homogeneous 4x4 chain with Rodrigues joint rotations; independent of the
// library's RigidTransform composition.
Eigen::Vector3d chain_tip_oracle(const RobotModel& model, const Eigen::VectorXd& q) {
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  for (Eigen::Index i = 0; i < model.dof(); ++i) {
    const Joint& joint = model.joints()[std::size_t(i)];
    Eigen::Matrix4d origin = Eigen::Matrix4d::Identity();
    origin.topLeftCorner<3, 3>() = joint.origin.rotation;
    origin.topRightCorner<3, 1>() = joint.origin.translation;
    Eigen::Matrix4d motion = Eigen::Matrix4d::Identity();
    if (joint.kind == JointKind::kRevolute) {
      Eigen::Matrix3d K;
      K << 0, -joint.axis.z(), joint.axis.y(), joint.axis.z(), 0, -joint.axis.x(),
          -joint.axis.y(), joint.axis.x(), 0;
      motion.topLeftCorner<3, 3>() = Eigen::Matrix3d::Identity() + std::sin(q[i]) * K +
                                     (1.0 - std::cos(q[i])) * K * K;
    } else {
      motion.topRightCorner<3, 1>() = q[i] * joint.axis;
    }
    T = T * origin * motion;
  }
  return T.topRightCorner<3, 1>();
}

class Suite {
 public:
  Suite(const RobotModel& model, const ValidationSettings& settings, RunReport& report)
      : model_(model), s_(settings), report_(report), rng_(settings.seed, model.dof()) {}

  // Runs `body`; any exception becomes a failed diagnostic named `name`.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.fail(name, e.what());
    }
  }

  void run() {
    const Eigen::Index n = model_.dof();
    std::vector<Configuration> qs;
    for (int t = 0; t < s_.trials; ++t) qs.push_back(rng_.configuration());

    // robot_model
    guarded("mass_matrix_symmetric_spd", [&] {
      double asym = 0.0, min_eig = INFINITY;
      for (const auto& q : qs) {
        const Eigen::MatrixXd G = mass_matrix(model_, q);
        asym = std::max(asym, max_abs(G - G.transpose()));
        min_eig = std::min(min_eig, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G)
                                        .eigenvalues()
                                        .minCoeff());
      }
      report_.check("mass_matrix_symmetric_spd", asym == 0.0 && min_eig > 0.0, asym, 0.0,
                    "min eigenvalue " + std::to_string(min_eig));
    });
    guarded("mass_matrix_vs_newton_euler", [&] {
      double worst = 0.0;
      for (const auto& q : qs) {
        const Eigen::MatrixXd G = mass_matrix(model_, q);
        Eigen::MatrixXd H(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
          H.col(j) = inverse_dynamics(model_, q.values(), Eigen::VectorXd::Zero(n),
                                      Eigen::VectorXd::Unit(n, j));
        }
        worst = std::max(worst, max_abs(G - H) / (1.0 + max_abs(G)));
      }
      report_.check_at_most("mass_matrix_vs_newton_euler", worst, 1e-10);
    });
    guarded("forward_kinematics_product", [&] {
      double worst = 0.0;
      for (const auto& q : qs) {
        const auto poses = forward_kinematics(model_, q);
        worst = std::max(worst, (poses.back().translation - chain_tip_oracle(model_, q.values()))
                                    .cwiseAbs()
                                    .maxCoeff());
      }
      report_.check_at_most("forward_kinematics_product", worst, 1e-12);
    });
    guarded("payload_zero_identity", [&] {
      const RobotModel same = attach_payload(model_, int(n), 0.0, Eigen::Vector3d(0.1, 0.2, 0.3));
      double worst = 0.0;
      for (const auto& q : qs) worst = std::max(worst, max_abs(mass_matrix(same, q) - mass_matrix(model_, q)));
      report_.check("payload_zero_identity", worst == 0.0, worst, 0.0);
    });
    guarded("payload_keeps_spd", [&] {
      const RobotModel loaded = attach_payload(model_, int(n), 1.0, Eigen::Vector3d(0.1, 0.0, 0.0));
      double asym = 0.0;
      for (const auto& q : qs) {
        const Eigen::MatrixXd G = mass_matrix(loaded, q);
        asym = std::max(asym, max_abs(G - G.transpose()));
      }
      report_.check("payload_keeps_spd", asym == 0.0, asym, 0.0);
    });

    // metric
    bool flat = true;
    guarded("metric_derivative_symmetry", [&] {
      double dg_asym = 0.0, gamma_asym = 0.0, compat = 0.0, stencil = 0.0;
      for (const auto& q : qs) {
        const MetricDerivatives d = metric_derivatives(model_, q);
        const ChristoffelFirst c = christoffel_first(d);
        flat = flat && d.dg.max_abs() < kFlatTol;
        const double scale = 1.0 + d.dg.max_abs();
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
              dg_asym = std::max(dg_asym, std::abs(d.dg(i, j, k) - d.dg(j, i, k)));
              gamma_asym = std::max(gamma_asym, std::abs(c.gamma(i, j, k) - c.gamma(i, k, j)));
              compat = std::max(compat, std::abs(d.dg(j, k, i) - (c.gamma(j, k, i) + c.gamma(k, j, i))) /
                                            scale);
            }
        // Five-point stencil bounds the central-difference truncation error.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double h = 1e-3 * std::max(1.0, std::abs(q[k]));
          auto at = [&](double offset) {
            Eigen::VectorXd p = q.values();
            p[k] += offset;
            return mass_matrix(model_, Configuration(p));
          };
          const Eigen::MatrixXd ref =
              (at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h);
          for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
              stencil = std::max(stencil, std::abs(ref(i, j) - d.dg(i, j, k)));
        }
      }
      report_.check("metric_derivative_symmetry", dg_asym == 0.0, dg_asym, 0.0);
      report_.check("christoffel_symmetry", gamma_asym == 0.0, gamma_asym, 0.0);
      report_.check_at_most("metric_compatibility", compat, 1e-12);
      report_.check_at_most("metric_derivative_stencil_agreement", stencil, 1e-5);
    });
    guarded("christoffel_zero_if_flat", [&] {
      if (!flat) {
        report_.check("christoffel_zero_if_flat", true, NAN, NAN, "n/a: metric varies");
        return;
      }
      double worst = 0.0;
      for (const auto& q : qs) worst = std::max(worst, christoffel_first(model_, q).gamma.max_abs());
      report_.check_at_most("christoffel_zero_if_flat", worst, kFlatTol);
    });
    guarded("inner_product_properties", [&] {
      double ke_gap = 0.0, sym = 0.0, min_norm = INFINITY, homog = 0.0, zero = 0.0;
      for (const auto& q : qs) {
        const TangentVector u(q, rng_.velocity()), v(q, rng_.velocity());
        ke_gap = std::max(ke_gap, std::abs(kinetic_energy(model_, q, u) -
                                           0.5 * inner_product(model_, q, u, u)));
        sym = std::max(sym, std::abs(inner_product(model_, q, u, v) - inner_product(model_, q, v, u)));
        min_norm = std::min(min_norm, inner_product(model_, q, u, u));
        const Eigen::VectorXd c1 = coriolis_vector(model_, q, u);
        const Eigen::VectorXd c2 = coriolis_vector(model_, q, TangentVector(q, 2.0 * u.v));
        homog = std::max(homog, max_abs(c2 - 4.0 * c1) / (1.0 + max_abs(c1)));
        zero = std::max(zero, max_abs(coriolis_vector(model_, q, TangentVector(q, Eigen::VectorXd::Zero(n)))));
      }
      report_.check("kinetic_energy_half_inner_product", ke_gap == 0.0, ke_gap, 0.0);
      report_.check_at_most("inner_product_symmetry", sym, 1e-12);
      report_.check("inner_product_positive", min_norm > 0.0, min_norm, 0.0, "min <u,u>");
      report_.check_at_most("coriolis_quadratic", homog, 1e-9);
      report_.check("coriolis_zero_velocity", zero == 0.0, zero, 0.0);
    });

    // geodesic
    std::vector<GeodesicTrajectory> shots;
    guarded("geodesic_acceleration_vs_passive", [&] {
      double worst = 0.0;
      for (const auto& q : qs) {
        const TangentVector v(q, rng_.velocity());
        const Eigen::VectorXd a = geodesic_acceleration(model_, q, v);
        const Eigen::VectorXd b = passive_acceleration(model_, q.values(), v.v);
        worst = std::max(worst, max_abs(a - b) / (1.0 + max_abs(b)));
      }
      report_.check_at_most("geodesic_acceleration_vs_passive", worst, kOracleTol);
    });
    guarded("ode_residual", [&] {
      double residual = 0.0, drift = 0.0, oracle = 0.0, straight = 0.0;
      for (const auto& q : qs) {
        const TangentVector start(q, rng_.velocity());
        GeodesicTrajectory traj = shoot(model_, start, s_.duration, s_.step);
        residual = std::max(residual, max_ode_residual(model_, traj));
        drift = std::max(drift, max_relative_energy_drift(model_, traj));
        oracle = std::max(oracle, max_sample_gap(
                                      traj, passive_dynamics_oracle(model_, start, s_.duration, s_.step)));
        for (const auto& sample : traj.samples) {
          straight = std::max(straight, max_abs(sample.q - (q.values() + sample.t * start.v)));
        }
        shots.push_back(std::move(traj));
      }
      report_.check_at_most("ode_residual", residual, kResidualTol);
      report_.check_at_most("energy_drift", drift, kEnergyTol);
      report_.check_at_most("passive_dynamics_equivalence", oracle, kOracleTol);
      if (flat) {
        report_.check_at_most("straight_line_if_flat", straight, 1e-9);
      } else {
        report_.check("straight_line_if_flat", true, NAN, NAN, "n/a: metric varies");
      }
    });
    auto require_shots = [&] {
      if (shots.empty()) throw Error("no reference geodesics (shooting failed)");
    };
    guarded("time_reversal", [&] {
      require_shots();
      double worst = 0.0;
      for (const auto& traj : shots) {
        const TangentVector back(Configuration(traj.back().q), -traj.back().qdot);
        const GeodesicTrajectory rev = shoot(model_, back, s_.duration, s_.step);
        worst = std::max(worst, max_abs(rev.back().q - traj.front().q));
      }
      report_.check_at_most("time_reversal", worst, kReversalTol);
    });
    guarded("affine_reparameterization", [&] {
      require_shots();
      double worst = 0.0;
      for (const auto& traj : shots) {
        const TangentVector fast(Configuration(traj.front().q), 2.0 * traj.front().qdot);
        const double half = 0.5 * s_.duration;
        const GeodesicTrajectory other = shoot(model_, fast, half, std::min(s_.step, half));
        worst = std::max(worst, max_abs(other.back().q - traj.back().q));
      }
      report_.check_at_most("affine_reparameterization", worst, kScalingTol);
    });
    ConnectOptions copts;
    copts.tolerance = s_.tol_bvp;
    copts.step = s_.step;
    guarded("connect_round_trip", [&] {
      const Configuration q0(rng_.uniform(-1.0, 1.0));
      const Configuration q1(q0.values() + rng_.uniform(-0.5, 0.5));
      const ConnectResult result = connect(model_, q0, q1, s_.duration, copts);
      const GeodesicTrajectory geo = shoot(model_, result.velocity, s_.duration, s_.step);
      report_.check_at_most("connect_round_trip", max_abs(geo.back().q - q1.values()), s_.tol_bvp,
                            std::to_string(result.iterations) + " iterations");
      const double gap = riemannian_length(model_, geo) -
                         riemannian_length(model_, straight_line_path(model_, q0, q1, s_.duration, s_.step));
      report_.check_at_most("geodesic_not_longer_than_straight", gap, kMinimalityTol);
    });

    // transport
    guarded("transport_isometry", [&] {
      require_shots();
      const GeodesicTrajectory& curve = shots.front();
      const Configuration a(curve.front().q), b(curve.back().q);
      const TangentVector u(a, rng_.velocity()), v(a, rng_.velocity());
      const double alpha = rng_.scalar(-2.0, 2.0), beta = rng_.scalar(-2.0, 2.0);
      const TangentVector mix(a, alpha * u.v + beta * v.v);
      const std::vector<TangentVector> in{u, v, mix};
      const std::vector<TangentVector> out = transport_along(model_, curve, in);
      const TangentVector ub(b, out[0].v), vb(b, out[1].v);
      double iso = 0.0;
      for (auto [x0, y0, x1, y1] : {std::tuple{&u, &v, &ub, &vb}, std::tuple{&u, &u, &ub, &ub},
                                    std::tuple{&v, &v, &vb, &vb}}) {
        const double before = inner_product(model_, a, *x0, *y0);
        const double after = inner_product(model_, b, *x1, *y1);
        const double scale = std::sqrt(inner_product(model_, a, *x0, *x0) *
                                       inner_product(model_, a, *y0, *y0));
        iso = std::max(iso, std::abs(after - before) / scale);
      }
      report_.check_at_most("transport_isometry", iso, kIsometryTol);
      report_.check_at_most("transport_linearity",
                            max_abs(out[2].v - (alpha * out[0].v + beta * out[1].v)), kLinearityTol);

      const TangentVector back_start(b, -curve.back().qdot);
      const GeodesicTrajectory reverse = shoot(model_, back_start, s_.duration, s_.step);
      const TangentVector returned =
          transport_along(model_, reverse, TangentVector(Configuration(reverse.front().q), out[0].v))
              .vector;
      report_.check_at_most("transport_round_trip", max_abs(returned.v - u.v),
                            kTransportRoundTripTol);

      const auto field = transport_field(model_, curve, curve.initial_state());
      double self = 0.0;
      for (std::size_t k = 0; k < field.size(); ++k) {
        self = std::max(self, max_abs(field[k] - curve.samples[k].qdot));
      }
      report_.check_at_most("transport_self_parallel", self, kSelfParallelTol);
      if (flat) {
        report_.check_at_most("transport_identity_if_flat", max_abs(out[0].v - u.v), kFlatTol);
      } else {
        report_.check("transport_identity_if_flat", true, NAN, NAN, "n/a: metric varies");
      }
    });

    // synergy
    guarded("orthonormal_basis", [&] {
      double ortho = 0.0, recon = 0.0, parseval = 0.0;
      for (const auto& q : qs) {
        const SynergyBasis basis = orthonormal_basis(model_, q);
        const Eigen::MatrixXd G = mass_matrix(model_, q);
        Eigen::MatrixXd B(n, n);
        for (Eigen::Index j = 0; j < n; ++j) B.col(j) = basis.vectors[std::size_t(j)].v;
        ortho = std::max(ortho, max_abs(B.transpose() * G * B - Eigen::MatrixXd::Identity(n, n)));
        const TangentVector target(q, rng_.velocity());
        const Eigen::VectorXd w = decompose(model_, basis, target);
        recon = std::max(recon, max_abs(reconstruct(basis, w).v - target.v));
        const double norm2 = inner_product(model_, q, target, target);
        parseval = std::max(parseval, std::abs(norm2 - w.squaredNorm()) / std::max(1.0, norm2));
      }
      report_.check_at_most("orthonormal_basis", ortho, kBasisTol);
      report_.check_at_most("decompose_reconstruct", recon, kReconstructTol);
      report_.check_at_most("parseval", parseval, kReconstructTol);
    });
    guarded("combine_same_base_closure", [&] {
      const Configuration& q = qs.front();
      const std::vector<GeodesicSynergy> set{GeodesicSynergy("a", TangentVector(q, rng_.velocity())),
                                             GeodesicSynergy("b", TangentVector(q, rng_.velocity()))};
      const std::vector<double> w{rng_.scalar(-1.0, 1.0), rng_.scalar(-1.0, 1.0)};
      const GeodesicSynergy combined = combine_same_base(set, w);
      const GeodesicTrajectory traj = execute(model_, combined, s_.duration, s_.step);
      report_.check_at_most("combine_same_base_residual", max_ode_residual(model_, traj), kResidualTol);
      report_.check_at_most("combine_same_base_energy_drift", max_relative_energy_drift(model_, traj),
                            kEnergyTol);
      const std::vector<double> w2{3.0 * w[0], 3.0 * w[1]};
      report_.check_at_most("combine_linearity",
                            max_abs(combine_same_base(set, w2).velocity.v - 3.0 * combined.velocity.v),
                            1e-12);
      const GeodesicSynergy via_at = combine_at(model_, set, w, q);
      report_.check("combine_at_equal_bases_bitwise", via_at.velocity.v == combined.velocity.v,
                    max_abs(via_at.velocity.v - combined.velocity.v), 0.0);
    });
    guarded("combine_at_closure", [&] {
      const Configuration qa(rng_.uniform(-1.0, 1.0));
      const Configuration qb(qa.values() + rng_.uniform(-0.3, 0.3));
      const std::vector<GeodesicSynergy> set{GeodesicSynergy("a", TangentVector(qa, rng_.velocity())),
                                             GeodesicSynergy("b", TangentVector(qb, rng_.velocity()))};
      const std::vector<double> w{0.5, 0.5};
      const GeodesicSynergy combined = combine_at(model_, set, w, qa, s_.duration, copts);
      const GeodesicTrajectory traj = execute(model_, combined, s_.duration, s_.step);
      report_.check_at_most("combine_at_residual", max_ode_residual(model_, traj), kResidualTol);
      report_.check_at_most("combine_at_energy_drift", max_relative_energy_drift(model_, traj),
                            kEnergyTol);
    });
  }

 private:
  const RobotModel& model_;
  ValidationSettings s_;
  RunReport& report_;
  Sampler rng_;
};

}  // namespace

void run_validation(const RobotModel& model, const ValidationSettings& settings,
                    RunReport& report) {
  Suite(model, settings, report).run();
}

}  // namespace geosyn::cli
