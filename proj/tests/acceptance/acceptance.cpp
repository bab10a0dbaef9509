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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Every tolerance is pinned below.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "geosyn/commands.hpp"
#include "geosyn/geosyn.hpp"
#include "oracles.hpp"

namespace {

using namespace geosyn;
using geosyn::testing::Gen;
using std::numbers::pi;

constexpr std::uint64_t kSeed = 20261015;

constexpr double kMassMatrixTol = 1e-10;
constexpr double kChristoffelTol = 1e-5;
constexpr double kFlatChristoffelTol = 1e-9;
constexpr double kResidualTol = 1e-8;
constexpr double kEnergyDriftTol = 1e-6;
constexpr double kOracleTol = 1e-6;
constexpr double kRoundTripTol = 1e-6;
constexpr double kSolveSeconds = 1.0;
constexpr double kMinimalityTol = 1e-9;
constexpr double kStrictMargin = 1e-4;
constexpr double kIsometryTol = 1e-6;
constexpr double kFlatTransportTol = 1e-12;
constexpr double kOrthonormalTol = 1e-10;
constexpr double kReconstructTol = 1e-8;
constexpr double kParsevalTol = 1e-8;
constexpr double kReproduceTol = 1e-9;
constexpr double kValidateSeconds = 60.0;

constexpr double kDuration = 1.0;
constexpr double kStep = 1e-3;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double max_abs(const Eigen::MatrixXd& m) { return geosyn::testing::max_abs(m); }

const Configuration kReference{0.0, pi / 2};

Verdict ac1_mass_matrix() {
  const geosyn::testing::PlanarArm arm{};
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  Gen gen(kSeed + 1);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Configuration q = gen.config(2);
    worst = std::max(worst, max_abs(mass_matrix(model, q) -
                                    geosyn::testing::planar_mass_matrix(arm, q[1])));
  }
  Eigen::Matrix2d expected;
  expected << 3, 1, 1, 1;
  const double quarter = max_abs(mass_matrix(model, kReference) - expected);
  return {worst < kMassMatrixTol && quarter < kMassMatrixTol,
          "2-link vs symbolic Lagrangian at 100 random q: max |err| = " + sci(worst) +
              "; at q2=pi/2 vs [[3,1],[1,1]]: " + sci(quarter) + " (tol " + sci(kMassMatrixTol) + ")"};
}

Verdict ac2_christoffel() {
  const geosyn::testing::PlanarArm arm{};
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  Gen gen(kSeed + 2);
  double worst = 0.0, asym = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Configuration q = gen.config(2);
    const ChristoffelFirst c = christoffel_first(model, q);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          worst = std::max(worst, std::abs(c.gamma(i, j, k) -
                                           geosyn::testing::planar_christoffel(arm, q[1], i, j, k)));
          asym = std::max(asym, std::abs(c.gamma(i, j, k) - c.gamma(i, k, j)));
        }
  }
  const RobotModel arm7 = geosyn::testing::bundled_model("arm7.json");
  for (int trial = 0; trial < 5; ++trial) {
    const ChristoffelFirst c = christoffel_first(arm7, gen.config(7));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) asym = std::max(asym, std::abs(c.gamma(i, j, k) - c.gamma(i, k, j)));
  }
  const RobotModel flat = geosyn::testing::cartesian_model(1.5, 0.5);
  const RobotModel pendulum = geosyn::testing::bundled_model("pendulum.json");
  double flat_max = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    flat_max = std::max(flat_max, christoffel_first(flat, gen.config(2, -2, 2)).gamma.max_abs());
    flat_max = std::max(flat_max, christoffel_first(pendulum, gen.config(1)).gamma.max_abs());
  }
  return {worst < kChristoffelTol && asym == 0.0 && flat_max < kFlatChristoffelTol,
          "finite-difference vs symbolic (100 q): " + sci(worst) + " (tol " + sci(kChristoffelTol) +
              "); |G_ijk - G_ikj| = " + sci(asym) + " (exact); constant-metric max |G| = " +
              sci(flat_max) + " (tol " + sci(kFlatChristoffelTol) + ")"};
}

std::vector<GeodesicTrajectory> random_shots(const RobotModel& model, std::uint64_t seed,
                                             std::vector<TangentVector>* starts = nullptr) {
  Gen gen(seed);
  std::vector<GeodesicTrajectory> shots;
  for (int i = 0; i < 20; ++i) {
    const Configuration q = gen.config(2);
    const TangentVector v = gen.tangent(q);
    if (starts) starts->push_back(v);
    shots.push_back(shoot(model, v, kDuration, kStep));
  }
  return shots;
}

Verdict ac3_residual() {
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  double worst = 0.0;
  for (const GeodesicTrajectory& t : random_shots(model, kSeed + 3)) {
    worst = std::max(worst, max_ode_residual(model, t));
  }
  return {worst < kResidualTol, "max ||G qdd + c||_inf over 20 trajectories, every sample: " +
                                    sci(worst) + " (tol " + sci(kResidualTol) + ")"};
}

Verdict ac4_energy() {
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  double worst = 0.0;
  for (const GeodesicTrajectory& t : random_shots(model, kSeed + 3)) {
    worst = std::max(worst, max_relative_energy_drift(model, t));
  }
  return {worst < kEnergyDriftTol, "max relative kinetic-energy drift over the same 20 trajectories: " +
                                       sci(worst) + " (tol " + sci(kEnergyDriftTol) + ")"};
}

Verdict ac5_passive() {
  const geosyn::testing::PlanarArm arm{};
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  std::vector<TangentVector> starts;
  const std::vector<GeodesicTrajectory> shots = random_shots(model, kSeed + 5, &starts);
  double newton_euler = 0.0, lagrangian = 0.0;
  for (std::size_t i = 0; i < shots.size(); ++i) {
    const GeodesicTrajectory oracle = passive_dynamics_oracle(model, starts[i], kDuration, kStep);
    for (std::size_t k = 0; k < shots[i].samples.size(); ++k) {
      newton_euler = std::max(newton_euler, max_abs(shots[i].samples[k].q - oracle.samples[k].q));
    }
    const auto closed = geosyn::testing::planar_passive_rk4(
        arm, {starts[i].base.values(), starts[i].v}, kDuration, kStep);
    lagrangian = std::max(lagrangian, max_abs(shots[i].back().q - closed.q));
  }
  return {newton_euler < kOracleTol && lagrangian < kOracleTol,
          "shoot vs Newton-Euler passive oracle, 20 starts, all samples: " + sci(newton_euler) +
              " rad; vs closed-form Lagrangian integration at t=1: " + sci(lagrangian) +
              " rad (tol " + sci(kOracleTol) + ")"};
}

Verdict ac6_round_trip() {
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  Gen gen(kSeed + 6);
  double worst = 0.0, slowest = 0.0;
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    const Configuration q0(kReference.values() + gen.vector(2, -1, 1));
    const Configuration q1(kReference.values() + gen.vector(2, -1, 1));
    const auto start = std::chrono::steady_clock::now();
    try {
      const ConnectResult r = connect(model, q0, q1, kDuration);
      slowest = std::max(slowest, seconds_since(start));
      worst = std::max(worst, max_abs(shoot(model, r.velocity, kDuration, kStep).back().q - q1.values()));
    } catch (const Error&) {
      ++failures;
      slowest = std::max(slowest, seconds_since(start));
    }
  }
  return {failures == 0 && worst < kRoundTripTol && slowest < kSolveSeconds,
          "20 pairs within +-1 rad of (0, pi/2): " + std::to_string(failures) +
              " non-converged; max landing error " + sci(worst) + " rad (tol " + sci(kRoundTripTol) +
              "); slowest solve " + sci(slowest) + " s (limit " + sci(kSolveSeconds) + ")"};
}

Verdict ac7_minimality() {
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  Gen gen(kSeed + 7);
  double worst_gap = -INFINITY, best_margin = 0.0;
  int pairs = 0, draws = 0;
  while (pairs < 10 && draws < 100) {
    ++draws;
    const Configuration q0(kReference.values() + gen.vector(2, -1, 1));
    const Configuration q1(kReference.values() + gen.vector(2, -1, 1));
    ConnectResult r;
    try {
      r = connect(model, q0, q1, kDuration);
    } catch (const ConvergenceError&) {
      continue;
    }
    ++pairs;
    const double geo = riemannian_length(model, shoot(model, r.velocity, kDuration, kStep));
    const double line = riemannian_length(model, straight_line_path(model, q0, q1, kDuration, kStep));
    worst_gap = std::max(worst_gap, geo - line);
    best_margin = std::max(best_margin, line - geo);
  }
  return {pairs == 10 && worst_gap <= kMinimalityTol && best_margin > kStrictMargin,
          std::to_string(pairs) + " converged pairs: max (L_geodesic - L_straight) = " + sci(worst_gap) +
              " (tol " + sci(kMinimalityTol) + "); largest strict margin " + sci(best_margin) +
              " (need > " + sci(kStrictMargin) + ")"};
}

Verdict ac8_transport() {
  const RobotModel model = geosyn::testing::bundled_model("planar2.json");
  Gen gen(kSeed + 8);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Configuration q = gen.config(2);
    const GeodesicTrajectory curve = shoot(model, gen.tangent(q), kDuration, kStep);
    const std::vector<TangentVector> in{gen.tangent(q), gen.tangent(q)};
    const std::vector<TangentVector> out = transport_along(model, curve, in);
    const Configuration end(curve.back().q);
    const double before = inner_product(model, q, in[0], in[1]);
    const double after = inner_product(model, end, out[0], out[1]);
    // Relative to |u||v|, which bounds <u,v> and stays meaningful near orthogonality.
    const double scale = riemannian_norm(model, in[0]) * riemannian_norm(model, in[1]);
    worst = std::max(worst, std::abs(after - before) / scale);
  }
  const RobotModel flat = geosyn::testing::cartesian_model(2.0, 0.5);
  double flat_err = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Configuration q = gen.config(2, -2, 2);
    const GeodesicTrajectory curve = shoot(flat, gen.tangent(q), kDuration, kStep);
    const TangentVector v = gen.tangent(q, 3.0);
    flat_err = std::max(flat_err, max_abs(transport_along(flat, curve, v).vector.v - v.v));
  }
  return {worst < kIsometryTol && flat_err < kFlatTransportTol,
          "20 (curve, u, v) triples: max |<u,v>_end - <u,v>_start| / (|u||v|) = " + sci(worst) +
              " (tol " + sci(kIsometryTol) + "); constant-metric transport vs identity: " +
              sci(flat_err) + " (tol " + sci(kFlatTransportTol) + ")"};
}

Verdict ac9_completeness() {
  Gen gen(kSeed + 9);
  double ortho = 0.0, recon = 0.0, parseval = 0.0;
  for (const char* file : {"planar2.json", "arm7.json"}) {
    const RobotModel model = geosyn::testing::bundled_model(file);
    const Eigen::Index n = model.dof();
    for (int b = 0; b < 5; ++b) {
      const Configuration q = gen.config(n);
      const SynergyBasis basis = orthonormal_basis(model, q);
      Eigen::MatrixXd B(n, n);
      for (Eigen::Index j = 0; j < n; ++j) B.col(j) = basis.vectors[std::size_t(j)].v;
      ortho = std::max(ortho, max_abs(B.transpose() * mass_matrix(model, q) * B -
                                      Eigen::MatrixXd::Identity(n, n)));
      for (int i = 0; i < 50; ++i) {
        const TangentVector t = gen.tangent(q, 2.0);
        const Eigen::VectorXd w = decompose(model, basis, t);
        recon = std::max(recon, max_abs(reconstruct(basis, w).v - t.v));
        parseval = std::max(parseval, std::abs(inner_product(model, q, t, t) - w.squaredNorm()));
      }
    }
  }
  return {ortho < kOrthonormalTol && recon < kReconstructTol && parseval < kParsevalTol,
          "2-link and 7-DoF, 5 bases each: max |B^T G B - I| = " + sci(ortho) + " (tol " +
              sci(kOrthonormalTol) + "); 50 velocities per basis, reconstruction " + sci(recon) +
              " (tol " + sci(kReconstructTol) + "), Parseval " + sci(parseval) + " (tol " +
              sci(kParsevalTol) + ")"};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict ac10_closure() {
  const RobotModel model = geosyn::testing::bundled_model("arm7.json");
  const std::vector<GeodesicSynergy> synergies =
      load_synergies(read_file(geosyn::testing::model_path("arm7_synergies.json")));
  if (synergies.size() != 2 || synergies[0].base() == synergies[1].base()) {
    return {false, "bundled synergy file must hold two synergies with distinct bases"};
  }
  const Configuration mid(0.5 * (synergies[0].base().values() + synergies[1].base().values()));
  double residual = 0.0, drift = 0.0;
  int runs = 0;
  for (const Configuration* target : {&synergies[0].base(), &mid}) {
    for (const std::vector<double>& w : {std::vector<double>{0.5, 0.5}, {1.0, -0.7}, {0.3, 1.2}}) {
      const GeodesicTrajectory t =
          execute(model, combine_at(model, synergies, w, *target), kDuration, kStep);
      residual = std::max(residual, max_ode_residual(model, t));
      drift = std::max(drift, max_relative_energy_drift(model, t));
      ++runs;
    }
  }
  const std::vector<double> identity{1.0, 0.0};
  const GeodesicTrajectory combined =
      execute(model, combine_at(model, synergies, identity, synergies[0].base()), kDuration, kStep);
  const GeodesicTrajectory alone = execute(model, synergies[0], kDuration, kStep);
  double reproduce = 0.0;
  for (std::size_t k = 0; k < alone.samples.size(); ++k) {
    reproduce = std::max(reproduce, max_abs(combined.samples[k].q - alone.samples[k].q));
    reproduce = std::max(reproduce, max_abs(combined.samples[k].qdot - alone.samples[k].qdot));
  }
  return {residual < kResidualTol && drift < kEnergyDriftTol && reproduce < kReproduceTol &&
              combined.samples.size() == alone.samples.size(),
          "7-DoF combine_at, distinct bases, " + std::to_string(runs) + " weightings: residual " +
              sci(residual) + " (tol " + sci(kResidualTol) + "), drift " + sci(drift) + " (tol " +
              sci(kEnergyDriftTol) + "); weights (1,0) vs synergy 1 alone: " + sci(reproduce) +
              " (tol " + sci(kReproduceTol) + ")"};
}

Verdict ac11_validate() {
  bool all_green = true, identical = true;
  double first_pass = 0.0;
  std::string failing;
  std::vector<std::string> reports;
  for (int pass = 0; pass < 2; ++pass) {
    const auto start = std::chrono::steady_clock::now();
    int index = 0;
    for (const char* file : {"pendulum.json", "planar2.json", "planar2.urdf", "arm7.json"}) {
      std::ostringstream out, err;
      const int code = cli::run({"validate", geosyn::testing::model_path(file).string()}, out, err);
      if (code != cli::kExitOk) {
        all_green = false;
        failing += std::string(" ") + file;
      }
      if (pass == 0) {
        reports.push_back(out.str());
      } else if (reports[std::size_t(index)] != out.str()) {
        identical = false;
      }
      ++index;
    }
    if (pass == 0) first_pass = seconds_since(start);
  }
  return {all_green && identical && first_pass < kValidateSeconds,
          "validate on 4 bundled models: " + std::string(all_green ? "all checks pass" : "failures in" + failing) +
              "; one pass took " + sci(first_pass) + " s (limit " + sci(kValidateSeconds) + "); second run " +
              (identical ? "byte-identical" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1", ac1_mass_matrix}, {"AC2", ac2_christoffel}, {"AC3", ac3_residual},
      {"AC4", ac4_energy},      {"AC5", ac5_passive},     {"AC6", ac6_round_trip},
      {"AC7", ac7_minimality},  {"AC8", ac8_transport},   {"AC9", ac9_completeness},
      {"AC10", ac10_closure},   {"AC11", ac11_validate}};
  int passed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%-5s %s  %s\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
    passed += v.pass ? 1 : 0;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == int(criteria.size()) ? 0 : 1;
}
