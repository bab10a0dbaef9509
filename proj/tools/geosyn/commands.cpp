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
#include "geosyn/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Cholesky>

#include "geosyn/geodesic.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/robot_model.hpp"
#include "geosyn/svg.hpp"
#include "geosyn/synergy.hpp"
#include "geosyn/trajectory_io.hpp"
#include "geosyn/validate.hpp"

namespace geosyn::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kEnergyDriftTolerance = 1e-6;
constexpr double kResidualTolerance = 1e-8;

std::string join(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

void require_out(const GlobalOptions& options, const char* what) {
  if (options.out.empty()) throw UsageError(std::string("--out is required (") + what + ")");
}

void check_timing(const GlobalOptions& options) {
  if (!(options.duration > 0.0)) throw UsageError("--duration must be positive");
  if (!(options.step > 0.0) || options.step > options.duration) {
    throw UsageError("--step must satisfy 0 < step <= duration");
  }
  if (!(options.tol_bvp > 0.0)) throw UsageError("--tol-bvp must be positive");
}

void echo_common(RunReport& report, const std::string& model_path,
                 const GlobalOptions& options) {
  report.input("model", model_path);
  report.input("seed", std::to_string(options.seed));
}

void trajectory_checks(RunReport& report, const RobotModel& model,
                       const GeodesicTrajectory& traj) {
  report.check_at_most("energy_drift", max_relative_energy_drift(model, traj),
                       kEnergyDriftTolerance);
  report.check_at_most("ode_residual", max_ode_residual(model, traj), kResidualTolerance);
  const auto violations = check_limits(model, traj);
  report.diagnostics.push_back({"joint_limits", true, double(violations.size()), NAN,
                                violations.empty() ? "within limits"
                                                   : "samples outside limits (not enforced)"});
}

ConnectOptions connect_options(const GlobalOptions& options) {
  ConnectOptions c;
  c.tolerance = options.tol_bvp;
  c.step = options.step;
  return c;
}

}  // namespace

Eigen::VectorXd parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError(what + ": empty entry in '" + text + "'");
    item = item.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not a number");
    }
  }
  if (values.empty()) throw UsageError(what + ": expected a comma-separated list");
  return Eigen::Map<Eigen::VectorXd>(values.data(), Eigen::Index(values.size()));
}

RunReport cmd_mass_matrix(const std::string& model_path, const Eigen::VectorXd& q,
                          const GlobalOptions& options, std::ostream& out) {
  RunReport report;
  report.command = "mass-matrix";
  echo_common(report, model_path, options);
  report.input("q", join(q));
  const RobotModel model = load_model_file(model_path);
  model.check_dimension(q);
  const Eigen::MatrixXd G = mass_matrix(model, Configuration(q));
  const Eigen::Index n = G.rows();
  out << "G =\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    out << (i == 0 ? "[[" : " [");
    for (Eigen::Index j = 0; j < n; ++j) out << (j ? ", " : "") << format_double(G(i, j));
    out << (i + 1 == n ? "]]\n" : "],\n");
  }
  out << "det(G) = " << format_double(G.determinant()) << "\n";
  return report;
}

RunReport cmd_shoot(const std::string& model_path, const Eigen::VectorXd& q0,
                    const Eigen::VectorXd& v0, const GlobalOptions& options,
                    std::ostream& out) {
  RunReport report;
  report.command = "shoot";
  echo_common(report, model_path, options);
  report.input("q0", join(q0));
  report.input("v0", join(v0));
  report.input("duration", format_double(options.duration));
  report.input("step", format_double(options.step));
  check_timing(options);
  require_out(options, "trajectory CSV path");
  const RobotModel model = load_model_file(model_path);
  model.check_dimension(q0);
  model.check_dimension(v0);
  const GeodesicTrajectory traj =
      shoot(model, TangentVector(Configuration(q0), v0), options.duration, options.step);
  save_trajectory_csv(options.out, model, traj);
  report.outputs.push_back(options.out);
  trajectory_checks(report, model, traj);
  out << "samples: " << traj.samples.size() << "\n";
  out << "final q: " << join(traj.back().q) << "\n";
  out << "energy: " << format_double(traj.energy) << "\n";
  return report;
}

RunReport cmd_connect(const std::string& model_path, const Eigen::VectorXd& q0,
                      const Eigen::VectorXd& q1, const GlobalOptions& options,
                      std::ostream& out) {
  RunReport report;
  report.command = "connect";
  echo_common(report, model_path, options);
  report.input("q0", join(q0));
  report.input("q1", join(q1));
  report.input("duration", format_double(options.duration));
  report.input("step", format_double(options.step));
  report.input("tol_bvp", format_double(options.tol_bvp));
  check_timing(options);
  require_out(options, "trajectory CSV path");
  const RobotModel model = load_model_file(model_path);
  model.check_dimension(q0);
  model.check_dimension(q1);
  const ConnectResult result = connect(model, Configuration(q0), Configuration(q1),
                                       options.duration, connect_options(options));
  const GeodesicTrajectory traj = shoot(model, result.velocity, options.duration, options.step);
  save_trajectory_csv(options.out, model, traj);
  report.outputs.push_back(options.out);
  report.check_at_most("terminal_residual", (traj.back().q - q1).cwiseAbs().maxCoeff(),
                       options.tol_bvp, std::to_string(result.iterations) + " Newton iterations");
  trajectory_checks(report, model, traj);
  out << "v0: " << join(result.velocity.v) << "\n";
  out << "residual: " << format_double(result.residual) << "\n";
  return report;
}

RunReport cmd_compare(const std::string& model_path, const Eigen::VectorXd& q0,
                      const Eigen::VectorXd& q1, int grid, const GlobalOptions& options,
                      std::ostream& out) {
  RunReport report;
  report.command = "compare";
  echo_common(report, model_path, options);
  report.input("q0", join(q0));
  report.input("q1", join(q1));
  report.input("duration", format_double(options.duration));
  report.input("step", format_double(options.step));
  report.input("grid", std::to_string(grid));
  check_timing(options);
  require_out(options, "output directory");
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const RobotModel model = load_model_file(model_path);
  model.check_dimension(q0);
  model.check_dimension(q1);

  const Configuration start(q0), goal(q1);
  const ConnectResult result =
      connect(model, start, goal, options.duration, connect_options(options));
  const GeodesicTrajectory geodesic =
      shoot(model, result.velocity, options.duration, options.step);
  const GeodesicTrajectory straight =
      straight_line_path(model, start, goal, options.duration, options.step);
  const double geodesic_length = riemannian_length(model, geodesic);
  const double straight_length = riemannian_length(model, straight);

  const fs::path dir(options.out);
  fs::create_directories(dir);
  save_trajectory_csv(dir / "geodesic.csv", model, geodesic);
  save_trajectory_csv(dir / "euclidean.csv", model, straight);
  report.outputs.push_back((dir / "geodesic.csv").string());
  report.outputs.push_back((dir / "euclidean.csv").string());
  if (model.dof() == 2) {
    write_file(dir / "compare.svg", render_comparison_svg(model, geodesic, straight, grid));
    report.outputs.push_back((dir / "compare.svg").string());
  }
  report.outputs.push_back((dir / "report.txt").string());

  report.check_at_most("terminal_residual", (geodesic.back().q - q1).cwiseAbs().maxCoeff(),
                       options.tol_bvp);
  report.check_at_most("geodesic_minus_euclidean_length", geodesic_length - straight_length,
                       1e-9, "geodesic must not be longer");
  out << "geodesic length: " << format_double(geodesic_length) << "\n";
  out << "euclidean length: " << format_double(straight_length) << "\n";
  out << "difference: " << format_double(straight_length - geodesic_length) << "\n";
  write_file(dir / "report.txt", report.render());
  return report;
}

RunReport cmd_combine(const std::string& model_path, const std::string& synergy_path,
                      const Eigen::VectorXd& weights,
                      const std::optional<Eigen::VectorXd>& target_base,
                      const GlobalOptions& options, std::ostream& out) {
  RunReport report;
  report.command = "combine";
  echo_common(report, model_path, options);
  report.input("synergies", synergy_path);
  report.input("weights", join(weights));
  if (target_base) report.input("target_base", join(*target_base));
  report.input("duration", format_double(options.duration));
  report.input("step", format_double(options.step));
  check_timing(options);
  require_out(options, "trajectory CSV path");
  const RobotModel model = load_model_file(model_path);
  const std::vector<GeodesicSynergy> synergies = load_synergies(read_file(synergy_path));
  if (Eigen::Index(synergies.size()) != weights.size()) {
    throw UsageError("got " + std::to_string(weights.size()) + " weights for " +
                     std::to_string(synergies.size()) + " synergies");
  }
  for (const GeodesicSynergy& s : synergies) model.check_dimension(s.velocity.v);
  bool shared = true;
  for (const GeodesicSynergy& s : synergies) shared = shared && s.base() == synergies.front().base();

  const std::vector<double> w(weights.data(), weights.data() + weights.size());
  GeodesicSynergy combined;
  if (target_base) {
    model.check_dimension(*target_base);
    combined = combine_at(model, synergies, w, Configuration(*target_base), 1.0,
                          connect_options(options));
  } else if (shared) {
    combined = combine_same_base(synergies, w);
  } else {
    throw UsageError("target base required: synergies have different bases");
  }
  const GeodesicTrajectory traj = execute(model, combined, options.duration, options.step);
  save_trajectory_csv(options.out, model, traj);
  report.outputs.push_back(options.out);
  trajectory_checks(report, model, traj);
  out << "base: " << join(combined.base().values()) << "\n";
  out << "velocity: " << join(combined.velocity.v) << "\n";
  return report;
}

RunReport cmd_validate(const std::string& model_path, const GlobalOptions& options,
                       std::ostream&) {
  RunReport report;
  report.command = "validate";
  echo_common(report, model_path, options);
  report.input("duration", format_double(options.duration));
  report.input("step", format_double(options.step));
  report.input("tol_bvp", format_double(options.tol_bvp));
  check_timing(options);
  const RobotModel model = load_model_file(model_path);
  ValidationSettings settings;
  settings.seed = options.seed;
  settings.duration = options.duration;
  settings.step = options.step;
  settings.tol_bvp = options.tol_bvp;
  run_validation(model, settings, report);
  if (!options.out.empty()) {
    report.outputs.push_back(options.out);
    write_file(options.out, report.render());
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"geosyn: minimum-energy joint trajectories as geodesics of the "
               "kinetic-energy metric"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  GlobalOptions options;
  app.add_option("--step", options.step, "RK4 step in seconds")->capture_default_str();
  app.add_option("--duration", options.duration, "Trajectory duration in seconds")
      ->capture_default_str();
  app.add_option("--tol-bvp", options.tol_bvp, "Per-joint boundary-value tolerance")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for randomized validation")
      ->capture_default_str();
  app.add_option("--out", options.out, "Output file (or directory for compare)");

  std::string model_path, synergy_path, q, q0, q1, v0, weights, target;
  int grid = 7;
  auto add_model = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("model", model_path, "Robot description (.json or .urdf)")->required();
  };

  CLI::App* mm = app.add_subcommand("mass-matrix", "Print G(q) and det(G)");
  add_model(mm);
  mm->add_option("--q", q, "Configuration, comma-separated radians")->required();

  CLI::App* sh = app.add_subcommand("shoot", "Integrate a geodesic from (q0, v0)");
  add_model(sh);
  sh->add_option("--q0", q0, "Initial configuration")->required();
  sh->add_option("--v0", v0, "Initial joint velocity")->required();

  CLI::App* co = app.add_subcommand("connect", "Find the geodesic from q0 to q1");
  add_model(co);
  co->add_option("--q0", q0, "Start configuration")->required();
  co->add_option("--q1", q1, "Goal configuration")->required();

  CLI::App* cmp = app.add_subcommand("compare", "Geodesic vs. straight joint path");
  add_model(cmp);
  cmp->add_option("--q0", q0, "Start configuration")->required();
  cmp->add_option("--q1", q1, "Goal configuration")->required();
  cmp->add_option("--grid", grid, "Metric ellipses per axis in the SVG")->capture_default_str();

  CLI::App* cb = app.add_subcommand("combine", "Execute a weighted synergy combination");
  add_model(cb);
  cb->add_option("--synergies", synergy_path, "Synergy set file")->required();
  cb->add_option("--weights", weights, "One weight per synergy")->required();
  cb->add_option("--target-base", target, "Common base configuration");

  CLI::App* va = app.add_subcommand("validate", "Run the invariant suite on a model");
  add_model(va);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunReport report;
    if (mm->parsed()) {
      report = cmd_mass_matrix(model_path, parse_list(q, "--q"), options, out);
    } else if (sh->parsed()) {
      report = cmd_shoot(model_path, parse_list(q0, "--q0"), parse_list(v0, "--v0"), options, out);
    } else if (co->parsed()) {
      report = cmd_connect(model_path, parse_list(q0, "--q0"), parse_list(q1, "--q1"), options,
                           out);
    } else if (cmp->parsed()) {
      report = cmd_compare(model_path, parse_list(q0, "--q0"), parse_list(q1, "--q1"), grid,
                           options, out);
    } else if (cb->parsed()) {
      std::optional<Eigen::VectorXd> base;
      if (!target.empty()) base = parse_list(target, "--target-base");
      report = cmd_combine(model_path, synergy_path, parse_list(weights, "--weights"), base,
                           options, out);
    } else {
      report = cmd_validate(model_path, options, out);
    }
    out << report.render();
    return report.all_passed() ? kExitOk : kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const SingularMetricError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace geosyn::cli
