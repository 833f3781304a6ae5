#include "gcs/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/Geometry>

namespace gcs::cli {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::NonSingular: return kExitNonSingular;
    case Verdict::Singular: return kExitSingular;
    case Verdict::NearSingular: return kExitNearSingular;
  }
  return kExitError;
}

int cmd_check(const Model& model, const std::map<std::string, double>& pose, const Tolerances& tol,
              std::ostream& out, std::ostream& err) {
  SingularityReport r;
  try {
    r = analyze(model, resolve_pose(model, pose), tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << "manipulator: " << to_string(model.kind()) << "\n";
  for (const auto& [k, v] : r.pose_echo) out << "pose." << k << ": " << format_number(v) << "\n";
  out << "oracle_det: " << format_number(r.oracle_det) << "\n";
  out << "min_sv: " << format_number(r.oracle_min_singular_value) << "\n";
  for (const auto& [k, v] : r.condition_values) out << "cond." << k << ": " << format_number(v) << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "case: " << to_string(r.case_label) << "\n";
  return exit_code(r.verdict);
}

std::string sweep_header(const Model& model) {
  std::string h;
  for (const auto& p : pose_parameters(model.kind())) h += "pose." + p + ",";
  h += "oracle_det,min_sv";
  for (const auto& c : condition_names(model.kind())) h += ",cond." + c;
  h += ",verdict,case";
  return h;
}

namespace {

std::string sweep_row(const Model& model, const NamedValues& pose, const Tolerances& tol) {
  std::string row;
  for (const auto& [k, v] : pose) row += format_number(v) + ",";
  try {
    const SingularityReport r = analyze(model, pose, tol);
    row += format_number(r.oracle_det) + "," + format_number(r.oracle_min_singular_value);
    for (const auto& [k, v] : r.condition_values) row += "," + format_number(v);
    row += "," + std::string(to_string(r.verdict)) + "," + std::string(to_string(r.case_label));
  } catch (const Error& e) {
    row += ",";
    for (std::size_t k = 0; k < condition_names(model.kind()).size(); ++k) row += ",";
    row += ",unreachable," + std::string(to_string(e.code()));
  }
  return row;
}

}  // namespace

void cmd_sweep(const Model& model, const SweepSpec& spec, const Tolerances& tol, std::ostream& out) {
  const auto& names = pose_parameters(model.kind());
  for (const auto& axis : spec.axes) {
    if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
      throw Error(ErrorCode::ConfigError, "unknown pose parameter '" + axis.name + "' in grid");
    }
    if (axis.samples < 1 || axis.min > axis.max) {
      throw Error(ErrorCode::ConfigError, "bad grid axis '" + axis.name + "'");
    }
  }
  std::size_t total = 1;
  for (const auto& axis : spec.axes) total *= static_cast<std::size_t>(axis.samples);

  const auto pose_at = [&](std::size_t index) {
    std::map<std::string, double> values;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const auto n = static_cast<std::size_t>(spec.axes[a].samples);
      values[spec.axes[a].name] = spec.axes[a].at(static_cast<int>(index % n));
      index /= n;
    }
    return resolve_pose(model, values);
  };

  std::vector<std::string> rows(total);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) rows[i] = sweep_row(model, pose_at(i), tol);
  };
  unsigned jobs = spec.jobs > 0 ? static_cast<unsigned>(spec.jobs) : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  out << sweep_header(model) << "\n";
  for (const auto& row : rows) out << row << "\n";
}

// Self-test -------------------------------------------------------------------

namespace {

constexpr double kReciprocityBound = 1e-10;
constexpr double kActuationBound = 1e-3;

struct Battery {
  std::ostream& out;
  int failures = 0;

  void report(bool ok, const std::string& name, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
  }
};

HomogPoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return HomogPoint(n(rng), n(rng), n(rng), n(rng));
}

void proportionality(Battery& b, const Tolerances& tol, std::span<const MonomialTerm> table) {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  int used = 0;
  for (int t = 0; t < 300; ++t) {
    std::array<HomogPoint, 12> p{random_point(rng), random_point(rng), random_point(rng), random_point(rng),
                                 random_point(rng), random_point(rng), random_point(rng), random_point(rng),
                                 random_point(rng), random_point(rng), random_point(rng), random_point(rng)};
    const SixLinePoints pts{p};
    const auto rows = pts.raw_lines();
    const double det = plucker_matrix_det(rows).det;
    if (std::abs(det) < 1e-6) continue;
    ++used;
    const double ratio = superbracket(pts, table) / det;
    worst = std::max(worst, std::abs(ratio - kSuperbracketToDeterminant) / kSuperbracketToDeterminant);
  }
  std::ostringstream d;
  d << used << " samples, max relative deviation " << format_number(worst) << " vs epsilon "
    << format_number(tol.condition);
  b.report(worst <= tol.condition, "superbracket proportional to Plücker determinant", d.str());
}

void syzygies(Battery& b, const Tolerances& tol) {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const std::array<HomogPoint, 4> e{random_point(rng), random_point(rng), random_point(rng), random_point(rng)};
    const std::array<HomogPoint, 4> f{random_point(rng), random_point(rng), random_point(rng), random_point(rng)};
    worst = std::max(worst, std::abs(syzygy_residual(e, f)) / syzygy_scale(e, f));
  }
  std::ostringstream d;
  d << "max relative residual " << format_number(worst) << " vs epsilon " << format_number(tol.condition);
  b.report(worst <= tol.condition, "Grassmann-Plücker syzygy", d.str());
}

void accumulate(ReciprocityCheck& acc, const GoverningSystem& system, const std::vector<JointChain>& chains) {
  const ReciprocityCheck c = check_reciprocity(system, chains);
  acc.worst_passive = std::max(acc.worst_passive, c.worst_passive);
  acc.weakest_actuated = std::min(acc.weakest_actuated, c.weakest_actuated);
}

void reciprocity_battery(Battery& b, const Tolerances& tol) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);
  for (const auto& name : preset_names()) {
    const Model model = preset(name);
    ReciprocityCheck acc;
    int built = 0;
    for (int t = 0; t < 40; ++t) {
      NamedValues pose = model.home;
      for (auto& [k, v] : pose) v += (k.size() > 1 ? 0.15 : 0.05) * jitter(rng);
      try {
        std::map<std::string, double> values(pose.begin(), pose.end());
        const NamedValues p = resolve_pose(model, values);
        const auto get = [&](const char* key) {
          return std::find_if(p.begin(), p.end(), [&](const auto& kv) { return kv.first == key; })->second;
        };
        std::visit(
            [&](const auto& g) {
              using G = std::decay_t<decltype(g)>;
              if constexpr (std::is_same_v<G, Geometry3UPU>) {
                const auto r = build_3upu(g, {Vec3(get("x"), get("y"), get("z")), Mat3::Identity()}, tol);
                accumulate(acc, r.system, r.chains);
              } else if constexpr (std::is_same_v<G, GeometryDelta>) {
                const auto r = build_delta(g, {Vec3(get("x"), get("y"), get("z")), Mat3::Identity()}, tol);
                accumulate(acc, r.six_force, r.chains);
                accumulate(acc, r.exchanged, r.chains);
              } else if constexpr (std::is_same_v<G, SmgParameters>) {
                SmgJoints j{{get("theta1"), get("theta2")}, {get("phi1"), get("phi2")}, {get("psi1"), get("psi2")}};
                const auto r = build_smg(smg_configuration(g, j), model.third, tol);
                accumulate(acc, r.system, r.chains);
              } else {
                Pose pz{Vec3(get("x"), get("y"), get("z")),
                        Eigen::AngleAxisd(get("rz"), Vec3::UnitZ()).toRotationMatrix()};
                const auto r = build_verne(g, pz, tol);
                accumulate(acc, r.system, r.chains);
              }
            },
            model.geometry);
        ++built;
      } catch (const Error&) {
        continue;
      }
    }
    std::ostringstream d;
    d << built << " poses, worst passive pairing " << format_number(acc.worst_passive)
      << ", weakest actuated pairing " << format_number(acc.weakest_actuated);
    b.report(built > 0 && acc.worst_passive <= kReciprocityBound && acc.weakest_actuated > kActuationBound,
             "reciprocity " + name, d.str());
  }
}

}  // namespace

int cmd_selftest(const Tolerances& tol, std::ostream& out, std::span<const MonomialTerm> table) {
  Battery b{out};
  if (!(tol.condition > 0.0)) {
    out << "note: epsilon " << format_number(tol.condition)
        << " leaves no room for floating-point rounding; residual checks cannot pass\n";
  }
  proportionality(b, tol, table);
  syzygies(b, tol);
  reciprocity_battery(b, tol);
  out << (b.failures == 0 ? "selftest passed" : "selftest failed: " + std::to_string(b.failures) + " check(s)")
      << "\n";
  return b.failures == 0 ? 0 : 1;
}

// Entry point -----------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularity analysis of lower-mobility parallel manipulators"};
  app.require_subcommand(1);
  Tolerances tol;
  app.add_option("--epsilon", tol.condition, "Tolerance for closed-form conditions and self-test residuals")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threshold", tol.singular, "Oracle singular threshold on the minimum singular value")
      ->check(CLI::NonNegativeNumber);

  std::string config;
  std::string preset_name;
  std::vector<std::string> pose;
  auto* check = app.add_subcommand("check", "Evaluate one pose");
  check->add_option("--config", config, "Configuration file (JSON)");
  check->add_option("--preset", preset_name, "Built-in preset instead of a configuration file");
  check->add_option("--pose", pose, "Pose values name=value")->expected(0, -1);

  std::vector<std::string> grid;
  int jobs = 1;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a rectangular pose grid, CSV output");
  sweep->add_option("--config", config, "Configuration file (JSON)");
  sweep->add_option("--preset", preset_name, "Built-in preset instead of a configuration file");
  sweep->add_option("--grid", grid, "Grid axes name=min:max:samples")->expected(0, -1);
  sweep->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
  sweep->add_option("--out", out_path, "Write CSV to this file instead of standard output");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  if (tol.near_singular < tol.singular) tol.near_singular = tol.singular;
  try {
    if (selftest->parsed()) return cmd_selftest(tol, out);

    if (config.empty() == preset_name.empty()) {
      throw Error(ErrorCode::ConfigError, "give exactly one of --config or --preset");
    }
    const Model model = config.empty() ? preset(preset_name) : load_config(config);
    if (check->parsed()) return cmd_check(model, parse_assignments(pose), tol, out, err);

    SweepSpec spec;
    spec.jobs = jobs;
    for (const auto& g : grid) spec.axes.push_back(parse_grid_axis(g));
    if (out_path.empty()) {
      cmd_sweep(model, spec, tol, out);
    } else {
      std::ofstream file(out_path);
      if (!file) throw Error(ErrorCode::ConfigError, "cannot write " + out_path);
      cmd_sweep(model, spec, tol, file);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace gcs::cli
