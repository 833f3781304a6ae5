#include "gcs/analysis.hpp"

#include <algorithm>

#include <Eigen/Geometry>

namespace gcs {

std::string_view to_string(ManipulatorKind k) {
  switch (k) {
    case ManipulatorKind::UPU3: return "3upu";
    case ManipulatorKind::Delta: return "delta";
    case ManipulatorKind::SMG: return "smg";
    case ManipulatorKind::Verne: return "verne";
  }
  return "?";
}

std::optional<ManipulatorKind> parse_kind(std::string_view name) {
  for (auto k : {ManipulatorKind::UPU3, ManipulatorKind::Delta, ManipulatorKind::SMG,
                 ManipulatorKind::Verne}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

const std::vector<std::string>& pose_parameters(ManipulatorKind k) {
  static const std::vector<std::string> xyz{"x", "y", "z"};
  static const std::vector<std::string> smg{"theta1", "phi1", "psi1", "theta2", "phi2", "psi2"};
  static const std::vector<std::string> verne{"x", "y", "z", "rz"};
  switch (k) {
    case ManipulatorKind::UPU3:
    case ManipulatorKind::Delta: return xyz;
    case ManipulatorKind::SMG: return smg;
    case ManipulatorKind::Verne: return verne;
  }
  return xyz;
}

const std::vector<std::string>& condition_names(ManipulatorKind k) {
  static const std::vector<std::string> upu{"actuation", "constraint", "product"};
  static const std::vector<std::string> delta{"delta", "class1_actuation", "class1_constraint", "class3"};
  static const std::vector<std::string> smg{"class2", "meet_four_planes"};
  static const std::vector<std::string> verne{"class3"};
  switch (k) {
    case ManipulatorKind::UPU3: return upu;
    case ManipulatorKind::Delta: return delta;
    case ManipulatorKind::SMG: return smg;
    case ManipulatorKind::Verne: return verne;
  }
  return upu;
}

NamedValues resolve_pose(const Model& model, const std::map<std::string, double>& values) {
  const auto& names = pose_parameters(model.kind());
  for (const auto& [name, v] : values) {
    (void)v;
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorCode::ConfigError, "unknown pose parameter '" + name + "' for " +
                                              std::string(to_string(model.kind())));
    }
  }
  NamedValues out;
  for (const auto& name : names) {
    double v = 0.0;
    for (const auto& [hn, hv] : model.home) {
      if (hn == name) v = hv;
    }
    if (auto it = values.find(name); it != values.end()) v = it->second;
    out.emplace_back(name, v);
  }
  return out;
}

namespace {

double pose_value(const NamedValues& pose, std::string_view name) {
  for (const auto& [n, v] : pose) {
    if (n == name) return v;
  }
  throw Error(ErrorCode::ConfigError, "pose is missing '" + std::string(name) + "'");
}

Vec3 position(const NamedValues& pose) {
  return {pose_value(pose, "x"), pose_value(pose, "y"), pose_value(pose, "z")};
}

void apply_oracle(SingularityReport& r, const GoverningSystem& system, const Tolerances& tol) {
  const OracleResult o = oracle(system, tol);
  r.oracle_det = o.det;
  r.oracle_min_singular_value = o.min_singular_value;
  r.verdict = o.verdict;
  r.is_singular = o.is_singular;
}

void analyze_into(SingularityReport& r, const Geometry3UPU& g, const Model&, const NamedValues& pose,
                  const Tolerances& tol) {
  const Build3UPU b = build_3upu(g, {position(pose), Mat3::Identity()}, tol);
  apply_oracle(r, b.system, tol);
  const Class1Condition c = class1_condition(b.directions, b.torques);
  r.condition_values = {{"actuation", c.actuation}, {"constraint", c.constraint}, {"product", c.product_form}};
  if (r.verdict != Verdict::NonSingular) {
    r.case_label = classify_class1(b.directions, b.torques, r.verdict, tol);
  }
}

void analyze_into(SingularityReport& r, const GeometryDelta& g, const Model&, const NamedValues& pose,
                  const Tolerances& tol) {
  const BuildDelta b = build_delta(g, {position(pose), Mat3::Identity()}, tol);
  apply_oracle(r, b.six_force, tol);
  const auto& s = b.directions;
  const auto& n = b.torques;
  const Class1Condition c = class1_condition(s, n);
  r.condition_values = {{"delta", delta_condition(s[0], s[1], s[2], n[0], n[1], n[2])},
                        {"class1_actuation", c.actuation},
                        {"class1_constraint", c.constraint},
                        {"class3", class3_condition(b.six_force_points, tol)}};
  if (r.verdict != Verdict::NonSingular) r.case_label = classify_class1(s, n, r.verdict, tol);
}

void analyze_into(SingularityReport& r, const SmgParameters& g, const Model& model,
                  const NamedValues& pose, const Tolerances& tol) {
  SmgJoints j;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string k = std::to_string(i + 1);
    j.theta[i] = pose_value(pose, "theta" + k);
    j.phi[i] = pose_value(pose, "phi" + k);
    j.psi[i] = pose_value(pose, "psi" + k);
  }
  const BuildSMG b = build_smg(smg_configuration(g, j), model.third, tol);
  apply_oracle(r, b.system, tol);
  Class2Evaluation eval = class2_condition(b.points, tol);
  if (!eval.degenerate_plane) eval.value = class2_condition(b.normals);
  r.condition_values = {{"class2", eval.value}, {"meet_four_planes", eval.meet_four_planes}};
  if (r.verdict != Verdict::NonSingular) r.case_label = classify_class2(eval, r.verdict, tol);
}

void analyze_into(SingularityReport& r, const GeometryVerne& g, const Model&, const NamedValues& pose,
                  const Tolerances& tol) {
  Pose p;
  p.position = position(pose);
  p.orientation = Eigen::AngleAxisd(pose_value(pose, "rz"), Vec3::UnitZ()).toRotationMatrix();
  const BuildVerne b = build_verne(g, p, tol);
  apply_oracle(r, b.system, tol);
  r.condition_values = {{"class3", class3_condition(b.points, tol)}};
  if (r.verdict != Verdict::NonSingular) r.case_label = classify_class3(b.points, r.verdict, tol);
}

}  // namespace

SingularityReport analyze(const Model& model, const NamedValues& pose, const Tolerances& tol) {
  SingularityReport r;
  r.pose_echo = pose;
  std::visit([&](const auto& g) { analyze_into(r, g, model, pose, tol); }, model.geometry);
  return r;
}

}  // namespace gcs
