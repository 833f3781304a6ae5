#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcs/manipulators.hpp"
#include "gcs/singularity.hpp"

namespace gcs {

enum class ManipulatorKind { UPU3, Delta, SMG, Verne };

std::string_view to_string(ManipulatorKind k);
std::optional<ManipulatorKind> parse_kind(std::string_view name);

using Geometry = std::variant<Geometry3UPU, GeometryDelta, SmgParameters, GeometryVerne>;

/// A manipulator ready to analyze: geometry plus the home pose used for any
/// pose parameter a caller leaves out.
struct Model {
  Geometry geometry;
  ThirdNormal third = ThirdNormal::SharedPlane;
  NamedValues home;

  ManipulatorKind kind() const { return static_cast<ManipulatorKind>(geometry.index()); }
};

/// Pose parameters in the order they appear in reports:
/// 3upu, delta: x y z; smg: theta1 phi1 psi1 theta2 phi2 psi2; verne: x y z rz.
const std::vector<std::string>& pose_parameters(ManipulatorKind k);

/// Condition columns in report order.
const std::vector<std::string>& condition_names(ManipulatorKind k);

/// Home pose overridden by `values`, in pose_parameters order. Unknown names
/// throw ConfigError.
NamedValues resolve_pose(const Model& model, const std::map<std::string, double>& values);

/// Builds the manipulator at `pose` (as returned by resolve_pose), runs the
/// oracle and every applicable condition, and labels singular verdicts.
/// Builder errors (Unreachable, IKDegenerate, ...) propagate.
SingularityReport analyze(const Model& model, const NamedValues& pose,
                          const Tolerances& tol = default_tolerances());

const std::vector<std::string>& preset_names();

/// Throws ConfigError for an unknown name.
Model preset(std::string_view name);

}  // namespace gcs
