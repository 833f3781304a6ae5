#include <cmath>
#include <numbers>

#include "gcs/analysis.hpp"

namespace gcs {

namespace {

Vec3 on_circle(double radius, double angle, double z = 0.0) {
  return {radius * std::cos(angle), radius * std::sin(angle), z};
}

// Equilateral base of radius 1, platform of radius 0.5; the fixed U axes are
// tangential, tilted up by a fixed slope.
Geometry3UPU upu_geometry() {
  Geometry3UPU g;
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(i) / 3.0;
    g.base_points[i] = on_circle(1.0, a);
    g.platform_points[i] = on_circle(0.5, a);
    g.first_axes[i] = Vec3(-std::sin(a), std::cos(a), 0.3).normalized();
  }
  g.min_leg_length = 0.2;
  g.max_leg_length = 2.0;
  return g;
}

// Three guides along x. Legs 1 and 2 face each other across the y axis with
// bars along x, so their torques turn parallel on the plane z = -0.3.
GeometryDelta delta_geometry() {
  GeometryDelta g;
  g.rod_length = 1.0;
  g.legs[0] = {{0.0, -0.6, -0.3}, Vec3::UnitX(), {0.0, -0.1, 0.0}, {0.1, 0.0, 0.0}, -1};
  g.legs[1] = {{0.0, 0.6, -0.3}, Vec3::UnitX(), {0.0, 0.1, 0.0}, {0.1, 0.0, 0.0}, -1};
  g.legs[2] = {{0.0, 0.0, 0.4}, Vec3::UnitX(), {0.0, 0.0, 0.1}, {0.0, 0.1, 0.0}, -1};
  return g;
}

SmgParameters smg_geometry() {
  SmgParameters g;
  g.base_points = {Vec3(-0.4, 0.0, 0.0), Vec3(0.4, 0.0, 0.0)};
  g.lower_link = 0.5;
  g.upper_link = 0.5;
  return g;
}

// Legs II and III are parallelograms in planes through x = -1 and x = +1 with
// vertical rungs; they become coplanar when the platform crosses y = 0.
GeometryVerne verne_geometry() {
  GeometryVerne g;
  g.legs[0] = {{{{-0.15, -1.0, 0.0}, {-0.1, -0.3, 0.05}}, {{0.15, -1.0, 0.0}, {0.1, -0.3, -0.05}}}};
  g.legs[1] = {{{{-1.0, 0.0, 0.0}, {-0.3, 0.0, 0.0}}, {{-1.0, 0.0, 0.2}, {-0.3, 0.0, 0.2}}}};
  g.legs[2] = {{{{1.0, 0.0, 0.0}, {0.3, 0.0, 0.0}}, {{1.0, 0.0, 0.2}, {0.3, 0.0, 0.2}}}};
  return g;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"3upu-sym", "3upu-flat", "delta-sym", "smg-default",
                                              "verne-default"};
  return names;
}

Model preset(std::string_view name) {
  if (name == "3upu-sym") return {upu_geometry(), ThirdNormal::SharedPlane, {{"x", 0.0}, {"y", 0.0}, {"z", 0.8}}};
  if (name == "3upu-flat") return {upu_geometry(), ThirdNormal::SharedPlane, {{"x", 0.0}, {"y", 0.0}, {"z", 0.0}}};
  if (name == "delta-sym") return {delta_geometry(), ThirdNormal::SharedPlane, {{"x", 0.0}, {"y", 0.0}, {"z", 0.0}}};
  if (name == "smg-default") {
    return {smg_geometry(),
            ThirdNormal::SharedPlane,
            {{"theta1", 0.4}, {"phi1", 0.6}, {"psi1", -0.5}, {"theta2", 2.6}, {"phi2", 0.7}, {"psi2", -0.4}}};
  }
  if (name == "verne-default") {
    return {verne_geometry(), ThirdNormal::SharedPlane, {{"x", 0.0}, {"y", 0.3}, {"z", 1.0}, {"rz", 0.0}}};
  }
  throw Error(ErrorCode::ConfigError, "unknown preset '" + std::string(name) + "'");
}

}  // namespace gcs
