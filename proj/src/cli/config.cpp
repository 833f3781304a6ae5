#include "gcs/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gcs::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + ": expected a number");
  return v.get<double>();
}

Vec3 vec3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) fail(where + ": expected [x, y, z]");
  return {number(v[0], where), number(v[1], where), number(v[2], where)};
}

template <std::size_t N>
std::array<Vec3, N> vec3s(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) fail(where + ": expected " + std::to_string(N) + " points");
  std::array<Vec3, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = vec3(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj.at(key), where + "." + key) : fallback;
}

Geometry3UPU parse_3upu(const json& g) {
  Geometry3UPU out;
  out.base_points = vec3s<3>(field(g, "base_points", "geometry"), "geometry.base_points");
  out.platform_points = vec3s<3>(field(g, "platform_points", "geometry"), "geometry.platform_points");
  out.first_axes = vec3s<3>(field(g, "first_axes", "geometry"), "geometry.first_axes");
  out.min_leg_length = number_or(g, "min_leg_length", out.min_leg_length, "geometry");
  out.max_leg_length = number_or(g, "max_leg_length", out.max_leg_length, "geometry");
  return out;
}

GeometryDelta parse_delta(const json& g) {
  GeometryDelta out;
  const json& legs = field(g, "legs", "geometry");
  if (!legs.is_array() || legs.size() != 3) fail("geometry.legs: expected 3 legs");
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string w = "geometry.legs[" + std::to_string(k) + "]";
    const json& l = legs[k];
    auto& leg = out.legs[k];
    leg.guide_anchor = vec3(field(l, "guide_anchor", w), w + ".guide_anchor");
    leg.guide_direction = vec3(field(l, "guide_direction", w), w + ".guide_direction");
    leg.platform_center = vec3(field(l, "platform_center", w), w + ".platform_center");
    leg.half_bar = vec3(field(l, "half_bar", w), w + ".half_bar");
    leg.branch = number_or(l, "branch", 1.0, w) < 0.0 ? -1 : 1;
  }
  out.rod_length = number(field(g, "rod_length", "geometry"), "geometry.rod_length");
  return out;
}

SmgParameters parse_smg(const json& g) {
  SmgParameters out;
  out.base_points = vec3s<2>(field(g, "base_points", "geometry"), "geometry.base_points");
  out.lower_link = number_or(g, "lower_link", out.lower_link, "geometry");
  out.upper_link = number_or(g, "upper_link", out.upper_link, "geometry");
  if (g.contains("axis")) out.axis = vec3(g.at("axis"), "geometry.axis");
  return out;
}

GeometryVerne parse_verne(const json& g) {
  GeometryVerne out;
  const json& legs = field(g, "legs", "geometry");
  if (!legs.is_array() || legs.size() != 3) fail("geometry.legs: expected 3 legs");
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string w = "geometry.legs[" + std::to_string(k) + "]";
    if (!legs[k].is_array() || legs[k].size() != 2) fail(w + ": expected 2 rods");
    for (std::size_t r = 0; r < 2; ++r) {
      const std::string wr = w + "[" + std::to_string(r) + "]";
      out.legs[k][r].slider = vec3(field(legs[k][r], "slider", wr), wr + ".slider");
      out.legs[k][r].platform = vec3(field(legs[k][r], "platform", wr), wr + ".platform");
    }
  }
  if (g.contains("guide_directions")) {
    out.guide_directions = vec3s<3>(g.at("guide_directions"), "geometry.guide_directions");
  }
  return out;
}

ThirdNormal parse_third(const json& v) {
  if (!v.is_string()) fail("third_normal: expected a string");
  const auto s = v.get<std::string>();
  if (s == "shared-plane") return ThirdNormal::SharedPlane;
  if (s == "chain-axis-1") return ThirdNormal::ChainAxis1;
  if (s == "chain-axis-2") return ThirdNormal::ChainAxis2;
  fail("third_normal: unknown value '" + s + "'");
}

}  // namespace

Model parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("configuration must be a JSON object");

  Model model;
  if (doc.contains("preset")) {
    if (!doc["preset"].is_string()) fail("preset: expected a string");
    if (doc.contains("geometry")) fail("give either \"preset\" or \"geometry\", not both");
    model = preset(doc["preset"].get<std::string>());
    if (doc.contains("manipulator") && doc["manipulator"] != std::string(to_string(model.kind()))) {
      fail("manipulator does not match the preset");
    }
  } else {
    const json& kind = field(doc, "manipulator", "configuration");
    if (!kind.is_string()) fail("manipulator: expected a string");
    const auto k = parse_kind(kind.get<std::string>());
    if (!k) fail("manipulator: unknown kind '" + kind.get<std::string>() + "'");
    const json& g = field(doc, "geometry", "configuration");
    switch (*k) {
      case ManipulatorKind::UPU3: model.geometry = parse_3upu(g); break;
      case ManipulatorKind::Delta: model.geometry = parse_delta(g); break;
      case ManipulatorKind::SMG: model.geometry = parse_smg(g); break;
      case ManipulatorKind::Verne: model.geometry = parse_verne(g); break;
    }
  }
  if (doc.contains("third_normal")) model.third = parse_third(doc["third_normal"]);
  if (doc.contains("pose")) {
    const json& pose = doc["pose"];
    if (!pose.is_object()) fail("pose: expected an object");
    std::map<std::string, double> values;
    for (const auto& [key, v] : pose.items()) values[key] = number(v, "pose." + key);
    model.home = resolve_pose(model, values);
  } else {
    model.home = resolve_pose(model, {});
  }
  return model;
}

Model load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

namespace {

double parse_double(std::string_view s, std::string_view context) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    fail("'" + std::string(s) + "' is not a number in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

std::pair<std::string, double> parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) fail("expected name=value, got '" + std::string(text) + "'");
  return {std::string(text.substr(0, eq)), parse_double(text.substr(eq + 1), text)};
}

std::map<std::string, double> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    auto [k, v] = parse_assignment(item);
    out[k] = v;
  }
  return out;
}

double GridAxis::at(int k) const {
  if (samples <= 1) return min;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(samples - 1);
}

GridAxis parse_grid_axis(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) fail("expected name=min:max:n, got '" + std::string(text) + "'");
  const std::string_view spec = text.substr(eq + 1);
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) fail("expected name=min:max:n, got '" + std::string(text) + "'");
  GridAxis axis;
  axis.name = std::string(text.substr(0, eq));
  axis.min = parse_double(spec.substr(0, c1), text);
  axis.max = parse_double(spec.substr(c1 + 1, c2 - c1 - 1), text);
  const double n = parse_double(spec.substr(c2 + 1), text);
  if (n < 1.0 || n != static_cast<double>(static_cast<int>(n))) fail("sample count must be a positive integer");
  axis.samples = static_cast<int>(n);
  if (axis.min > axis.max) fail("grid min exceeds max for '" + axis.name + "'");
  return axis;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace gcs::cli
