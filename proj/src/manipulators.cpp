#include "gcs/manipulators.hpp"

#include <cmath>
#include <string>

namespace gcs {

namespace {

constexpr double kPerpendicularEps = 1e-9;

void require_translational(const Pose& pose, const char* what) {
  if ((pose.orientation - Mat3::Identity()).norm() > 1e-12) {
    throw Error(ErrorCode::InvalidGeometry, std::string(what) + " platform only translates");
  }
}

Vec3 unit(const Vec3& v, ErrorCode code, const std::string& what) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(code, what + " has zero length");
  return v / n;
}

std::string label(char kind, int leg, int rod = 0) {
  std::string s(1, kind);
  s += std::to_string(leg + 1);
  if (rod > 0) s += std::to_string(rod);
  return s;
}

RowTag actuation(int chain, int twist, std::string name) {
  return {RowRole::ActuationForce, chain, twist, std::move(name)};
}

RowTag constraint(int chain, std::string name) {
  return {RowRole::ConstraintMoment, chain, -1, std::move(name)};
}

HomogPoint placeholder() { return HomogPoint(0.0, 0.0, 0.0, 1.0); }

SixLinePoints placeholder_points() {
  const HomogPoint p = placeholder();
  return SixLinePoints{{p, p, p, p, p, p, p, p, p, p, p, p}};
}

}  // namespace

std::optional<SixLinePoints> class1_points(const std::array<Vec3, 3>& r, const std::array<Vec3, 3>& s,
                                           const std::array<Vec3, 3>& n) {
  MomentInfinityPoints ghi;
  try {
    ghi = infinity_points_of_moment_pair(n[0], n[1], n[2]);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (ghi.degenerate(k)) return std::nullopt;
  }
  const HomogPoint& g = *ghi.points[0];
  const HomogPoint& h = *ghi.points[1];
  const HomogPoint& i = *ghi.points[2];
  return SixLinePoints{{
      point_from_affine(r[0]), point_at_infinity(s[0]),
      point_from_affine(r[1]), point_at_infinity(s[1]),
      point_from_affine(r[2]), point_at_infinity(s[2]),
      g, h, g, i, h, i,
  }};
}

// 3-UPU -----------------------------------------------------------------------

Build3UPU build_3upu(const Geometry3UPU& geom, const Pose& pose, const Tolerances& tol) {
  require_translational(pose, "3-UPU");
  Build3UPU out{.system = {},
                .points = placeholder_points(),
                .chains = {},
                .directions = {},
                .torques = {},
                .base_points = geom.base_points};
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const Vec3& a = geom.base_points[k];
    const Vec3 b = pose.position + geom.platform_points[k];
    const Vec3 v = b - a;
    const double len = v.norm();
    if (!(len > 0.0) || len < geom.min_leg_length || len > geom.max_leg_length) {
      throw Error(ErrorCode::Unreachable, "leg " + std::to_string(i + 1) + " length " +
                                              std::to_string(len) + " outside its stroke");
    }
    const Vec3 s = v / len;
    const Vec3 a1 = unit(geom.first_axes[k], ErrorCode::InvalidGeometry, "U-joint axis");
    const Vec3 a2raw = a1.cross(s);
    if (a2raw.norm() <= kPerpendicularEps) {
      throw Error(ErrorCode::DegenerateConstraint,
                  "leg " + std::to_string(i + 1) + " is along its U-joint axis");
    }
    const Vec3 a2 = a2raw.normalized();
    const Vec3 n = a1.cross(a2);
    out.directions[k] = s;
    out.torques[k] = n;
    out.system.wrenches[k] = force(s, a);
    out.system.tags[k] = actuation(i, 2, label('F', i));
    out.system.wrenches[k + 3] = moment(n);
    out.system.tags[k + 3] = constraint(i, label('M', i));
    out.chains.push_back({"leg " + std::to_string(i + 1),
                          {revolute_twist(a1, a), revolute_twist(a2, a), prismatic_twist(s),
                           revolute_twist(a2, b), revolute_twist(a1, b)},
                          {false, false, true, false, false}});
  }
  const auto pts = class1_points(geom.base_points, out.directions, out.torques);
  if (pts) {
    out.points = *pts;
  } else {
    out.moment_points_degenerate = true;
  }
  (void)tol;
  return out;
}

// Delta-linear ----------------------------------------------------------------

double delta_slider(const GeometryDelta::Leg& leg, double rod_length, const Vec3& position,
                    const Tolerances& tol) {
  const Vec3 g = unit(leg.guide_direction, ErrorCode::InvalidGeometry, "guide direction");
  const Vec3 v = position + leg.platform_center - leg.guide_anchor;
  const double vg = v.dot(g);
  const double disc = vg * vg - v.squaredNorm() + rod_length * rod_length;
  const double scale = rod_length * rod_length;
  if (std::abs(disc) <= tol.geometric * scale) {
    throw Error(ErrorCode::IKDegenerate, "rod sphere is tangent to the guide");
  }
  if (disc < 0.0) throw Error(ErrorCode::Unreachable, "rod cannot reach the guide");
  return vg + (leg.branch < 0 ? -1.0 : 1.0) * std::sqrt(disc);
}

BuildDelta build_delta(const GeometryDelta& geom, const Pose& pose, const Tolerances& tol) {
  require_translational(pose, "Delta");
  if (!(geom.rod_length > 0.0)) throw Error(ErrorCode::InvalidGeometry, "rod length must be positive");
  BuildDelta out{.six_force = {},
                 .exchanged = {},
                 .six_force_points = placeholder_points(),
                 .exchanged_points = placeholder_points(),
                 .exchanged_points_degenerate = false,
                 .chains = {},
                 .slider = {},
                 .directions = {},
                 .torques = {}};
  std::array<HomogPoint, 12> rod_points{placeholder(), placeholder(), placeholder(), placeholder(),
                                        placeholder(), placeholder(), placeholder(), placeholder(),
                                        placeholder(), placeholder(), placeholder(), placeholder()};
  std::array<Vec3, 3> anchors;
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto& leg = geom.legs[k];
    const Vec3 g = unit(leg.guide_direction, ErrorCode::InvalidGeometry, "guide direction");
    const double q = delta_slider(leg, geom.rod_length, pose.position, tol);
    const Vec3 slider = leg.guide_anchor + q * g;
    const Vec3 center = pose.position + leg.platform_center;
    const Vec3 s = (center - slider) / geom.rod_length;
    const Vec3& w = leg.half_bar;
    const Vec3 r1 = slider + w;
    const Vec3 r2 = slider - w;
    out.slider[k] = q;
    out.directions[k] = s;
    out.torques[k] = (r1 - r2).cross(s);
    anchors[k] = r1;

    const Screw f1 = force(s, r1);
    const Screw f2 = force(s, r2);
    out.six_force.wrenches[2 * k] = f1;
    out.six_force.wrenches[2 * k + 1] = f2;
    out.six_force.tags[2 * k] = actuation(i, 0, label('F', i, 1));
    out.six_force.tags[2 * k + 1] = actuation(i, 0, label('F', i, 2));
    rod_points[4 * k] = point_from_affine(r1);
    rod_points[4 * k + 1] = point_from_affine(center + w);
    rod_points[4 * k + 2] = point_from_affine(r2);
    rod_points[4 * k + 3] = point_from_affine(center - w);

    const std::array<Screw, 2> pair{f1, f2};
    Eigen::Matrix2d mix;
    mix << 1.0, 0.0, 1.0, -1.0;
    const auto exchanged = basis_exchange(pair, mix, tol);
    out.exchanged.wrenches[k] = exchanged[0];
    out.exchanged.tags[k] = actuation(i, 0, label('F', i, 1));
    out.exchanged.wrenches[k + 3] = exchanged[1];
    out.exchanged.tags[k + 3] = constraint(i, label('M', i));

    const Vec3 wu = unit(w, ErrorCode::InvalidGeometry, "half bar");
    const Vec3 e = wu - wu.dot(s) * s;
    if (e.norm() <= kPerpendicularEps) {
      throw Error(ErrorCode::DegenerateConstraint, "rods of leg " + std::to_string(i + 1) +
                                                       " are along the bar");
    }
    out.chains.push_back({"leg " + std::to_string(i + 1),
                          {prismatic_twist(g), revolute_twist(wu, slider),
                           prismatic_twist(e.normalized()), revolute_twist(wu, center)},
                          {true, false, false, false}});
  }
  out.six_force_points = SixLinePoints{rod_points};
  const auto pts = class1_points(anchors, out.directions, out.torques);
  if (pts) {
    out.exchanged_points = *pts;
  } else {
    out.exchanged_points_degenerate = true;
  }
  return out;
}

// McGill SMG ------------------------------------------------------------------

GeometrySMG smg_configuration(const SmgParameters& params, const SmgJoints& joints) {
  const Vec3 a = unit(params.axis, ErrorCode::InvalidGeometry, "revolute axis");
  Vec3 e1 = Vec3::UnitX() - a.x() * a;
  if (e1.norm() < 1e-6) e1 = Vec3::UnitY() - a.y() * a;
  e1.normalize();
  const Vec3 e2 = a.cross(e1);
  GeometrySMG geom;
  for (std::size_t i = 0; i < 2; ++i) {
    const Vec3 d = std::cos(joints.theta[i]) * e1 + std::sin(joints.theta[i]) * e2;
    const Vec3 t1 = std::cos(joints.phi[i]) * d + std::sin(joints.phi[i]) * a;
    const Vec3 t2 = std::cos(joints.psi[i]) * d + std::sin(joints.psi[i]) * a;
    const Vec3& r1 = params.base_points[i];
    geom.chains[i] = {a, r1, r1 + params.lower_link * t1 + params.upper_link * t2, t1, t2, a.cross(d)};
  }
  return geom;
}

BuildSMG build_smg(const GeometrySMG& geom, ThirdNormal third, const Tolerances& tol) {
  std::array<GeometrySMG::Chain, 2> c;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& in = geom.chains[i];
    const std::string name = "chain " + std::to_string(i + 1);
    c[i] = {unit(in.s, ErrorCode::InvalidGeometry, name + " axis"), in.r1, in.r2,
            unit(in.t1, ErrorCode::InvalidGeometry, name + " t1"),
            unit(in.t2, ErrorCode::InvalidGeometry, name + " t2"),
            unit(in.u, ErrorCode::InvalidGeometry, name + " u")};
    if (std::abs(c[i].u.dot(c[i].t1)) > kPerpendicularEps ||
        std::abs(c[i].u.dot(c[i].t2)) > kPerpendicularEps) {
      throw Error(ErrorCode::InvalidGeometry, name + ": u is not normal to the parallelogram links");
    }
    if (std::abs(c[i].u.dot(c[i].s)) > kPerpendicularEps) {
      throw Error(ErrorCode::InvalidGeometry, name + ": u is not perpendicular to the revolute axis");
    }
  }

  const HomogPoint p0 = placeholder();
  BuildSMG out{.system = {},
               .points = {p0, p0, p0, p0, p0, p0, p0, p0, p0},
               .normals = {},
               .chains = {},
               .torques_parallel = false};
  for (int i = 0; i < 2; ++i) {
    const auto& ch = c[static_cast<std::size_t>(i)];
    const auto k = static_cast<std::size_t>(2 * i);
    out.system.wrenches[k] = force(ch.u, ch.r2);
    out.system.tags[k] = actuation(i, 0, label('F', i, 1));
    out.system.wrenches[k + 1] = force(ch.t2, ch.r2);
    out.system.tags[k + 1] = actuation(i, 2, label('F', i, 2));
    out.system.wrenches[4 + static_cast<std::size_t>(i)] = moment(ch.u);
    out.system.tags[4 + static_cast<std::size_t>(i)] = constraint(i, label('M', i));
    out.chains.push_back({"chain " + std::to_string(i + 1),
                          {revolute_twist(ch.s, ch.r1), revolute_twist(ch.s, ch.r2),
                           prismatic_twist(ch.t1.cross(ch.u)), prismatic_twist(ch.t2.cross(ch.u))},
                          {true, false, true, false}});
  }

  const auto& c1 = c[0];
  const auto& c2 = c[1];
  Vec3 hdir = c1.u.cross(c2.u);
  if (hdir.norm() <= tol.geometric) {
    out.torques_parallel = true;
    hdir = c1.u.cross(c1.t2);
  }
  const HomogPoint b = point_from_affine(c1.r2);
  const HomogPoint e = point_from_affine(c2.r2);
  const HomogPoint h = point_at_infinity(hdir);
  const HomogPoint g = point_at_infinity(c1.u.cross(h.xyz()));
  const HomogPoint i = out.torques_parallel ? g : point_at_infinity(c2.u.cross(h.xyz()));
  out.points = {point_from_affine(c1.r2 + c1.u), b, point_from_affine(c1.r2 + c1.t2),
                point_from_affine(c2.r2 + c2.u), e, point_from_affine(c2.r2 + c2.t2), g, h, i};

  const Vec3 span = c2.r2 - c1.r2;
  out.normals[0] = c1.u.cross(c1.t2);
  out.normals[1] = c2.u.cross(c2.t2);
  switch (third) {
    case ThirdNormal::SharedPlane: out.normals[2] = span.cross(hdir); break;
    case ThirdNormal::ChainAxis1: out.normals[2] = c1.s.cross(span); break;
    case ThirdNormal::ChainAxis2: out.normals[2] = c2.s.cross(span); break;
  }
  return out;
}

// Verne -----------------------------------------------------------------------

BuildVerne build_verne(const GeometryVerne& geom, const Pose& pose, const Tolerances& tol) {
  (void)tol;
  BuildVerne out{.system = {}, .points = placeholder_points(), .chains = {}};
  std::array<HomogPoint, 12> pts = out.points.points;
  for (int leg = 0; leg < 3; ++leg) {
    const auto l = static_cast<std::size_t>(leg);
    const Vec3 guide = unit(geom.guide_directions[l], ErrorCode::InvalidGeometry, "guide direction");
    std::array<Vec3, 2> dirs;
    for (int rod = 0; rod < 2; ++rod) {
      const auto r = static_cast<std::size_t>(rod);
      const Vec3& a = geom.legs[l][r].slider;
      const Vec3 b = pose.orientation * geom.legs[l][r].platform + pose.position;
      const std::string name = label('F', leg, rod + 1);
      const Vec3 s = unit(b - a, ErrorCode::InvalidGeometry, "rod " + name);
      dirs[r] = s;
      const auto k = 2 * l + r;
      out.system.wrenches[k] = force(s, a);
      out.system.tags[k] = actuation(static_cast<int>(k), 0, name);
      pts[2 * k] = point_from_affine(a);
      pts[2 * k + 1] = point_from_affine(b);
      JointChain chain{"rod " + name, {prismatic_twist(guide)}, {true}};
      for (const Vec3& at : {a, b}) {
        for (const Vec3& axis : {Vec3(Vec3::UnitX()), Vec3(Vec3::UnitY()), Vec3(Vec3::UnitZ())}) {
          chain.twists.push_back(revolute_twist(axis, at));
          chain.actuated.push_back(false);
        }
      }
      out.chains.push_back(std::move(chain));
    }
    if (leg > 0 && (dirs[0].cross(dirs[1]).norm() > kPerpendicularEps || dirs[0].dot(dirs[1]) < 0.0)) {
      throw Error(ErrorCode::InvalidGeometry,
                  "leg " + std::to_string(leg + 1) + " rods are not a parallelogram");
    }
  }
  out.points = SixLinePoints{pts};
  return out;
}

}  // namespace gcs
