#pragma once

#include <array>
#include <vector>

#include "gcs/gca.hpp"
#include "gcs/screws.hpp"

namespace gcs {

using Mat3 = Eigen::Matrix3d;

/// Platform placement. Translational architectures require the identity
/// orientation.
struct Pose {
  Vec3 position = Vec3::Zero();
  Mat3 orientation = Mat3::Identity();
};

/// Point construction for three forces and three moments: force i through
/// r_i with direction s_i becomes (r_i, s_i at infinity); the moments become
/// lines gh, gi, hi from g = n1 x n2, h = n1 x n3, i = n2 x n3. nullopt when
/// two torques are parallel (a cross product vanishes).
std::optional<SixLinePoints> class1_points(const std::array<Vec3, 3>& r, const std::array<Vec3, 3>& s,
                                           const std::array<Vec3, 3>& n);

// 3-UPU -----------------------------------------------------------------------

/// Translational 3-UPU. Leg i runs from base point A_i to platform point
/// position + c_i. The base U joint has its first axis fixed to the base; the
/// second axis is perpendicular to the first and to the leg. The platform U
/// joint mirrors it, so the constraint torque is first x second axis.
struct Geometry3UPU {
  std::array<Vec3, 3> base_points;
  std::array<Vec3, 3> platform_points;  // platform frame
  std::array<Vec3, 3> first_axes;
  double min_leg_length = 0.0;
  double max_leg_length = 1e300;
};

struct Build3UPU {
  GoverningSystem system;              // F1 F2 F3 M1 M2 M3
  SixLinePoints points;                // force lines a..f, moment lines from g, h, i
  std::vector<JointChain> chains;      // one U-P-U chain per leg
  std::array<Vec3, 3> directions;      // s_i
  std::array<Vec3, 3> torques;         // n_i
  std::array<Vec3, 3> base_points;
  bool moment_points_degenerate = false;  // two torques parallel: g, h, i not constructible
};

Build3UPU build_3upu(const Geometry3UPU& geom, const Pose& pose,
                     const Tolerances& tol = default_tolerances());

// Delta-linear ----------------------------------------------------------------

/// Linear-actuated Delta with one parallelogram per leg. The slider moves
/// along the guide line anchor + q * direction; the rods join slider +/- half_bar
/// to position + platform_center +/- half_bar, so both rods of a leg stay
/// parallel. `branch` picks the root of the slider quadratic.
struct GeometryDelta {
  struct Leg {
    Vec3 guide_anchor;
    Vec3 guide_direction;
    Vec3 platform_center;
    Vec3 half_bar;
    int branch = 1;
  };
  std::array<Leg, 3> legs;
  double rod_length = 1.0;
};

struct BuildDelta {
  GoverningSystem six_force;      // F11 F12 F21 F22 F31 F32
  GoverningSystem exchanged;      // F11 F21 F31 M1 M2 M3 with M_i = F_i1 - F_i2
  SixLinePoints six_force_points; // slider end, platform end of each rod
  SixLinePoints exchanged_points; // class-I construction; valid when torques are not parallel
  bool exchanged_points_degenerate = false;
  std::vector<JointChain> chains; // P-R-Pa-R per leg
  std::array<double, 3> slider;   // q_i
  std::array<Vec3, 3> directions; // s_i (shared by both rods of leg i)
  std::array<Vec3, 3> torques;    // n_i = (r_i1 - r_i2) x s_i
};

/// Slider coordinate of leg i; throws Unreachable or IKDegenerate.
double delta_slider(const GeometryDelta::Leg& leg, double rod_length, const Vec3& position,
                    const Tolerances& tol = default_tolerances());

BuildDelta build_delta(const GeometryDelta& geom, const Pose& pose,
                       const Tolerances& tol = default_tolerances());

// McGill SMG ------------------------------------------------------------------

/// Per-chain configuration of the Schönflies motion generator: revolute axis s
/// through r1 (actuated, base side) and r2 (platform side), parallelogram link
/// directions t1 (actuated) and t2, and u, the normal of the chain plane and
/// axis direction of the parallelogram revolutes.
struct GeometrySMG {
  struct Chain {
    Vec3 s;
    Vec3 r1;
    Vec3 r2;
    Vec3 t1;
    Vec3 t2;
    Vec3 u;
  };
  std::array<Chain, 2> chains;
};

/// Link lengths and base placement used to turn joint values into a
/// GeometrySMG. Chain i rotates by theta_i about `axis` through base_points[i];
/// its links leave at elevation phi_i and psi_i inside the chain plane.
struct SmgParameters {
  std::array<Vec3, 2> base_points;
  double lower_link = 0.5;
  double upper_link = 0.5;
  Vec3 axis = Vec3::UnitZ();
};

struct SmgJoints {
  std::array<double, 2> theta{};
  std::array<double, 2> phi{};
  std::array<double, 2> psi{};
};

GeometrySMG smg_configuration(const SmgParameters& params, const SmgJoints& joints);

/// Which plane supplies the third normal of the two-pair condition.
/// SharedPlane is the plane through both platform revolute points and the
/// common direction of the two torques; ChainAxis1/2 use the revolute axis
/// s_i of that chain through the same two points.
enum class ThirdNormal { SharedPlane, ChainAxis1, ChainAxis2 };

struct BuildSMG {
  GoverningSystem system;           // F11 F12 F21 F22 M1 M2
  std::array<HomogPoint, 9> points; // a..i: lines ab, cb, de, fe, gh, ih
  std::array<Vec3, 3> normals;      // m1, m2, m3 (unnormalized)
  std::vector<JointChain> chains;   // R-Pa-Pa-R per chain
  bool torques_parallel = false;
};

BuildSMG build_smg(const GeometrySMG& geom, ThirdNormal third = ThirdNormal::SharedPlane,
                   const Tolerances& tol = default_tolerances());

// Verne parallel module -------------------------------------------------------

/// Six rods given directly, slider-side and platform-side attachment points
/// (platform points in the platform frame). Legs II and III are
/// parallelograms; leg I rods may be skew.
struct GeometryVerne {
  struct Rod {
    Vec3 slider;
    Vec3 platform;
  };
  std::array<std::array<Rod, 2>, 3> legs;
  std::array<Vec3, 3> guide_directions{Vec3::UnitZ(), Vec3::UnitZ(), Vec3::UnitZ()};
};

struct BuildVerne {
  GoverningSystem system;          // F11 F12 F21 F22 F31 F32
  SixLinePoints points;            // a, c, e, g, i, k slider side; b, d, f, h, j, l platform side
  std::vector<JointChain> chains;  // P-S-S per rod
};

BuildVerne build_verne(const GeometryVerne& geom, const Pose& pose = {},
                       const Tolerances& tol = default_tolerances());

}  // namespace gcs
