#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcs/projective.hpp"

namespace gcs {

enum class ScrewKind { Twist, Wrench };
enum class Pitch { Zero, Finite, Infinite };

/// Six-coordinate screw (primal; dual). For a wrench the primal part is the
/// force and the dual the moment about the origin; for a twist the primal part
/// is the angular velocity. A zero-pitch screw [s; r x s] lies on a line, an
/// infinite-pitch screw [0; n] is a pure moment or translation.
struct Screw {
  Vec3 primal;
  Vec3 dual;
  ScrewKind kind;

  Vec6 coords() const {
    Vec6 c;
    c << primal, dual;
    return c;
  }
  Pitch pitch(double eps = 1e-9) const;
  /// The supporting line; a line at infinity for infinite pitch.
  PlueckerLine line() const { return {primal, dual}; }
};

Screw zero_pitch(const Vec3& direction, const Vec3& point, ScrewKind kind);
Screw infinite_pitch(const Vec3& direction, ScrewKind kind);
inline Screw revolute_twist(const Vec3& axis, const Vec3& point) {
  return zero_pitch(axis, point, ScrewKind::Twist);
}
inline Screw prismatic_twist(const Vec3& direction) {
  return infinite_pitch(direction, ScrewKind::Twist);
}
inline Screw force(const Vec3& direction, const Vec3& point) {
  return zero_pitch(direction, point, ScrewKind::Wrench);
}
inline Screw moment(const Vec3& direction) { return infinite_pitch(direction, ScrewKind::Wrench); }

/// Virtual work of wrench w on twist t: t.primal . w.dual + t.dual . w.primal.
/// Throws KindError unless t is a twist and w a wrench.
double reciprocal_product(const Screw& t, const Screw& w);

/// Same pairing with both screws normalized to unit coordinate norm.
double normalized_reciprocal_product(const Screw& t, const Screw& w);

/// Basis of the wrenches reciprocal to every given twist, 6 - rank entries.
std::vector<Screw> reciprocal_system(std::span<const Screw> twists,
                                     const Tolerances& tol = default_tolerances());

/// new[j] = sum_i coeffs(j, i) * system[i]. Throws SingularMixing unless
/// coeffs is square, of matching size and invertible.
std::vector<Screw> basis_exchange(std::span<const Screw> system, const Eigen::MatrixXd& coeffs,
                                  const Tolerances& tol = default_tolerances());

/// Largest residual of projecting each screw of `screws` onto span(basis),
/// relative to the screw's norm.
double span_residual(std::span<const Screw> screws, std::span<const Screw> basis);

// Governing system ------------------------------------------------------------

enum class RowRole { ActuationForce, ConstraintMoment };

/// Where a governing row comes from: the joint chain whose twists it must be
/// reciprocal with, and for actuation rows the one twist it must not be.
struct RowTag {
  RowRole role;
  int chain;                // index into the builder's chain list
  int actuated_twist = -1;  // index within that chain, actuation rows only
  std::string label;        // e.g. "F11", "M2"
};

struct GoverningSystem {
  std::array<Screw, 6> wrenches;
  std::array<RowTag, 6> tags;

  std::array<Vec6, 6> rows() const;
};

/// Serial chain of joint twists. Constraint rows are reciprocal to all of
/// them; an actuation row is reciprocal to all but its actuated twist.
struct JointChain {
  std::string name;
  std::vector<Screw> twists;
  std::vector<bool> actuated;
};

struct ReciprocityCheck {
  double worst_passive = 0.0;        // largest |normalized pairing| that should vanish
  double weakest_actuated = 1e300;   // smallest |normalized pairing| of a row with its actuated twist
};

/// Pairs every governing row with the twists of its tagged chain.
ReciprocityCheck check_reciprocity(const GoverningSystem& system, std::span<const JointChain> chains);

}  // namespace gcs
