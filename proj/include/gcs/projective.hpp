#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "gcs/tolerance.hpp"

namespace gcs {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Point of P^3 in homogeneous coordinates (x, y, z, w).
///
/// Finite points have w != 0, points at infinity have w == 0 and encode a
/// direction. The constructor rejects the zero tuple.
class HomogPoint {
 public:
  explicit HomogPoint(const Vec4& coords);
  HomogPoint(double x, double y, double z, double w) : HomogPoint(Vec4(x, y, z, w)) {}

  const Vec4& coords() const { return coords_; }
  double w() const { return coords_[3]; }
  Vec3 xyz() const { return coords_.head<3>(); }

  bool is_at_infinity(double eps = default_tolerances().geometric) const;

  /// Affine position; only meaningful for finite points.
  Vec3 affine() const { return xyz() / w(); }

  /// w = 1 for finite points. Points at infinity get unit (x,y,z) with the
  /// first nonzero coordinate positive.
  HomogPoint canonical() const;

 private:
  Vec4 coords_;
};

/// Equality up to a nonzero scalar (either sign), compared after normalizing.
bool projectively_equal(const HomogPoint& p, const HomogPoint& q, double eps = 1e-9);

/// Line of P^3 in Plücker coordinates: direction and moment about the origin.
/// Lines at infinity have zero direction.
struct PlueckerLine {
  Vec3 direction;
  Vec3 moment;

  Vec6 coords() const {
    Vec6 c;
    c << direction, moment;
    return c;
  }
  bool is_at_infinity(double eps = default_tolerances().geometric) const;
  /// direction . moment; zero for every line.
  double grassmann_residual() const { return direction.dot(moment); }
  PlueckerLine canonical() const;
};

bool projectively_equal(const PlueckerLine& l, const PlueckerLine& m, double eps = 1e-9);

/// Mutual moment of two lines. Zero iff the lines are coplanar.
double incidence(const PlueckerLine& l, const PlueckerLine& m);

/// Raw (unnormalized) Plücker coordinates of the join of two points:
/// direction = w_p q - w_q p, moment = p x q.
Vec6 join_coordinates(const HomogPoint& p, const HomogPoint& q);

/// Plane of P^3 as the step-3 extensor of its defining points.
struct PlaneExtensor {
  Vec4 coords;                      // (normal, offset): normal . x + offset * w = 0
  std::array<HomogPoint, 3> points;

  Vec3 normal() const { return coords.head<3>(); }
  double offset() const { return coords[3]; }
  bool is_at_infinity(double eps = default_tolerances().geometric) const;
  /// Plane coordinates dotted with a point's coordinates.
  double incidence(const HomogPoint& p) const { return coords.dot(p.coords()); }
};

HomogPoint point_from_affine(const Vec3& p);
HomogPoint point_at_infinity(const Vec3& dir, const Tolerances& tol = default_tolerances());

/// Oriented line from a to b. With b at infinity the direction is b's.
PlueckerLine line_through(const HomogPoint& a, const HomogPoint& b,
                          const Tolerances& tol = default_tolerances());
PlueckerLine line_at_infinity(const Vec3& normal, const Tolerances& tol = default_tolerances());

/// Points at infinity g = n1 x n2, h = n1 x n3, i = n2 x n3. Lines gh, gi and
/// hi then carry the moments n1, n2 and n3. A vanishing cross product leaves
/// its slot empty.
struct MomentInfinityPoints {
  std::array<std::optional<HomogPoint>, 3> points;
  bool degenerate(std::size_t k) const { return !points[k].has_value(); }
};

MomentInfinityPoints infinity_points_of_moment_pair(const Vec3& n1, const Vec3& n2, const Vec3& n3,
                                                    const Tolerances& tol = default_tolerances());

PlaneExtensor plane_from_points(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3,
                                const Tolerances& tol = default_tolerances());

/// Cofactor vector of three points: the plane coordinates before any scaling.
Vec4 plane_coordinates_raw(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3);

/// True if |v| <= eps * scale.
inline bool is_zero_vector(const Vec3& v, double scale, double eps) {
  return v.norm() <= eps * scale;
}

}  // namespace gcs
