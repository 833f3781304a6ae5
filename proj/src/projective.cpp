#include "gcs/projective.hpp"

#include <cmath>

namespace gcs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDirection: return "InvalidDirection";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::AllMomentsParallel: return "AllMomentsParallel";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::StepOverflow: return "StepOverflow";
    case ErrorCode::DegenerateMeet: return "DegenerateMeet";
    case ErrorCode::KindError: return "KindError";
    case ErrorCode::SingularMixing: return "SingularMixing";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::IKDegenerate: return "IKDegenerate";
    case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::NotClass3: return "NotClass3";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

// Flip the sign so the first coordinate whose magnitude exceeds the
// threshold is positive.
template <typename V>
V first_nonzero_positive(V v, double threshold) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) > threshold) {
      if (v[k] < 0) v = -v;
      break;
    }
  }
  return v;
}

template <typename V>
bool parallel_up_to_sign(const V& a, const V& b, double eps) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return na == nb;
  const V ua = a / na;
  const V ub = b / nb;
  return std::min((ua - ub).norm(), (ua + ub).norm()) <= eps;
}

}  // namespace

HomogPoint::HomogPoint(const Vec4& coords) : coords_(coords) {
  if (coords_.isZero(0.0)) {
    throw Error(ErrorCode::InvalidDirection, "homogeneous point with all coordinates zero");
  }
}

bool HomogPoint::is_at_infinity(double eps) const {
  return std::abs(w()) <= eps * xyz().norm();
}

HomogPoint HomogPoint::canonical() const {
  if (!is_at_infinity()) return HomogPoint(coords_ / w());
  Vec4 c(coords_[0], coords_[1], coords_[2], 0.0);
  c /= c.norm();
  return HomogPoint(first_nonzero_positive(c, 1e-15));
}

bool projectively_equal(const HomogPoint& p, const HomogPoint& q, double eps) {
  return parallel_up_to_sign(p.coords(), q.coords(), eps);
}

bool PlueckerLine::is_at_infinity(double eps) const {
  return direction.norm() <= eps * moment.norm();
}

PlueckerLine PlueckerLine::canonical() const {
  const double scale = is_at_infinity() ? moment.norm() : direction.norm();
  Vec6 c = coords() / scale;
  c = first_nonzero_positive(c, 1e-15);
  return {c.head<3>(), c.tail<3>()};
}

bool projectively_equal(const PlueckerLine& l, const PlueckerLine& m, double eps) {
  return parallel_up_to_sign(l.coords(), m.coords(), eps);
}

double incidence(const PlueckerLine& l, const PlueckerLine& m) {
  return l.direction.dot(m.moment) + l.moment.dot(m.direction);
}

Vec6 join_coordinates(const HomogPoint& p, const HomogPoint& q) {
  Vec6 c;
  c << p.w() * q.xyz() - q.w() * p.xyz(), p.xyz().cross(q.xyz());
  return c;
}

bool PlaneExtensor::is_at_infinity(double eps) const {
  return normal().norm() <= eps * std::abs(offset());
}

HomogPoint point_from_affine(const Vec3& p) { return HomogPoint(p.x(), p.y(), p.z(), 1.0); }

HomogPoint point_at_infinity(const Vec3& dir, const Tolerances& tol) {
  const double n = dir.norm();
  if (!(n > tol.geometric)) {
    throw Error(ErrorCode::InvalidDirection, "point at infinity needs a nonzero direction");
  }
  const Vec3 u = dir / n;
  return HomogPoint(u.x(), u.y(), u.z(), 0.0);
}

PlueckerLine line_through(const HomogPoint& a, const HomogPoint& b, const Tolerances& tol) {
  const Vec6 raw = join_coordinates(a, b);
  const double scale = a.coords().norm() * b.coords().norm();
  PlueckerLine line{raw.head<3>(), raw.tail<3>()};
  if (raw.norm() <= tol.geometric * scale) {
    throw Error(ErrorCode::DegenerateLine, "line through coincident points");
  }
  if (line.direction.norm() > tol.geometric * scale) {
    // Finite line: unit direction, moment re-derived from a finite point so
    // the Plücker condition holds exactly. Same orientation as the raw join.
    line.direction.normalize();
    const Vec3 anchor = a.is_at_infinity() ? b.affine() : a.affine();
    line.moment = anchor.cross(line.direction);
  } else {
    line.direction.setZero();
    line.moment.normalize();
  }
  return line;
}

PlueckerLine line_at_infinity(const Vec3& normal, const Tolerances& tol) {
  const double n = normal.norm();
  if (!(n > tol.geometric)) {
    throw Error(ErrorCode::InvalidDirection, "line at infinity needs a nonzero normal");
  }
  return {Vec3::Zero(), normal / n};
}

MomentInfinityPoints infinity_points_of_moment_pair(const Vec3& n1, const Vec3& n2, const Vec3& n3,
                                                    const Tolerances& tol) {
  const std::array<std::pair<Vec3, double>, 3> crosses{{
      {n1.cross(n2), n1.norm() * n2.norm()},
      {n1.cross(n3), n1.norm() * n3.norm()},
      {n2.cross(n3), n2.norm() * n3.norm()},
  }};
  MomentInfinityPoints out;
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& [v, scale] = crosses[k];
    if (!is_zero_vector(v, scale, tol.geometric) && v.norm() > 0.0) {
      out.points[k] = point_at_infinity(v, Tolerances{.geometric = 0.0});
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::AllMomentsParallel, "all three torque directions are parallel");
  }
  return out;
}

Vec4 plane_coordinates_raw(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3) {
  Eigen::Matrix<double, 4, 3> m;
  m << p1.coords(), p2.coords(), p3.coords();
  // Cofactors along a fourth column, so that coords . p = [p1 p2 p3 p].
  auto minor3 = [&](int skip) {
    Eigen::Matrix3d s;
    for (int r = 0, k = 0; r < 4; ++r) {
      if (r == skip) continue;
      s.row(k++) = m.row(r);
    }
    return s.determinant();
  };
  return Vec4(-minor3(0), minor3(1), -minor3(2), minor3(3));
}

PlaneExtensor plane_from_points(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3,
                                const Tolerances& tol) {
  Vec4 c = plane_coordinates_raw(p1, p2, p3);
  const double scale = p1.coords().norm() * p2.coords().norm() * p3.coords().norm();
  if (c.norm() <= tol.geometric * scale) {
    throw Error(ErrorCode::DegeneratePlane, "plane through collinear points");
  }
  const double n = c.head<3>().norm();
  c /= (n > tol.geometric * c.norm()) ? n : std::abs(c[3]);
  c = first_nonzero_positive(c, 1e-15);
  return PlaneExtensor{c, {p1, p2, p3}};
}

}  // namespace gcs
