#include "gcs/singularity.hpp"

#include <algorithm>
#include <cmath>

namespace gcs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NonSingular: return "non-singular";
    case Verdict::NearSingular: return "near-singular";
    case Verdict::Singular: return "singular";
  }
  return "?";
}

Verdict grade(double measure, double singular_bound, double near_bound) {
  const double m = std::abs(measure);
  if (!(m > singular_bound)) return Verdict::Singular;
  if (!(m > near_bound)) return Verdict::NearSingular;
  return Verdict::NonSingular;
}

OracleResult oracle(std::span<const Vec6, 6> rows, const Tolerances& tol) {
  const PlueckerDeterminant pd = plucker_matrix_det(rows);
  const Verdict v = grade(pd.min_singular_value, tol.singular, tol.near_singular);
  return {pd.det, pd.min_singular_value, v, v == Verdict::Singular};
}

OracleResult oracle(const GoverningSystem& system, const Tolerances& tol) {
  const auto rows = system.rows();
  return oracle(std::span<const Vec6, 6>(rows), tol);
}

namespace {

Vec3 unit_or_zero(const Vec3& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec3(v / n) : Vec3::Zero();
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.cross(b).dot(c); }

bool parallel(const Vec3& a, const Vec3& b, double eps) {
  return unit_or_zero(a).cross(unit_or_zero(b)).norm() <= eps;
}

}  // namespace

// Class I ---------------------------------------------------------------------

Class1Condition class1_condition(const std::array<Vec3, 3>& s, const std::array<Vec3, 3>& n) {
  const double a = triple(unit_or_zero(s[0]), unit_or_zero(s[1]), unit_or_zero(s[2]));
  const double c = triple(unit_or_zero(n[0]), unit_or_zero(n[1]), unit_or_zero(n[2]));
  return {a, c, a * c * c};
}

Verdict class1_verdict(const Class1Condition& c, const Tolerances& tol) {
  return condition_verdict(std::min(std::abs(c.actuation), std::abs(c.constraint)), tol);
}

double class1_superbracket(const std::array<Vec3, 3>& r, const std::array<Vec3, 3>& s,
                           const std::array<Vec3, 3>& n) {
  const auto pts = class1_points(r, s, n);
  if (!pts) return 0.0;
  try {
    return superbracket(*pts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateLine) return 0.0;
    throw;
  }
}

// Class II --------------------------------------------------------------------

SixLinePoints two_pair_lines(const std::array<HomogPoint, 9>& p) {
  return SixLinePoints{{p[0], p[1], p[2], p[1], p[3], p[4], p[5], p[4], p[6], p[7], p[8], p[7]}};
}

double class2_condition(const std::array<Vec3, 3>& normals) {
  return triple(unit_or_zero(normals[0]), unit_or_zero(normals[1]), unit_or_zero(normals[2]));
}

Class2Evaluation class2_condition(const std::array<HomogPoint, 9>& p, const Tolerances& tol) {
  const auto& [a, b, c, d, e, f, g, h, i] = p;
  const std::array<std::array<const HomogPoint*, 3>, 4> triples{{
      {&a, &b, &c}, {&d, &f, &e}, {&b, &e, &h}, {&g, &i, &h}}};
  const auto make = [&](std::size_t k) {
    const auto& t = triples[k];
    return PlaneExtensor{plane_coordinates_raw(*t[0], *t[1], *t[2]), {*t[0], *t[1], *t[2]}};
  };
  const std::array<PlaneExtensor, 4> planes{make(0), make(1), make(2), make(3)};
  bool degenerate = false;
  for (const PlaneExtensor& pl : planes) {
    if (independence_measure(pl.points) <= tol.geometric) degenerate = true;
  }
  const double meet = meet_four_planes(planes[0], planes[1], planes[2], planes[3]);
  double norms = 1.0;
  for (const PlaneExtensor& pl : planes) norms *= pl.coords.norm();
  Class2Evaluation out{.value = 0.0,
                       .meet_four_planes = meet,
                       .meet_normalized = norms > 0.0 ? meet / norms : 0.0,
                       .degenerate_plane = degenerate,
                       .normals = {}};
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec3 m = planes[k].coords.head<3>();
    const double scale = planes[k].coords.norm();
    if (is_zero_vector(m, scale, tol.geometric)) out.degenerate_plane = true;
    out.normals[k] = unit_or_zero(m);
  }
  if (!out.degenerate_plane) out.value = class2_condition(out.normals);
  return out;
}

// Class III -------------------------------------------------------------------

Class3Terms class3_terms(const SixLinePoints& pts, const Tolerances& tol) {
  std::array<Vec3, 12> x;
  for (std::size_t k = 0; k < 12; ++k) {
    if (pts[k].is_at_infinity(tol.geometric)) {
      throw Error(ErrorCode::NotClass3, "every force line needs two finite points");
    }
    x[k] = pts[k].affine();
  }
  const auto& [a, b, c, d, e, f, g, h, i, j, k, l] = x;
  Class3Terms t{};
  t.ab = b - a;
  t.cd = d - c;
  t.ef = f - e;
  t.eg = g - e;
  t.ij = j - i;
  t.ik = k - i;
  const Vec3 gh = h - g;
  const Vec3 kl = l - k;
  if (!parallel(t.ef, gh, tol.condition) || !parallel(t.ij, kl, tol.condition)) {
    throw Error(ErrorCode::NotClass3, "lines ef, gh and ij, kl must be parallel pairs");
  }
  // The bracket expansion weights ef and ij by the lengths of gh and kl.
  const double lambda = gh.dot(t.ef) / t.ef.squaredNorm();
  const double mu = kl.dot(t.ij) / t.ij.squaredNorm();

  t.plane2 = t.ef.cross(t.eg);
  t.plane3 = t.ij.cross(t.ik);
  t.tu = t.plane2.cross(t.plane3);
  t.N = t.ef.cross(t.ij);
  t.u = e;
  t.value = 0.0;
  t.normalized = 0.0;
  if (is_zero_vector(t.tu, t.plane2.norm() * t.plane3.norm(), tol.geometric)) return t;

  Mat3 m;
  m << t.plane2.transpose(), t.plane3.transpose(), t.tu.transpose();
  t.u = m.partialPivLu().solve(Vec3(t.plane2.dot(e), t.plane3.dot(i), 0.0));
  const double raw = t.cd.dot(t.N) * t.tu.dot((b - t.u).cross(t.ab)) -
                     t.ab.dot(t.N) * t.tu.dot((d - t.u).cross(t.cd));
  t.value = lambda * mu * raw;

  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : x) centroid += p / 12.0;
  double spread = 0.0;
  for (const Vec3& p : x) spread = std::max(spread, (p - centroid).norm());
  const double bound = t.ab.norm() * t.cd.norm() * t.ef.norm() * t.ij.norm() * t.plane2.norm() *
                       t.plane3.norm() * spread;
  t.normalized = bound > 0.0 ? raw / bound : 0.0;
  return t;
}

double class3_condition(const SixLinePoints& pts, const Tolerances& tol) {
  return class3_terms(pts, tol).value;
}

// Delta -----------------------------------------------------------------------

double delta_condition(const Vec3& s11, const Vec3& s21, const Vec3& s31, const Vec3& n1,
                       const Vec3& n2, const Vec3& n3) {
  return unit_or_zero(s11).dot(unit_or_zero(s21).cross(unit_or_zero(s31))) *
         unit_or_zero(n2).cross(unit_or_zero(n3)).dot(unit_or_zero(n1));
}

Verdict condition_verdict(double normalized, const Tolerances& tol) {
  return grade(normalized, tol.condition, tol.near_singular);
}

// Classification --------------------------------------------------------------

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::None: return "none";
    case CaseLabel::Class1DegenerateMoment: return "class1:degenerate-moment";
    case CaseLabel::Class1ActuationParallel: return "class1:two-s-parallel";
    case CaseLabel::Class1ActuationCoplanar: return "class1:s-coplanar";
    case CaseLabel::Class1ConstraintParallel: return "class1:two-n-parallel";
    case CaseLabel::Class1ConstraintCoplanar: return "class1:n-coplanar";
    case CaseLabel::Class1Unexplained: return "class1:unexplained";
    case CaseLabel::Class2DegeneratePlane: return "class2:i-degenerate-plane";
    case CaseLabel::Class2ConcurrentPlanes: return "class2:ii-concurrent-planes";
    case CaseLabel::Class2Unexplained: return "class2:unexplained";
    case CaseLabel::Class3CoplanarLegPlanes: return "class3:i-leg-planes-parallel";
    case CaseLabel::Class3ParallelPairs: return "class3:ii-ef-ij-parallel";
    case CaseLabel::Class3DoubleParallelism: return "class3:iii-double-parallelism";
    case CaseLabel::Class3SingularComplex: return "class3:iv-singular-complex";
    case CaseLabel::Class3ParallelCoplanar: return "class3:v-parallel-coplanar";
    case CaseLabel::Class3GeneralComplex: return "class3:vi-general-complex";
  }
  return "?";
}

double classification_eps(Verdict v, const Tolerances& tol) {
  switch (v) {
    case Verdict::Singular: return tol.condition;
    case Verdict::NearSingular: return tol.near_singular;
    case Verdict::NonSingular: break;
  }
  throw Error(ErrorCode::NotSingular, "classification needs a singular verdict");
}

CaseLabel classify_class1(const std::array<Vec3, 3>& s, const std::array<Vec3, 3>& n, Verdict v,
                          const Tolerances& tol) {
  const double eps = classification_eps(v, tol);
  const double nmax = std::max({n[0].norm(), n[1].norm(), n[2].norm()});
  for (const Vec3& x : n) {
    if (!(x.norm() > eps * nmax)) return CaseLabel::Class1DegenerateMoment;
  }
  const auto any_parallel = [eps](const std::array<Vec3, 3>& v3) {
    return parallel(v3[0], v3[1], eps) || parallel(v3[0], v3[2], eps) || parallel(v3[1], v3[2], eps);
  };
  const Class1Condition c = class1_condition(s, n);
  if (any_parallel(s)) return CaseLabel::Class1ActuationParallel;
  if (std::abs(c.actuation) <= eps) return CaseLabel::Class1ActuationCoplanar;
  if (any_parallel(n)) return CaseLabel::Class1ConstraintParallel;
  if (std::abs(c.constraint) <= eps) return CaseLabel::Class1ConstraintCoplanar;
  return CaseLabel::Class1Unexplained;
}

CaseLabel classify_class2(const Class2Evaluation& eval, Verdict v, const Tolerances& tol) {
  const double eps = classification_eps(v, tol);
  if (eval.degenerate_plane) return CaseLabel::Class2DegeneratePlane;
  if (std::abs(eval.value) <= eps) return CaseLabel::Class2ConcurrentPlanes;
  return CaseLabel::Class2Unexplained;
}

CaseLabel classify_class3(const SixLinePoints& pts, Verdict v, const Tolerances& tol) {
  const double eps = classification_eps(v, tol);
  const Class3Terms t = class3_terms(pts, tol);
  if (!(t.tu.norm() > eps * t.plane2.norm() * t.plane3.norm())) return CaseLabel::Class3CoplanarLegPlanes;
  if (parallel(t.ef, t.ij, eps)) return CaseLabel::Class3ParallelPairs;

  const bool ef_cd = parallel(t.ef, t.cd, eps);
  const bool ef_ab = parallel(t.ef, t.ab, eps);
  const bool ij_cd = parallel(t.ij, t.cd, eps);
  const bool ij_ab = parallel(t.ij, t.ab, eps);
  if ((ef_cd && ij_ab) || (ef_ab && ij_cd)) return CaseLabel::Class3DoubleParallelism;

  double spread = 0.0;
  for (std::size_t k = 0; k < 12; ++k) spread = std::max(spread, (pts[k].affine() - t.u).norm());
  const Vec3 tu = t.tu.normalized();
  // Lines through p and q with direction dir meet line tu (through u) when
  // their mutual moment vanishes.
  const auto meets_tu = [&](const Vec3& p, const Vec3& dir) {
    return std::abs((p - t.u).dot(unit_or_zero(dir).cross(tu))) <= eps * std::max(spread, 1e-300);
  };
  const Vec3 a = pts[0].affine();
  const Vec3 c = pts[2].affine();
  const bool ab_tu = meets_tu(a, t.ab);
  const bool cd_tu = meets_tu(c, t.cd);
  if (ab_tu && cd_tu) return CaseLabel::Class3SingularComplex;
  if (((ef_cd || ij_cd) && cd_tu) || ((ij_ab || ef_ab) && ab_tu)) return CaseLabel::Class3ParallelCoplanar;
  return CaseLabel::Class3GeneralComplex;
}

// Hidden cross-checks ---------------------------------------------------------

namespace detail {

double class2_four_monomial(const std::array<HomogPoint, 9>& p) {
  const auto& [a, b, c, d, e, f, g, h, i] = p;
  return bracket4(a, b, c, d) * bracket4(b, f, e, h) * bracket4(e, g, i, h) -
         bracket4(a, b, c, e) * bracket4(b, f, e, h) * bracket4(d, g, i, h) -
         bracket4(a, b, c, f) * bracket4(b, d, e, h) * bracket4(e, g, i, h) +
         bracket4(a, b, c, e) * bracket4(b, d, e, h) * bracket4(f, g, i, h);
}

double class3_bracket_form(const SixLinePoints& pts, const Tolerances& tol) {
  const Class3Terms t = class3_terms(pts, tol);
  if (t.value == 0.0) return 0.0;
  const Vec3 e = pts[4].affine();
  const Vec3 q = e + t.ij;
  const Vec3 r = q + t.cd;
  const Vec3 s = q + t.ab;
  const HomogPoint f = pts[5];
  const HomogPoint ep = point_from_affine(e);
  const HomogPoint qp = point_from_affine(q);
  const HomogPoint tp = point_from_affine(t.u + t.tu);
  const HomogPoint up = point_from_affine(t.u);
  return bracket4(f, ep, qp, point_from_affine(r)) * bracket4(tp, up, pts[1], pts[0]) -
         bracket4(f, ep, qp, point_from_affine(s)) * bracket4(tp, up, pts[3], pts[2]);
}

}  // namespace detail

}  // namespace gcs
