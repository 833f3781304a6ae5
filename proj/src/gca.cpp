#include "gcs/gca.hpp"

#include <cmath>

namespace gcs {

double independence_measure(std::span<const HomogPoint> points) {
  const auto k = static_cast<Eigen::Index>(points.size());
  if (k == 0) return 1.0;
  if (k > 4) return 0.0;
  Eigen::Matrix<double, 4, Eigen::Dynamic> m(4, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    m.col(c) = points[static_cast<std::size_t>(c)].coords().normalized();
  }
  // Product of singular values: the square root of the Gram determinant
  // without squaring the rounding error.
  const Eigen::JacobiSVD<Eigen::Matrix<double, 4, Eigen::Dynamic>> svd(m);
  return svd.singularValues().prod();
}

std::optional<Extensor> join(const Extensor& a, const Extensor& b, const Tolerances& tol) {
  if (a.step() + b.step() > 4) {
    throw Error(ErrorCode::StepOverflow, "join of steps " + std::to_string(a.step()) + " and " +
                                             std::to_string(b.step()) + " exceeds 4");
  }
  Extensor out{a.points};
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  if (independence_measure(out.points) <= tol.geometric) return std::nullopt;
  return out;
}

Vec6 MeetLine::coordinates() const {
  Vec6 c = Vec6::Zero();
  for (const auto& t : terms) {
    c += t.weight * join_coordinates(HomogPoint(t.first), HomogPoint(t.second));
  }
  return c;
}

PlueckerLine MeetLine::line() const {
  const Vec6 c = coordinates();
  PlueckerLine l{c.head<3>(), c.tail<3>()};
  return l.canonical();
}

namespace {

// Shuffle of abc into a single point (bracketed with def) and a pair.
// Unchecked: scalar meets treat a vanishing line as a legitimate zero.
MeetLine meet_terms(const PlaneExtensor& a, const PlaneExtensor& b) {
  const Vec4& pa = a.points[0].coords();
  const Vec4& pb = a.points[1].coords();
  const Vec4& pc = a.points[2].coords();
  const Vec4& d = b.points[0].coords();
  const Vec4& e = b.points[1].coords();
  const Vec4& f = b.points[2].coords();
  return MeetLine{{{
      {bracket4(pa, d, e, f), pb, pc},
      {-bracket4(pb, d, e, f), pa, pc},
      {bracket4(pc, d, e, f), pa, pb},
  }}};
}

}  // namespace

MeetLine meet_planes(const PlaneExtensor& a, const PlaneExtensor& b, const Tolerances& tol) {
  MeetLine out = meet_terms(a, b);
  double scale = 0.0;
  for (const auto& t : out.terms) {
    scale += std::abs(t.weight) * t.first.norm() * t.second.norm();
  }
  if (!(out.coordinates().norm() > tol.geometric * scale) || scale == 0.0) {
    throw Error(ErrorCode::DegenerateMeet, "meet of coincident planes");
  }
  return out;
}


double meet_four_planes(const PlaneExtensor& a, const PlaneExtensor& b, const PlaneExtensor& d,
                        const PlaneExtensor& e) {
  const MeetLine l1 = meet_terms(a, b);
  const MeetLine l2 = meet_terms(d, e);
  double sum = 0.0;
  for (const auto& s : l1.terms) {
    for (const auto& t : l2.terms) {
      sum += s.weight * t.weight * bracket4(s.first, s.second, t.first, t.second);
    }
  }
  return sum;
}

double meet_planes_line(const PlaneExtensor& a, const PlaneExtensor& b, const HomogPoint& g,
                        const HomogPoint& h) {
  const auto& [pa, pb, pc] = a.points;
  const auto& [d, e, f] = b.points;
  return bracket4(d, e, f, g) * bracket4(h, pa, pb, pc) -
         bracket4(d, e, f, h) * bracket4(g, pa, pb, pc);
}

std::array<Vec6, 6> SixLinePoints::raw_lines() const {
  std::array<Vec6, 6> rows;
  for (std::size_t k = 0; k < 6; ++k) rows[k] = join_coordinates(points[2 * k], points[2 * k + 1]);
  return rows;
}

namespace {

enum : std::uint8_t { A, B, C, D, E, F, G, H, I, J, K, L };

// Expansion of [ab, cd, ef, gh, ij, kl]. Every term starts with a bracket
// on a, b; the signs are the ones that reproduce the 6x6 determinant of the
// raw Plücker rows exactly.
constexpr std::array<MonomialTerm, 24> kMonomials{{
    {+1, {{{A, B, C, D}, {E, F, G, I}, {H, J, K, L}}}},
    {-1, {{{A, B, C, D}, {E, F, H, I}, {G, J, K, L}}}},
    {-1, {{{A, B, C, D}, {E, F, G, J}, {H, I, K, L}}}},
    {+1, {{{A, B, C, D}, {E, F, H, J}, {G, I, K, L}}}},
    {-1, {{{A, B, C, E}, {D, F, G, H}, {I, J, K, L}}}},
    {+1, {{{A, B, D, E}, {C, F, G, H}, {I, J, K, L}}}},
    {+1, {{{A, B, C, F}, {D, E, G, H}, {I, J, K, L}}}},
    {-1, {{{A, B, D, F}, {C, E, G, H}, {I, J, K, L}}}},
    {+1, {{{A, B, C, E}, {D, G, H, I}, {F, J, K, L}}}},
    {-1, {{{A, B, D, E}, {C, G, H, I}, {F, J, K, L}}}},
    {-1, {{{A, B, C, F}, {D, G, H, I}, {E, J, K, L}}}},
    {-1, {{{A, B, C, E}, {D, G, H, J}, {F, I, K, L}}}},
    {+1, {{{A, B, D, F}, {C, G, H, I}, {E, J, K, L}}}},
    {+1, {{{A, B, D, E}, {C, G, H, J}, {F, I, K, L}}}},
    {-1, {{{A, B, D, F}, {C, G, H, J}, {E, I, K, L}}}},
    {+1, {{{A, B, C, F}, {D, G, H, J}, {E, I, K, L}}}},
    {-1, {{{A, B, C, G}, {D, E, F, I}, {H, J, K, L}}}},
    {+1, {{{A, B, D, G}, {C, E, F, I}, {H, J, K, L}}}},
    {+1, {{{A, B, C, H}, {D, E, F, I}, {G, J, K, L}}}},
    {+1, {{{A, B, C, G}, {D, E, F, J}, {H, I, K, L}}}},
    {-1, {{{A, B, D, H}, {C, E, F, I}, {G, J, K, L}}}},
    {-1, {{{A, B, D, G}, {C, E, F, J}, {H, I, K, L}}}},
    {-1, {{{A, B, C, H}, {D, E, F, J}, {G, I, K, L}}}},
    {+1, {{{A, B, D, H}, {C, E, F, J}, {G, I, K, L}}}},
}};

}  // namespace

std::span<const MonomialTerm> superbracket_monomials() { return kMonomials; }

double superbracket(const SixLinePoints& pts, const Tolerances& tol) {
  return superbracket(pts, kMonomials, tol);
}

double superbracket(const SixLinePoints& pts, std::span<const MonomialTerm> table,
                    const Tolerances& tol) {
  for (std::size_t k = 0; k < 6; ++k) {
    const HomogPoint& p = pts[2 * k];
    const HomogPoint& q = pts[2 * k + 1];
    const double scale = p.coords().norm() * q.coords().norm();
    if (join_coordinates(p, q).norm() <= tol.geometric * scale) {
      throw Error(ErrorCode::DegenerateLine, "line " + std::to_string(k) + " has coincident points");
    }
  }
  double sum = 0.0;
  for (const MonomialTerm& term : table) {
    double prod = term.sign;
    for (const auto& idx : term.brackets) {
      prod *= bracket4(pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]]);
    }
    sum += prod;
  }
  return sum;
}

Mat6 plucker_matrix(std::span<const Vec6, 6> rows) {
  Mat6 m;
  for (int r = 0; r < 6; ++r) m.row(r) = rows[static_cast<std::size_t>(r)].transpose();
  return m;
}

Mat6 row_normalized(const Mat6& m) {
  Mat6 out = m;
  for (int r = 0; r < 6; ++r) {
    const double n = out.row(r).norm();
    if (n > 0.0) out.row(r) /= n;
  }
  return out;
}

double min_singular_value(const Mat6& m) {
  Eigen::JacobiSVD<Mat6> svd(m);
  return svd.singularValues()(5);
}

PlueckerDeterminant plucker_matrix_det(std::span<const Vec6, 6> rows) {
  const Mat6 m = plucker_matrix(rows);
  return {m.determinant(), min_singular_value(row_normalized(m))};
}

PlueckerDeterminant plucker_matrix_det(const std::array<PlueckerLine, 6>& lines) {
  std::array<Vec6, 6> rows;
  for (std::size_t k = 0; k < 6; ++k) rows[k] = lines[k].coords();
  return plucker_matrix_det(rows);
}

}  // namespace gcs
