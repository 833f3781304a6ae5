#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcs/bracket.hpp"
#include "gcs/projective.hpp"

namespace gcs {

using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Join of `step` independent points: point (1), line (2), plane (3) or the
/// whole space (4).
struct Extensor {
  std::vector<HomogPoint> points;

  int step() const { return static_cast<int>(points.size()); }
};

/// Norm of the wedge of the points relative to the product of their norms,
/// i.e. the volume of the normalized parallelotope. In [0, 1].
double independence_measure(std::span<const HomogPoint> points);

/// Join A v B. Returns nullopt for the zero extensor (dependent points).
std::optional<Extensor> join(const Extensor& a, const Extensor& b,
                             const Tolerances& tol = default_tolerances());

/// Step-2 extensor written as a weighted sum of point pairs, the shape every
/// plane-plane meet takes before it is collapsed to line coordinates.
struct MeetLine {
  struct Term {
    double weight;
    Vec4 first;
    Vec4 second;
  };
  std::array<Term, 3> terms;

  /// Sum of the weighted raw joins.
  Vec6 coordinates() const;
  PlueckerLine line() const;
};

/// Intersection line of two planes; a line at infinity for parallel planes.
/// Throws DegenerateMeet for coincident planes.
MeetLine meet_planes(const PlaneExtensor& a, const PlaneExtensor& b,
                     const Tolerances& tol = default_tolerances());

/// (A ^ B) ^ (D ^ E): zero iff the four planes share a projective point.
double meet_four_planes(const PlaneExtensor& a, const PlaneExtensor& b, const PlaneExtensor& d,
                        const PlaneExtensor& e);

/// (A ^ B) ^ gh = [d e f g][h a b c] - [d e f h][g a b c] with A = abc and
/// B = def. Zero iff line gh meets the intersection line of A and B.
double meet_planes_line(const PlaneExtensor& a, const PlaneExtensor& b, const HomogPoint& g,
                        const HomogPoint& h);

/// Twelve points a..l, two per line: (a,b), (c,d), (e,f), (g,h), (i,j), (k,l).
struct SixLinePoints {
  std::array<HomogPoint, 12> points;

  const HomogPoint& operator[](std::size_t k) const { return points[k]; }
  std::array<Vec6, 6> raw_lines() const;
};

/// One product of three brackets over the letters a..l (indices 0..11).
struct MonomialTerm {
  int sign;
  std::array<std::array<std::uint8_t, 4>, 3> brackets;
};

/// The 24-term bracket expansion of the superbracket [ab, cd, ef, gh, ij, kl].
std::span<const MonomialTerm> superbracket_monomials();

/// Superbracket via the monomial expansion. With the built-in table this
/// equals the 6x6 determinant of the raw Plücker rows of the six joins.
double superbracket(const SixLinePoints& pts, const Tolerances& tol = default_tolerances());
double superbracket(const SixLinePoints& pts, std::span<const MonomialTerm> table,
                    const Tolerances& tol = default_tolerances());

/// Input-independent ratio superbracket / plucker_matrix_det for the
/// built-in table and the join_coordinates convention.
inline constexpr double kSuperbracketToDeterminant = 1.0;

struct PlueckerDeterminant {
  double det;                        // of the rows as given
  double min_singular_value;         // of the row-normalized matrix
};

Mat6 plucker_matrix(std::span<const Vec6, 6> rows);
PlueckerDeterminant plucker_matrix_det(std::span<const Vec6, 6> rows);
PlueckerDeterminant plucker_matrix_det(const std::array<PlueckerLine, 6>& lines);

/// Each row scaled to unit norm; zero rows stay zero.
Mat6 row_normalized(const Mat6& m);
double min_singular_value(const Mat6& m);

}  // namespace gcs
