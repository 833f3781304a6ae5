#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcs/gca.hpp"
#include "gcs/manipulators.hpp"
#include "gcs/screws.hpp"

namespace gcs {

enum class Verdict { NonSingular, NearSingular, Singular };
std::string_view to_string(Verdict v);

/// Grades a nonnegative measure against the singular and near-singular bounds.
Verdict grade(double measure, double singular_bound, double near_bound);

// Oracle ----------------------------------------------------------------------

struct OracleResult {
  double det;                 // of the governing rows as given
  double min_singular_value;  // of the row-normalized matrix
  Verdict verdict;
  bool is_singular;           // min_singular_value <= tol.singular
};

OracleResult oracle(std::span<const Vec6, 6> rows, const Tolerances& tol = default_tolerances());
OracleResult oracle(const GoverningSystem& system, const Tolerances& tol = default_tolerances());

// Class I: three forces, three moments ----------------------------------------

struct Class1Condition {
  double actuation;     // (s1 x s2) . s3
  double constraint;    // (n1 x n2) . n3
  double product_form;  // actuation * constraint^2
};

/// Inputs are normalized first, so the values are dimensionless.
Class1Condition class1_condition(const std::array<Vec3, 3>& s, const std::array<Vec3, 3>& n);

/// Factor-wise grading: singular if either triple product is within tol.condition.
Verdict class1_verdict(const Class1Condition& c, const Tolerances& tol = default_tolerances());

/// Superbracket of the class-I point construction; exactly 0 when the
/// construction degenerates (parallel or coplanar torques).
double class1_superbracket(const std::array<Vec3, 3>& r, const std::array<Vec3, 3>& s,
                           const std::array<Vec3, 3>& n);

// Class II: two force pairs, two moments --------------------------------------

/// Lines of a two-pair configuration from nine points a..i:
/// ab, cb, de, fe, gh, ih.
SixLinePoints two_pair_lines(const std::array<HomogPoint, 9>& p);

/// (m1 x m2) . m3 on normalized normals; 0 if any normal vanishes.
double class2_condition(const std::array<Vec3, 3>& normals);

struct Class2Evaluation {
  double value;              // (m1 x m2) . m3 of planes abc, dfe, beh
  double meet_four_planes;   // (abc ^ dfe) ^ (beh ^ gih)
  double meet_normalized;    // meet over the product of the plane-coordinate norms
  bool degenerate_plane;     // a plane collapsed to a line
  std::array<Vec3, 3> normals;
};

/// Evaluates both the normal form and the four-plane meet from the points.
Class2Evaluation class2_condition(const std::array<HomogPoint, 9>& p,
                                  const Tolerances& tol = default_tolerances());

// Class III: six forces, two parallel pairs -----------------------------------

/// Intermediate vectors of the two-parallel-pair condition, all from the
/// affine parts of a..l.
struct Class3Terms {
  Vec3 ab, cd, ef, eg, ij, ik;
  Vec3 plane2, plane3;  // ef x eg, ij x ik
  Vec3 tu;              // plane2 x plane3
  Vec3 N;               // ef x ij
  Vec3 u;               // point on both leg planes (valid when tu != 0)
  double value;         // scaled so that value == superbracket
  double normalized;    // value over its dimensional bound, in [-1, 1]
};

/// Requires ef || gh and ij || kl; throws NotClass3 otherwise or when a
/// point is at infinity.
Class3Terms class3_terms(const SixLinePoints& pts, const Tolerances& tol = default_tolerances());
double class3_condition(const SixLinePoints& pts, const Tolerances& tol = default_tolerances());

// Delta -----------------------------------------------------------------------

/// [s11 . (s21 x s31)][(n2 x n3) . n1] on normalized inputs.
double delta_condition(const Vec3& s11, const Vec3& s21, const Vec3& s31, const Vec3& n1,
                       const Vec3& n2, const Vec3& n3);

/// Singular iff a dimensionless condition is within tol.condition.
Verdict condition_verdict(double normalized, const Tolerances& tol = default_tolerances());

// Case classification ---------------------------------------------------------

enum class CaseLabel {
  None,
  Class1DegenerateMoment,
  Class1ActuationParallel,
  Class1ActuationCoplanar,
  Class1ConstraintParallel,
  Class1ConstraintCoplanar,
  Class1Unexplained,
  Class2DegeneratePlane,
  Class2ConcurrentPlanes,
  Class2Unexplained,
  Class3CoplanarLegPlanes,    // i
  Class3ParallelPairs,        // ii
  Class3DoubleParallelism,    // iii
  Class3SingularComplex,      // iv
  Class3ParallelCoplanar,     // v
  Class3GeneralComplex,       // vi
};

std::string_view to_string(CaseLabel c);

/// Tolerance used for sub-condition tests at a given verdict.
double classification_eps(Verdict v, const Tolerances& tol);

/// All classifiers throw NotSingular for a NonSingular verdict.
CaseLabel classify_class1(const std::array<Vec3, 3>& s, const std::array<Vec3, 3>& n, Verdict v,
                          const Tolerances& tol = default_tolerances());
CaseLabel classify_class2(const Class2Evaluation& eval, Verdict v,
                          const Tolerances& tol = default_tolerances());
CaseLabel classify_class3(const SixLinePoints& pts, Verdict v,
                          const Tolerances& tol = default_tolerances());

// Report ----------------------------------------------------------------------

using NamedValues = std::vector<std::pair<std::string, double>>;

struct SingularityReport {
  double oracle_det = 0.0;
  double oracle_min_singular_value = 0.0;
  NamedValues condition_values;
  Verdict verdict = Verdict::NonSingular;
  bool is_singular = false;
  CaseLabel case_label = CaseLabel::None;
  NamedValues pose_echo;
};

namespace detail {

/// Four-monomial expansion of [ab, cb, de, fe, gh, ih] before the brackets
/// are collected. Equals -meet_four_planes(abc, dfe, beh, gih).
double class2_four_monomial(const std::array<HomogPoint, 9>& p);

/// Bracket form [feqr][tuba] - [feqs][tudc] with q = e + p, r = q + n,
/// s = q + m and t = u + tu. Equals -class3_terms(...).value when gh and kl
/// have the lengths of ef and ij.
double class3_bracket_form(const SixLinePoints& pts, const Tolerances& tol = default_tolerances());

}  // namespace detail

}  // namespace gcs
