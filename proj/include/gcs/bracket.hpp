#pragma once

#include <array>

#include "gcs/projective.hpp"

namespace gcs {

/// Signed determinant of the 4x4 matrix whose columns are the homogeneous
/// coordinates of the four points. Zero iff the points are dependent.
double bracket4(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3,
                const HomogPoint& p4);
double bracket4(const Vec4& p1, const Vec4& p2, const Vec4& p3, const Vec4& p4);

/// Residual of the Grassmann–Plücker exchange identity
///   [e1 e2 e3 e4][f1 f2 f3 f4] - sum_j [fj e2 e3 e4][f1 .. e1 .. f4]
/// where e1 replaces fj in the second bracket. Zero for every input.
double syzygy_residual(const std::array<HomogPoint, 4>& e, const std::array<HomogPoint, 4>& f);

/// Sum of absolute values of the terms of the exchange identity; the natural
/// scale for judging the residual.
double syzygy_scale(const std::array<HomogPoint, 4>& e, const std::array<HomogPoint, 4>& f);

}  // namespace gcs
