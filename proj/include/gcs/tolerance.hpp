#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcs {

enum class ErrorCode {
  InvalidDirection,
  DegenerateLine,
  AllMomentsParallel,
  DegeneratePlane,
  StepOverflow,
  DegenerateMeet,
  KindError,
  SingularMixing,
  Unreachable,
  IKDegenerate,
  DegenerateConstraint,
  InvalidGeometry,
  NotClass3,
  NotSingular,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Numerical thresholds shared by every module.
///
/// All thresholds are relative: a quantity is compared against the threshold
/// times the natural scale of its inputs (product of argument norms).
struct Tolerances {
  // A vector counts as zero when its norm <= geometric * scale.
  double geometric = 1e-12;
  // A scalar condition counts as zero when |value| <= condition * scale.
  double condition = 1e-9;
  // Oracle verdict: min singular value of the row-normalized matrix.
  double singular = 1e-9;
  double near_singular = 1e-6;
  // Singular values below rank * sigma_max span the null space.
  double rank = 1e-10;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace gcs
