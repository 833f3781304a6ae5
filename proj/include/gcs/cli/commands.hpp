#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "gcs/analysis.hpp"
#include "gcs/cli/config.hpp"

namespace gcs::cli {

/// Exit codes of `check`.
inline constexpr int kExitNonSingular = 0;
inline constexpr int kExitSingular = 10;
inline constexpr int kExitNearSingular = 11;
inline constexpr int kExitError = 2;

int exit_code(Verdict v);

/// Prints the report as "key: value" lines and returns the verdict's exit
/// code; builder errors go to `err` with kExitError.
int cmd_check(const Model& model, const std::map<std::string, double>& pose, const Tolerances& tol,
              std::ostream& out, std::ostream& err);

/// CSV header for a model: pose.*, oracle_det, min_sv, cond.*, verdict, case.
std::string sweep_header(const Model& model);

/// One CSV row per grid pose in grid order, independent of spec.jobs.
/// Poses the builder rejects get verdict "unreachable" and empty numbers.
void cmd_sweep(const Model& model, const SweepSpec& spec, const Tolerances& tol, std::ostream& out);

/// Superbracket proportionality, syzygy and reciprocity batteries. Returns 0
/// when every check passes. `table` replaces the built-in monomial table.
int cmd_selftest(const Tolerances& tol, std::ostream& out,
                 std::span<const MonomialTerm> table = superbracket_monomials());

/// Command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcs::cli
