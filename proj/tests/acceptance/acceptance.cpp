// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <Eigen/Geometry>

#include "gcs/cli/commands.hpp"
#include "support/samplers.hpp"

using namespace gcs;
using gcs::testing::Sampler;

namespace {

// Pinned tolerances.
constexpr double kRatioTolerance = 1e-9;       // criteria 1 and 5
constexpr double kDetFloor = 1e-6;             // samples below are excluded from ratios
constexpr double kAntisymmetryTolerance = 1e-12;
constexpr double kSyzygyTolerance = 1e-9;
constexpr double kSingularBound = 1e-9;        // zero side of every measure
constexpr double kNearBound = 1e-6;            // (kSingularBound, kNearBound] is the ambiguity band
constexpr double kPassiveBound = 1e-10;
constexpr double kActuatedBound = 1e-3;

constexpr double kTime1 = 5.0;
constexpr double kTime2 = 2.0;
constexpr double kTime3 = 5.0;
constexpr double kTime8 = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

enum class Side { Zero, NonZero, Band };

Side side(double measure) {
  const double m = std::abs(measure);
  if (m <= kSingularBound) return Side::Zero;
  if (m > kNearBound) return Side::NonZero;
  return Side::Band;
}

// Superbracket over the Hadamard bound of its raw rows, in [-1, 1].
double normalized_superbracket(const SixLinePoints& pts, double sb) {
  double bound = 1.0;
  for (const Vec6& r : pts.raw_lines()) bound *= r.norm();
  return bound > 0.0 ? sb / bound : 0.0;
}

double oracle_msv(const GoverningSystem& sys) { return oracle(sys).min_singular_value; }

std::string fmt(double v) { return cli::format_number(v); }

// 1 -----------------------------------------------------------------------------

void criterion1() {
  const auto t0 = Clock::now();
  Sampler s(1001);
  std::vector<double> ratios;
  for (int n = 0; n < 1000; ++n) {
    const SixLinePoints pts{s.twelve_points()};
    const double det = plucker_matrix_det(pts.raw_lines()).det;
    if (std::abs(det) < kDetFloor) continue;
    ratios.push_back(superbracket(pts) / det);
  }
  const double t = seconds_since(t0);
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const double mid = sorted[sorted.size() / 2];
  double worst = 0.0;
  for (double r : ratios) worst = std::max(worst, std::abs(r - mid) / std::abs(mid));
  const double vs_const = std::abs(mid - kSuperbracketToDeterminant);
  std::ostringstream d;
  d << ratios.size() << " samples, ratio " << fmt(mid) << ", max relative spread " << fmt(worst) << ", "
    << fmt(t) << " s";
  report(1, "superbracket correctness",
         !ratios.empty() && worst <= kRatioTolerance && vs_const <= kRatioTolerance && t < kTime1, d.str());
}

// 2 -----------------------------------------------------------------------------

int permutation_sign(const std::array<int, 4>& p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) sign = -sign;
    }
  }
  return sign;
}

void criterion2() {
  const auto t0 = Clock::now();
  Sampler s(1002);
  double worst_vanish = 0.0, worst_anti = 0.0, worst_syz = 0.0;
  int perms = 0;
  for (int n = 0; n < 100; ++n) {
    const std::array<HomogPoint, 4> p{s.point(), s.point(), s.point(), s.point()};
    const double base = bracket4(p[0], p[1], p[2], p[3]);
    double scale = 1.0;
    for (const auto& q : p) scale *= q.coords().norm();
    // repeated point, and a point in the span of the other three
    const HomogPoint dep(0.3 * p[0].coords() - 1.2 * p[1].coords() + 0.7 * p[2].coords());
    worst_vanish = std::max({worst_vanish, std::abs(bracket4(p[0], p[1], p[0], p[3])) / scale,
                             std::abs(bracket4(p[0], p[1], p[2], dep)) / (scale / p[3].coords().norm() *
                                                                         dep.coords().norm())});
    std::array<int, 4> idx{0, 1, 2, 3};
    while (std::next_permutation(idx.begin(), idx.end())) {
      ++perms;
      const double v = bracket4(p[static_cast<std::size_t>(idx[0])], p[static_cast<std::size_t>(idx[1])],
                                p[static_cast<std::size_t>(idx[2])], p[static_cast<std::size_t>(idx[3])]);
      worst_anti = std::max(worst_anti, std::abs(v - permutation_sign(idx) * base) / scale);
    }
  }
  for (int n = 0; n < 1000; ++n) {
    const std::array<HomogPoint, 4> e{s.point(), s.point(), s.point(), s.point()};
    const std::array<HomogPoint, 4> f{s.point(), s.point(), s.point(), s.point()};
    worst_syz = std::max(worst_syz, std::abs(syzygy_residual(e, f)) / syzygy_scale(e, f));
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << "vanishing " << fmt(worst_vanish) << ", antisymmetry over " << perms << " permutations "
    << fmt(worst_anti) << ", syzygy over 1000 sets " << fmt(worst_syz) << ", " << fmt(t) << " s";
  report(2, "bracket-ring identities",
         perms == 2300 && worst_vanish <= kAntisymmetryTolerance && worst_anti <= kAntisymmetryTolerance &&
             worst_syz <= kSyzygyTolerance && t < kTime2,
         d.str());
}

// 3 -----------------------------------------------------------------------------

void criterion3() {
  const auto t0 = Clock::now();
  Sampler s(1003);
  int agree = 0, singular = 0, resampled = 0, kept = 0;
  while (kept < 1000) {
    std::array<Vec3, 3> r{s.vec3(), s.vec3(), s.vec3()};
    std::array<Vec3, 3> d{s.unit3(), s.unit3(), s.unit3()};
    std::array<Vec3, 3> m{s.unit3(), s.unit3(), s.unit3()};
    switch (kept % 6) {
      case 1: d[1] = d[0]; break;
      case 2: d[2] = (s.normal() * d[0] + s.normal() * d[1]).normalized(); break;
      case 3: m[2] = m[1]; break;
      case 4: m[2] = (s.normal() * m[0] + s.normal() * m[1]).normalized(); break;
      default: break;
    }
    GoverningSystem sys;
    for (std::size_t k = 0; k < 3; ++k) {
      sys.wrenches[k] = force(d[k], r[k]);
      sys.wrenches[k + 3] = moment(m[k]);
    }
    const Class1Condition c = class1_condition(d, m);
    const Side product = side(std::min(std::abs(c.actuation), std::abs(c.constraint)));
    const auto pts = class1_points(r, d, m);
    const Side bracket = pts ? side(normalized_superbracket(*pts, class1_superbracket(r, d, m))) : Side::Zero;
    const Side orc = side(oracle_msv(sys));
    if (product == Side::Band || bracket == Side::Band || orc == Side::Band) {
      ++resampled;
      continue;
    }
    ++kept;
    if (orc == Side::Zero) ++singular;
    if (product == orc && bracket == orc) ++agree;
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << kept << " agree (" << singular << " singular, " << resampled << " resampled from the band), "
    << fmt(t) << " s";
  report(3, "class I equivalence", agree == kept && singular > 0 && singular < kept && t < kTime3, d.str());
}

// 4 -----------------------------------------------------------------------------

void criterion4() {
  const auto t0 = Clock::now();
  Sampler s(1004);
  int agree = 0, singular = 0, resampled = 0, kept = 0;
  while (kept < 1000) {
    const SmgParameters prm = gcs::testing::random_smg_parameters(s);
    SmgJoints j = gcs::testing::random_smg_joints(s);
    if (kept % 10 == 0) j.theta[1] = j.theta[0];
    const BuildSMG b = build_smg(smg_configuration(prm, j));
    const Class2Evaluation e = class2_condition(b.points);
    const Side eq18 = e.degenerate_plane ? Side::Zero : side(class2_condition(b.normals));
    const Side eq9 = e.degenerate_plane ? Side::Zero : side(e.meet_normalized);
    const Side orc = side(oracle_msv(b.system));
    if (eq18 == Side::Band || eq9 == Side::Band || orc == Side::Band) {
      ++resampled;
      continue;
    }
    ++kept;
    if (orc == Side::Zero) ++singular;
    if (eq18 == orc && eq9 == orc) ++agree;
  }

  // Horizontal upper links make the two force planes parallel.
  int flagged = 0;
  const int constructed = 200;
  for (int n = 0; n < constructed; ++n) {
    SmgJoints j = gcs::testing::random_smg_joints(s);
    j.psi = {0.0, 0.0};
    const BuildSMG b = build_smg(smg_configuration(gcs::testing::random_smg_parameters(s), j));
    const Class2Evaluation e = class2_condition(b.points);
    const bool parallel = b.normals[0].normalized().cross(b.normals[1].normalized()).norm() <= kSingularBound;
    if (parallel && side(class2_condition(b.normals)) == Side::Zero && side(e.meet_normalized) == Side::Zero &&
        side(oracle_msv(b.system)) == Side::Zero) {
      ++flagged;
    }
  }
  std::ostringstream d;
  d << agree << "/" << kept << " agree (" << singular << " singular, " << resampled << " resampled), "
    << flagged << "/" << constructed << " parallel-plane builds flagged, " << fmt(seconds_since(t0)) << " s";
  report(4, "class II equivalence", agree == kept && singular > 0 && flagged == constructed, d.str());
}

// 5 -----------------------------------------------------------------------------

void criterion5() {
  const auto t0 = Clock::now();
  Sampler s(1005);
  std::vector<double> ratios;
  for (int n = 0; n < 1000; ++n) {
    const SixLinePoints pts = gcs::testing::random_class3(s);
    const double det = plucker_matrix_det(pts.raw_lines()).det;
    if (std::abs(det) < kDetFloor) continue;
    ratios.push_back(class3_condition(pts) / superbracket(pts));
  }
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const double mid = sorted[sorted.size() / 2];
  double spread = 0.0;
  for (double r : ratios) spread = std::max(spread, std::abs(r - mid) / std::abs(mid));

  // constructed cases i (leg planes parallel) and ii (ef || ij)
  int flagged_i = 0, flagged_ii = 0;
  const int constructed = 200;
  for (int n = 0; n < constructed; ++n) {
    const SixLinePoints base = gcs::testing::random_class3(s);
    std::array<HomogPoint, 12> p = base.points;
    const Vec3 e = base[4].affine(), f = base[5].affine(), g = base[6].affine();
    const Vec3 i0 = s.vec3();
    p[8] = point_from_affine(i0);
    p[9] = point_from_affine(i0 + s.uniform(0.5, 2.0) * (f - e));
    p[10] = point_from_affine(i0 + s.normal() * (f - e) + s.uniform(0.5, 2.0) * (g - e));
    p[11] = point_from_affine(p[10].affine() + s.uniform(0.5, 2.0) * (f - e));
    const SixLinePoints case_i{p};
    const Class3Terms ti = class3_terms(case_i);
    const auto rows_i = case_i.raw_lines();
    if (side(ti.normalized) == Side::Zero && side(oracle(rows_i).min_singular_value) == Side::Zero &&
        classify_class3(case_i, Verdict::Singular) == CaseLabel::Class3CoplanarLegPlanes) {
      ++flagged_i;
    }

    std::array<HomogPoint, 12> q = base.points;
    const Vec3 i = base[8].affine(), k = base[10].affine();
    q[9] = point_from_affine(i + s.uniform(0.5, 2.0) * (f - e));
    q[11] = point_from_affine(k + s.uniform(0.5, 2.0) * (f - e));
    const SixLinePoints case_ii{q};
    const Class3Terms tii = class3_terms(case_ii);
    const auto rows_ii = case_ii.raw_lines();
    if (side(tii.normalized) == Side::Zero && side(oracle(rows_ii).min_singular_value) == Side::Zero &&
        classify_class3(case_ii, Verdict::Singular) == CaseLabel::Class3ParallelPairs) {
      ++flagged_ii;
    }
  }

  // Verne preset sweep across the parallel-plane surface y = 0
  cli::SweepSpec spec;
  spec.axes = {cli::parse_grid_axis("y=-0.2:0.2:5"), cli::parse_grid_axis("z=0.8:1.2:3")};
  std::ostringstream csv;
  cli::cmd_sweep(preset("verne-default"), spec, default_tolerances(), csv);
  int sing = 0, nonsing = 0;
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.find(",singular,") != std::string::npos) ++sing;
    if (line.find(",non-singular,") != std::string::npos) ++nonsing;
  }
  std::ostringstream d;
  d << ratios.size() << " samples, ratio " << fmt(mid) << ", spread " << fmt(spread) << "; case i " << flagged_i
    << "/" << constructed << ", case ii " << flagged_ii << "/" << constructed << "; Verne sweep " << sing
    << " singular, " << nonsing << " non-singular rows, " << fmt(seconds_since(t0)) << " s";
  report(5, "class III equivalence",
         !ratios.empty() && spread <= kRatioTolerance && flagged_i == constructed && flagged_ii == constructed &&
             sing > 0 && nonsing > 0,
         d.str());
}

// 6 -----------------------------------------------------------------------------

void criterion6() {
  const auto t0 = Clock::now();
  Sampler s(1006);
  const auto g = std::get<GeometryDelta>(preset("delta-sym").geometry);
  int agree = 0, singular = 0, resampled = 0, kept = 0;
  while (kept < 500) {
    Vec3 p = gcs::testing::random_delta_position(s, g);
    if (kept % 5 == 0) p.z() = -0.3;  // the preset's singular plane
    std::optional<BuildDelta> b;
    try {
      b.emplace(build_delta(g, {p, Mat3::Identity()}));
    } catch (const Error&) {
      ++resampled;
      continue;
    }
    const auto& sd = b->directions;
    const auto& n = b->torques;
    const Side delta = side(delta_condition(sd[0], sd[1], sd[2], n[0], n[1], n[2]));
    const Class1Condition c = class1_condition(sd, n);
    const Side c1 = side(std::min(std::abs(c.actuation), std::abs(c.constraint)));
    const Side c3 = side(class3_terms(b->six_force_points).normalized);
    const Side orc = side(oracle_msv(b->six_force));
    if (delta == Side::Band || c1 == Side::Band || c3 == Side::Band || orc == Side::Band) {
      ++resampled;
      continue;
    }
    ++kept;
    if (orc == Side::Zero) ++singular;
    if (delta == orc && c1 == orc && c3 == orc) ++agree;
  }
  std::ostringstream d;
  d << agree << "/" << kept << " poses with identical verdicts (" << singular << " singular, " << resampled
    << " resampled), " << fmt(seconds_since(t0)) << " s";
  report(6, "Delta consistency", agree == kept && singular > 0 && singular < kept, d.str());
}

// 7 -----------------------------------------------------------------------------

void criterion7() {
  const auto t0 = Clock::now();
  Sampler s(1007);
  struct Tally {
    double passive = 0.0;
    double actuated = 1e300;
    int poses = 0;
    void add(const ReciprocityCheck& r) {
      passive = std::max(passive, r.worst_passive);
      actuated = std::min(actuated, r.weakest_actuated);
    }
  };
  std::array<Tally, 4> tally;
  while (tally[0].poses < 200) {
    try {
      const Build3UPU b =
          build_3upu(gcs::testing::random_3upu(s), {gcs::testing::random_upu_position(s), Mat3::Identity()});
      tally[0].add(check_reciprocity(b.system, b.chains));
      ++tally[0].poses;
    } catch (const Error&) {
    }
  }
  const auto dg = std::get<GeometryDelta>(preset("delta-sym").geometry);
  for (; tally[1].poses < 200; ++tally[1].poses) {
    const BuildDelta b = build_delta(dg, {gcs::testing::random_delta_position(s, dg), Mat3::Identity()});
    tally[1].add(check_reciprocity(b.six_force, b.chains));
    tally[1].add(check_reciprocity(b.exchanged, b.chains));
  }
  for (; tally[2].poses < 200; ++tally[2].poses) {
    const BuildSMG b =
        build_smg(smg_configuration(gcs::testing::random_smg_parameters(s), gcs::testing::random_smg_joints(s)));
    tally[2].add(check_reciprocity(b.system, b.chains));
  }
  for (; tally[3].poses < 200; ++tally[3].poses) {
    const Pose pose{Vec3(s.uniform(-0.1, 0.1), s.uniform(0.1, 0.4), s.uniform(0.5, 1.5)),
                    Eigen::AngleAxisd(s.uniform(-0.2, 0.2), Vec3::UnitZ()).toRotationMatrix()};
    const BuildVerne b = build_verne(gcs::testing::random_verne(s), pose);
    tally[3].add(check_reciprocity(b.system, b.chains));
  }
  bool ok = true;
  std::ostringstream d;
  const char* names[] = {"3upu", "delta", "smg", "verne"};
  for (std::size_t k = 0; k < 4; ++k) {
    ok = ok && tally[k].poses == 200 && tally[k].passive <= kPassiveBound && tally[k].actuated > kActuatedBound;
    d << names[k] << " passive " << fmt(tally[k].passive) << " actuated " << fmt(tally[k].actuated) << "; ";
  }
  d << fmt(seconds_since(t0)) << " s";
  report(7, "reciprocity", ok, d.str());
}

// 8 -----------------------------------------------------------------------------

void criterion8() {
  const auto t0 = Clock::now();
  const Model m = preset("delta-sym");
  std::vector<std::string> outputs;
  for (const int jobs : {1, 4, 8}) {
    cli::SweepSpec spec;
    spec.axes = {cli::parse_grid_axis("x=-0.2:0.2:21"), cli::parse_grid_axis("y=-0.2:0.2:21"),
                 cli::parse_grid_axis("z=-0.4:0:21")};
    spec.jobs = jobs;
    std::ostringstream out;
    cli::cmd_sweep(m, spec, default_tolerances(), out);
    outputs.push_back(out.str());
  }
  const double t = seconds_since(t0);
  const bool identical = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  const auto rows = std::count(outputs[0].begin(), outputs[0].end(), '\n') - 1;
  const bool crosses = outputs[0].find(",singular,") != std::string::npos ||
                       outputs[0].find(",near-singular,") != std::string::npos;
  std::ostringstream d;
  d << rows << " rows, outputs " << (identical ? "byte-identical" : "DIFFER") << " for jobs 1, 4, 8, "
    << (crosses ? "grid crosses the singular surface" : "no singular row") << ", " << fmt(t) << " s";
  report(8, "sweep determinism", identical && rows == 21 * 21 * 21 && crosses && t < kTime8, d.str());
}

}  // namespace

int main() {
  const std::array<std::function<void()>, 8> criteria{criterion1, criterion2, criterion3, criterion4,
                                                      criterion5, criterion6, criterion7, criterion8};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      report(static_cast<int>(k + 1), "aborted", false, e.what());
    }
  }
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
