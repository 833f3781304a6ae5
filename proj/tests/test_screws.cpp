#include <doctest.h>

#include <cmath>

#include "gcs/screws.hpp"
#include "support/samplers.hpp"

using namespace gcs;
using gcs::testing::Sampler;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ConfigError;
}

}  // namespace

TEST_CASE("screw constructors") {
  const Screw f = force({0, 0, 2}, {1, 0, 0});
  CHECK((f.primal - Vec3(0, 0, 1)).norm() < 1e-15);
  CHECK((f.dual - Vec3(0, -1, 0)).norm() < 1e-15);
  CHECK(f.kind == ScrewKind::Wrench);
  CHECK(f.pitch() == Pitch::Zero);

  const Screw m = moment({3, 0, 0});
  CHECK(m.primal.norm() == 0.0);
  CHECK((m.dual - Vec3(1, 0, 0)).norm() < 1e-15);
  CHECK(m.pitch() == Pitch::Infinite);
  CHECK(m.line().is_at_infinity());

  const Screw helix{Vec3(0, 0, 1), Vec3(0, 0, 0.5), ScrewKind::Twist};
  CHECK(helix.pitch() == Pitch::Finite);
  CHECK(revolute_twist({0, 0, 1}, {0, 0, 0}).kind == ScrewKind::Twist);
}

TEST_CASE("reciprocal product of joints and wrenches") {
  const Screw rz = revolute_twist({0, 0, 1}, {0, 0, 0});
  // a force meeting or parallel to the axis does no work
  CHECK(reciprocal_product(rz, force({0, 0, 1}, {1, 0, 0})) == doctest::Approx(0.0));
  CHECK(reciprocal_product(rz, force({1, 0, 0}, {0, 0, 1})) == doctest::Approx(0.0));
  // unit offset, perpendicular: magnitude 1
  CHECK(reciprocal_product(rz, force({1, 0, 0}, {0, 1, 0})) == doctest::Approx(-1.0));
  // moments do no work on translations
  CHECK(reciprocal_product(prismatic_twist({0, 0, 1}), moment({0, 0, 1})) == doctest::Approx(0.0));
  CHECK(reciprocal_product(prismatic_twist({0, 0, 1}), force({0, 0, 1}, {4, 5, 6})) == doctest::Approx(1.0));
  CHECK(reciprocal_product(rz, moment({0, 0, 1})) == doctest::Approx(1.0));
  CHECK(reciprocal_product(rz, moment({1, 0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("reciprocal product checks screw kinds") {
  const Screw f = force({1, 0, 0}, {0, 0, 0});
  const Screw t = revolute_twist({1, 0, 0}, {0, 0, 0});
  CHECK(code_of([&] { reciprocal_product(f, f); }) == ErrorCode::KindError);
  CHECK(code_of([&] { reciprocal_product(t, t); }) == ErrorCode::KindError);
  CHECK(code_of([&] { reciprocal_product(f, t); }) == ErrorCode::KindError);
}

TEST_CASE("normalized pairing is scale free") {
  const Screw t{Vec3(0, 0, 3), Vec3(0, 0, 0), ScrewKind::Twist};
  const Screw w{Vec3(2, 0, 0), Vec3(0, 0, -2), ScrewKind::Wrench};
  CHECK(normalized_reciprocal_product(t, w) == doctest::Approx(-1.0 / std::sqrt(2.0)));
}

TEST_CASE("UPU leg constraint systems") {
  const Vec3 A(0, 0, 0), B(0, 0, 1), a1(1, 0, 0), a2(0, 1, 0), s(0, 0, 1);
  const std::vector<Screw> leg{revolute_twist(a1, A), revolute_twist(a2, A), prismatic_twist(s),
                               revolute_twist(a2, B), revolute_twist(a1, B)};
  const auto w = reciprocal_system(leg);
  REQUIRE(w.size() == 1);
  const std::vector<Screw> expected{moment(a1.cross(a2))};
  CHECK(span_residual(expected, w) < 1e-12);
  CHECK(span_residual(w, expected) < 1e-12);

  // Locking the prismatic joint adds the force along the leg.
  const std::vector<Screw> locked{leg[0], leg[1], leg[3], leg[4]};
  const auto w2 = reciprocal_system(locked);
  REQUIRE(w2.size() == 2);
  const std::vector<Screw> expected2{force(s, A), moment(a1.cross(a2))};
  CHECK(span_residual(expected2, w2) < 1e-12);
  CHECK(span_residual(w2, expected2) < 1e-12);
}

TEST_CASE("reciprocal system dimensions") {
  const std::vector<Screw> one{revolute_twist({0, 0, 1}, {1, 2, 3})};
  const auto w = reciprocal_system(one);
  CHECK(w.size() == 5);
  for (const auto& x : w) {
    CHECK(x.kind == ScrewKind::Wrench);
    CHECK(std::abs(reciprocal_product(one[0], x)) < 1e-12);
  }
  CHECK(reciprocal_system(std::vector<Screw>{}).size() == 6);

  Sampler s(31);
  std::vector<Screw> six;
  for (int k = 0; k < 6; ++k) six.push_back(revolute_twist(s.unit3(), s.vec3()));
  CHECK(reciprocal_system(six).empty());

  const std::vector<Screw> wrenches{force({1, 0, 0}, {0, 0, 0})};
  CHECK(code_of([&] { reciprocal_system(wrenches); }) == ErrorCode::KindError);
}

TEST_CASE("reciprocal systems of random chains") {
  Sampler s(32);
  for (int n = 0; n < 100; ++n) {
    const int k = s.integer(1, 5);
    std::vector<Screw> chain;
    for (int j = 0; j < k; ++j) {
      chain.push_back(s.integer(0, 3) == 0 ? prismatic_twist(s.unit3()) : revolute_twist(s.unit3(), s.vec3()));
    }
    const auto w = reciprocal_system(chain);
    CHECK(w.size() == static_cast<std::size_t>(6 - k));
    for (const auto& t : chain) {
      for (const auto& x : w) CHECK(std::abs(normalized_reciprocal_product(t, x)) < 1e-10);
    }
  }
}

TEST_CASE("basis exchange") {
  const std::vector<Screw> pair{force({0, 0, 1}, {0, 0, 0}), force({0, 0, 1}, {1, 0, 0})};
  const auto same = basis_exchange(pair, Eigen::MatrixXd::Identity(2, 2));
  REQUIRE(same.size() == 2);
  CHECK((same[1].coords() - pair[1].coords()).norm() == 0.0);

  Eigen::MatrixXd mix(2, 2);
  mix << 1, 0, 1, -1;
  const auto ex = basis_exchange(pair, mix);
  CHECK((ex[0].coords() - pair[0].coords()).norm() < 1e-15);
  // difference of parallel forces: a pure moment along x cross z
  CHECK(ex[1].primal.norm() < 1e-15);
  CHECK((ex[1].dual - Vec3(0, 1, 0)).norm() < 1e-15);
  CHECK(ex[1].kind == ScrewKind::Wrench);

  Eigen::MatrixXd zero_row(2, 2);
  zero_row << 1, 0, 0, 0;
  CHECK(code_of([&] { basis_exchange(pair, zero_row); }) == ErrorCode::SingularMixing);
  CHECK(code_of([&] { basis_exchange(pair, Eigen::MatrixXd::Identity(3, 3)); }) == ErrorCode::SingularMixing);
}

TEST_CASE("reciprocity of a tagged system") {
  const Vec3 A(0, 0, 0), B(0, 0, 1), a1(1, 0, 0), a2(0, 1, 0), s(0, 0, 1);
  const JointChain leg{"leg", {revolute_twist(a1, A), revolute_twist(a2, A), prismatic_twist(s),
                               revolute_twist(a2, B), revolute_twist(a1, B)},
                       {false, false, true, false, false}};
  GoverningSystem sys{
      {force(s, A), moment(a1.cross(a2)), force(s, A), moment(a1.cross(a2)), force(s, A), moment(a1.cross(a2))},
      {RowTag{RowRole::ActuationForce, 0, 2, "F1"}, RowTag{RowRole::ConstraintMoment, 0, -1, "M1"},
       RowTag{RowRole::ActuationForce, 0, 2, "F2"}, RowTag{RowRole::ConstraintMoment, 0, -1, "M2"},
       RowTag{RowRole::ActuationForce, 0, 2, "F3"}, RowTag{RowRole::ConstraintMoment, 0, -1, "M3"}}};
  const std::vector<JointChain> chains{leg};
  const auto r = check_reciprocity(sys, chains);
  CHECK(r.worst_passive < 1e-15);
  CHECK(r.weakest_actuated == doctest::Approx(1.0));
}
