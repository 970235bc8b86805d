#include <doctest.h>

#include "liegauge/catalog.hpp"
#include "liegauge/matrix.hpp"

using namespace liegauge;

namespace {
TrigScalar ts(const char* text) { return TrigScalar::parse(text); }
}  // namespace

TEST_CASE("generator trace normalizations") {
  const auto& fx = fixtures();
  for (const auto& m : fx.su2xu1_fundamental.matrices)
    CHECK(trace(m * m) == ts("-1/2"));
  for (const auto& m : fx.su2xu1_paper_adjoint.matrices)
    CHECK(trace(m * m) == ts("-2"));
}

TEST_CASE("trace table of the transformed adjoint") {
  const auto& m = fixtures().ga_transformed_adjoint.matrices;
  TrigScalar minus2 = ts("-2");
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      TrigScalar t = trace(m[a] * m[b]);
      bool nonnull = (a == 2 && b == 2) || (a == 3 && b == 3) ||
                     (a == 0 && b == 1) || (a == 1 && b == 0);
      CHECK(t == (nonnull ? minus2 : TrigScalar()));
    }
}

TEST_CASE("stored fundamental variant differs from the computed transform in two entries") {
  const auto& fx = fixtures();
  const auto& variant = fx.ga_fundamental_paper.matrices;
  const auto& computed = fx.ga_fundamental_computed.matrices;
  CHECK(variant[0] == computed[0]);
  CHECK(variant[1] == computed[1]);
  for (std::size_t gen : {std::size_t(2), std::size_t(3)}) {
    CHECK(variant[gen] != computed[gen]);
    CHECK(variant[gen](1, 0) == ts("1/2i"));
    CHECK(computed[gen](1, 0).is_zero());
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        if (!(r == 1 && c == 0)) CHECK(variant[gen](r, c) == computed[gen](r, c));
  }
}

TEST_CASE("mixing constraint checker") {
  MixingCandidate rot{ts("cos"), ts("sin"), ts("-sin"), ts("cos")};
  MixingReport good = check_mixing_constraints(rot);
  CHECK(good.pass);
  for (const auto& c : good.constraints) {
    CHECK(c.pass);
    CHECK(c.residual.is_zero());
    CHECK(!c.name.empty());
  }

  MixingCandidate bad{TrigScalar(1), TrigScalar(1), TrigScalar(), TrigScalar(1)};
  MixingReport rep = check_mixing_constraints(bad);
  CHECK(!rep.pass);
  CHECK(!rep.constraints[0].pass);  // alpha*beta + gamma*delta = 1
  CHECK(rep.constraints[1].pass);
  CHECK(!rep.constraints[2].pass);  // beta^2 + delta^2 = 2
  CHECK(rep.constraints[3].pass);
  CHECK(rep.constraints[0].residual == TrigScalar(1));
  CHECK(rep.constraints[2].residual == TrigScalar(1));

  // scaling the rotation by 2 keeps the determinant-like constraint off by 3
  MixingCandidate doubled{ts("2*cos"), ts("2*sin"), ts("-2*sin"), ts("2*cos")};
  MixingReport sc = check_mixing_constraints(doubled);
  CHECK(!sc.pass);
  CHECK(sc.constraints[0].pass);
  CHECK(sc.constraints[3].residual == TrigScalar(3));
}

TEST_CASE("case families") {
  const auto& families = case_families();
  REQUIRE(families.size() == 3);
  CHECK(families[0].id == 1);
  CHECK(families[1].id == 2);
  CHECK(families[2].id == 3);
  REQUIRE(families[0].members.size() == 1);
  REQUIRE(families[1].members.size() == 2);
  REQUIRE(families[2].members.size() == 2);

  const auto& fx = fixtures();
  CHECK(!families[0].members[0].theta.has_value());
  CHECK(families[0].members[0].algebra == fx.ga_constants);

  CHECK(families[1].members[0].theta == "0");
  CHECK(families[1].members[0].algebra == fx.ga_constants.specialize(TrigScalar(1), TrigScalar()));
  CHECK(families[1].members[1].theta == "pi");
  CHECK(families[1].members[1].algebra ==
        fx.ga_constants.specialize(TrigScalar(-1), TrigScalar()));

  CHECK(families[2].members[0].theta == "pi/2");
  CHECK(families[2].members[0].algebra == fx.ga_constants.specialize(TrigScalar(), TrigScalar(1)));
  CHECK(families[2].members[1].theta == "3pi/2");
  CHECK(families[2].members[1].algebra ==
        fx.ga_constants.specialize(TrigScalar(), TrigScalar(-1)));

  for (const auto& family : families)
    for (const auto& member : family.members) {
      CHECK(check_mixing_constraints(member.candidate).pass);
      CHECK(jacobi_check(member.algebra).pass);
    }
}

TEST_CASE("fixture lookups accept aliases") {
  const auto& fx = fixtures();
  CHECK(find_algebra_fixture("ga") == &fx.ga_constants);
  CHECK(find_algebra_fixture("GA") == &fx.ga_constants);
  CHECK(find_algebra_fixture("ga_constants") == &fx.ga_constants);
  CHECK(find_algebra_fixture("su2xu1") == &fx.su2xu1_constants);
  CHECK(find_algebra_fixture("su3") == &fx.su3_constants);
  CHECK(find_algebra_fixture("u1") == &fx.u1_constants);
  CHECK(find_algebra_fixture("nope") == nullptr);

  CHECK(find_rep_fixture("ga-adjoint") == &fx.ga_adjoint);
  CHECK(find_rep_fixture("ga_transformed_adjoint") == &fx.ga_transformed_adjoint);
  CHECK(find_rep_fixture("su2xu1-fundamental") == &fx.su2xu1_fundamental);
  CHECK(find_rep_fixture("ga") == nullptr);

  CHECK(!algebra_fixture_names().empty());
  CHECK(!rep_fixture_names().empty());
}

TEST_CASE("standard field names") {
  const auto& names = fixtures().standard_names;
  CHECK(names.at("X1") == "W-");
  CHECK(names.at("X2") == "W+");
  CHECK(names.at("X3") == "Z");
  CHECK(names.at("X0") == "A");
}
