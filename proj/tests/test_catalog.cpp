#include <doctest.h>

#include <nefgl/catalog.hpp>
#include <nefgl/error.hpp>
#include <nefgl/random_cases.hpp>

#include "helpers.hpp"

using namespace nefgl;
using testing::P;
using testing::PM;
using testing::Q;

TEST_SUITE("catalog") {

TEST_CASE("representatives") {
  VarianceSpec i2 = casalis_representative({CasalisType::I, 2}, 3);
  CHECK(i2.V == PM({{"m1", "0", "0"}, {"0", "m2", "0"}, {"0", "0", "1"}}, 3));
  CHECK(i2.domain == "(0,inf)^2 x R^1");

  VarianceSpec ii = casalis_representative({CasalisType::II, 0}, 2);
  CHECK(ii.V == PM({{"m1 - m1^2", "-m1*m2"}, {"-m1*m2", "m2 - m2^2"}}, 2));

  VarianceSpec v = casalis_representative({CasalisType::V, 0}, 2);
  CHECK(v.V == PM({{"m1^2 + m1", "m1*m2"}, {"m1*m2", "m2^2 + 1 + m1"}}, 2));

  VarianceSpec iv = casalis_representative({CasalisType::IV, 1}, 3);
  CHECK(iv.V == PM({{"m1^2", "m1*m2", "m1*m3"}, {"m1*m2", "m2^2 + m1", "m2*m3"}, {"m1*m3", "m2*m3", "m3^2 + m1"}}, 3));

  for (std::size_t n = 1; n <= 4; ++n) {
    auto cat = casalis_catalog(n);
    CHECK(cat.size() == 2 * n + 4);
    for (const auto& [tag, spec] : cat) {
      CHECK(spec.V.is_symmetric());
      CHECK(spec.V.degree() <= 2);
      CHECK(simple_quadratic_decomposition(spec.V));
    }
  }
  CHECK_THROWS_AS(casalis_representative({CasalisType::I, 4}, 3), PreconditionError);
  CHECK_THROWS_AS(casalis_representative({CasalisType::IV, 0}, 3), PreconditionError);
}

TEST_CASE("tags") {
  CHECK(to_string(CasalisTag{CasalisType::I, 2}) == "I_2");
  CHECK(to_string(CasalisTag{CasalisType::III, 0}) == "III");
  CasalisTag t = parse_casalis_tag("IV_1", 0);
  CHECK(t.type == CasalisType::IV);
  CHECK(t.k == 1);
  CHECK(parse_casalis_tag("I", 2).k == 2);
  CHECK_THROWS(parse_casalis_tag("VI", 0));
}

TEST_CASE("six scalar families") {
  auto fams = morris_representatives();
  REQUIRE(fams.size() == 6);
  CHECK(fams[0].name == "Normal");
  CHECK(fams[0].variance == P("1", 1));
  CHECK(fams[0].domain == "R");
  CHECK(fams[3].name == "Binomial");
  CHECK(fams[3].variance == P("m1 - m1^2", 1));
  CHECK(fams[3].domain == "(0,1)");

  // Fingerprints tell the six apart.
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j)
      CHECK(!(morris_fingerprint(fams[i].variance) == morris_fingerprint(fams[j].variance)));
}

TEST_CASE("cubic orbits") {
  CHECK(classify_cubic_orbit_n1(P("1", 1)) == CubicOrbit::X3);
  CHECK(classify_cubic_orbit_n1(P("m1", 1)) == CubicOrbit::X2);
  CHECK(classify_cubic_orbit_n1(P("m1^2", 1)) == CubicOrbit::X2);
  CHECK(classify_cubic_orbit_n1(P("m1 - m1^2", 1)) == CubicOrbit::XXp1);
  CHECK(classify_cubic_orbit_n1(P("m1 + m1^2", 1)) == CubicOrbit::XXp1);
  CHECK(classify_cubic_orbit_n1(P("m1^2 + 1", 1)) == CubicOrbit::X2p1);
  CHECK(classify_cubic_orbit_n1(P("m1^3", 1)) == CubicOrbit::X3);
  CHECK(classify_cubic_orbit_n1(P("m1^3 - m1", 1)) == CubicOrbit::XXp1);
  CHECK(classify_cubic_orbit_n1(P("m1^3 + m1", 1)) == CubicOrbit::X2p1);
  CHECK(to_string(CubicOrbit::XXp1) == "X(X+1)");
  CHECK_THROWS_AS(classify_cubic_orbit_n1(MultiPoly(1)), PreconditionError);
  CHECK_THROWS_AS(classify_cubic_orbit_n1(P("m1^4", 1)), PreconditionError);

  CaseGenerator gen(61);
  for (const auto& fam : morris_representatives()) {
    CubicOrbit o = classify_cubic_orbit_n1(fam.variance);
    for (int t = 0; t < 100; ++t) {
      GroupElement g = gen.group_element(1);
      CHECK(classify_cubic_orbit_n1(transform_variance_cubic_n1(g, fam.variance)) == o);
    }
  }
}

TEST_CASE("multinomial to negative multinomial") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Witness w = witness_II_to_III(n);
    CHECK(w.matches);
    CHECK(w.actual == casalis_representative({CasalisType::III, 0}, n).V);
  }
}

TEST_CASE("chain from I_k") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {3, 2}})
    for (Rational c1 : {Q(-1), Q(-2), Q(-1, 2)}) {
      ChainWitness w = witness_Ik_chain(n, k, c1);
      CHECK(w.matches);
      REQUIRE(w.stages.size() == 3);

      // Expected end point built here from scratch.
      PolyMatrix expected = PolyMatrix::outer_mm(n);
      for (std::size_t i = 1; i < n; ++i)
        expected(i, i) += i < k ? MultiPoly::variable(n, i) : c1 * MultiPoly::variable(n, 0);
      CHECK(w.stages.back() == expected);

      // One transform by the product replaces the three stages.
      PolyMatrix start = casalis_representative({CasalisType::I, k}, n).V;
      auto direct = lower_to_polymatrix(transform_variance(w.g_bc * w.g1 * w.g2, start));
      REQUIRE(direct);
      CHECK(*direct == expected);

      CHECK(w.stages[0].degree() <= 3);
    }
  CHECK_THROWS_AS(witness_Ik_chain(2, 1, Q(1)), PreconditionError);
  CHECK_THROWS_AS(witness_Ik_chain(2, 1, Q(0)), PreconditionError);
}

}
