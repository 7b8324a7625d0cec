#include <doctest.h>

#include "autoeq/errors.hpp"
#include "autoeq/linearized.hpp"
#include "oracles.hpp"

using namespace autoeq;

TEST_SUITE("linearized") {

TEST_CASE("objects and labels") {
  const auto e = FormalGenerator::spherical("E");
  CHECK(is_spherical(e));
  CHECK(LinBoxObject(e).to_string() == "E");
  CHECK(LinBoxObject(e, 3).to_string() == "E^{[3]}");
  CHECK(LinBoxObject(e, 2, 1, Sign::minus).to_string() == "E^{-[2]}[1]");
  CHECK_THROWS_AS(LinBoxObject(e, 0), DomainError);
  CHECK_THROWS_AS(LinBoxObject(e, 13), DomainError);
  CHECK_THROWS_AS(FormalGenerator("G", GradedDims{{0, 2}}), DomainError);
  CHECK(parse_sign("-") == Sign::minus);
  CHECK_THROWS_AS(parse_sign("x"), ConfigError);
}

TEST_CASE("equivariant Hom of E^{[n]}") {
  const auto e = FormalGenerator::spherical("E");
  for (int n = 2; n <= 8; ++n) {
    const LinBoxObject p(e, n, 0, Sign::plus), m(e, n, 0, Sign::minus);
    CHECK(equivariant_hom(p, p) == projective_space_dims(n));
    CHECK(equivariant_hom(m, m) == projective_space_dims(n));
    CHECK(equivariant_hom(p, m).at(0) == 0);
    CHECK(equivariant_hom(p, m) == (n == 2 ? GradedDims{{2, 1}} : GradedDims{}));
  }
}

TEST_CASE("Hom respects shifts") {
  const auto e = FormalGenerator::spherical("E");
  const LinBoxObject a(e, 3, 2), b(e, 3, -1);
  CHECK(equivariant_hom(a, b) == shift(projective_space_dims(3), -3));
  CHECK(equivariant_hom(a.unshifted(), a.unshifted().shifted(1)) == shift(projective_space_dims(3), 1));
  CHECK(a.shifted(1).shift == 3);
}

TEST_CASE("closure") {
  const auto d = Declarations::standard();
  const LinBoxObject e(d.generator("E"), 2), f(d.generator("F"), 2);
  CHECK_THROWS_AS(equivariant_hom(e, f), ClosureError);
  CHECK(equivariant_hom(d, e, f).empty());
  CHECK_THROWS_AS(equivariant_hom(e, LinBoxObject(d.generator("E"), 3)), ClosureError);
}

TEST_CASE("P^n-object report") {
  const auto e = FormalGenerator::spherical("E");
  for (int n = 1; n <= 6; ++n) CHECK(is_pn_object(LinBoxObject(e, n)).is_pn_object());
  CHECK_THROWS_AS(is_pn_object(LinBoxObject(FormalGenerator::spherical("S", 3), 2)), DomainError);
}

TEST_CASE("non-isomorphism of the two linearisations") {
  const auto e = FormalGenerator::spherical("E");
  for (int n = 2; n <= 8; ++n) {
    const auto v = are_isomorphic(LinBoxObject(e, n, 0, Sign::plus), LinBoxObject(e, n, 0, Sign::minus));
    CHECK_FALSE(v.isomorphic);
    REQUIRE(v.degree_zero_hom);
    CHECK(*v.degree_zero_hom == 0);
  }
  CHECK(are_isomorphic(LinBoxObject(e, 1, 0, Sign::plus), LinBoxObject(e, 1, 0, Sign::minus)).isomorphic);
  CHECK_FALSE(are_isomorphic(LinBoxObject(e, 2), LinBoxObject(e, 2, 1)).isomorphic);
}

TEST_CASE("generic generators follow the fixed-point oracle") {
  // Ext^* = k + k[-2]^2 + k[-4], e.g. a P^2-like object with a doubled middle.
  const FormalGenerator g("G", GradedDims{{0, 1}, {2, 2}, {4, 1}}, 4);
  for (int n = 2; n <= 4; ++n)
    for (auto s : {Sign::plus, Sign::minus}) {
      const auto oracle_dims = oracle::isotypic_by_fixed_points({0, 2, 2, 4}, n, s == Sign::minus);
      GradedDims expected;
      for (const auto& [d, v] : oracle_dims) expected.set(d, v);
      CHECK(equivariant_hom(LinBoxObject(g, n), LinBoxObject(g, n, 0, s)) == expected);
    }
}

}
