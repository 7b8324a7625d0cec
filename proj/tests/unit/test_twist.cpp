#include <doctest.h>

#include "autoeq/errors.hpp"
#include "autoeq/twist.hpp"
#include "oracles.hpp"

using namespace autoeq;

TEST_SUITE("twist") {

TEST_CASE("parse and print round trip") {
  for (const std::string text : {"Id", "T[E]", "T[E]^2", "P[E]^-1", "Tind[E,3,+]", "Pind[E,2,-]^3",
                                 "Pbig[E,+,4]", "S(2)", "S(-1)", "T[E] Tind[E,2,-] S(3)"}) {
    const auto w = FunctorWord::parse(text);
    CHECK(FunctorWord::parse(w.to_string()) == w);
  }
  CHECK(FunctorWord::parse("T[E] * T[E]") == FunctorWord::parse("T[E]^2"));
  CHECK_THROWS_AS(FunctorWord::parse("T[E"), ConfigError);
  CHECK_THROWS_AS(FunctorWord::parse("Q[E]"), ConfigError);
  CHECK_THROWS_AS(FunctorWord::parse("Tind[E,x,+]"), ConfigError);
}

TEST_CASE("letter values") {
  const auto d = Declarations::standard();
  const LinBoxObject e(d.generator("E")), f(d.generator("F"));
  CHECK(apply(d, Letter::twist("E"), e) == e.shifted(-1));
  CHECK(apply(d, Letter::twist("E"), f) == f);
  CHECK(apply(d, Letter::p_twist("E"), e) == e.shifted(-2));
  CHECK(apply(d, Letter::twist("E").inverted(), e) == e.shifted(1));
  CHECK(apply(d, Letter::shift_by(3), f) == f.shifted(3));
  CHECK_THROWS_AS(apply(d, Letter::twist("F"), e), ClosureError);
  CHECK_THROWS_AS(apply(d, Letter::twist("E"), LinBoxObject(d.generator("E"), 2)), ClosureError);
}

TEST_CASE("value table matches the closed form") {
  const auto d = Declarations::standard();
  for (int n = 1; n <= 8; ++n) {
    const auto t = value_table(d, "E", n);
    REQUIRE(t.rows.size() == 4);
    std::vector<std::vector<int>> got;
    for (const auto& r : t.rows) got.push_back(r.shifts);
    CHECK(got == oracle::value_table_rows(n));
    CHECK(t.notes.empty() == (n != 1));
  }
}

TEST_CASE("T_E^2 = P_E") {
  const auto d = Declarations::standard();
  const std::vector<LinBoxObject> base{LinBoxObject(d.generator("E")), LinBoxObject(d.generator("F"))};
  const FunctorWord t{Letter::twist("E")};
  CHECK(check_relation(d, t * t, FunctorWord{Letter::p_twist("E")}, base).agree);
  const auto bad = check_relation(d, t, FunctorWord{Letter::p_twist("E")}, base);
  CHECK_FALSE(bad.agree);
  REQUIRE(bad.mismatch);
  CHECK(bad.mismatch->object == base[0]);
  for (int n = 2; n <= 5; ++n) {
    std::vector<LinBoxObject> objs;
    for (const auto& x : base)
      for (auto s : {Sign::plus, Sign::minus}) objs.emplace_back(x.gen, n, 0, s);
    const FunctorWord ti{Letter::induced_twist("E", n, Sign::plus)};
    CHECK(check_relation(d, ti * ti, FunctorWord{Letter::induced_p_twist("E", n, Sign::plus)}, objs).agree);
    CHECK(check_relation(d, ti * ti.inverse(), FunctorWord{}, objs).agree);
  }
}

TEST_CASE("exoticness witnesses need a companion") {
  const auto d = Declarations::standard();
  for (int n = 2; n <= 8; ++n)
    for (auto s : {Sign::plus, Sign::minus}) {
      CHECK(exoticness_witness(d, FunctorWord{Letter::induced_twist("E", n, s)}).found);
      CHECK(exoticness_witness(d, FunctorWord{Letter::big_p_twist("E", s, n)}).found);
    }
  Declarations lonely;
  lonely.add_generator(FormalGenerator::spherical("E"));
  CHECK_FALSE(exoticness_witness(lonely, FunctorWord{Letter::induced_twist("E", 3, Sign::plus)}).found);
  // P^n-twist separates the two linearisations even without a companion.
  CHECK(exoticness_witness(lonely, FunctorWord{Letter::big_p_twist("E", Sign::plus, 3)}).found);
  CHECK_FALSE(exoticness_witness(d, FunctorWord{Letter::shift_by(2)}).found);
}

TEST_CASE("kernels of induced twists") {
  CHECK(kernels_distinct(Letter::induced_twist("E", 3, Sign::plus), Letter::induced_twist("E", 3, Sign::minus)));
  CHECK_FALSE(kernels_distinct(Letter::induced_twist("E", 3, Sign::plus), Letter::induced_twist("E", 3, Sign::plus)));
  CHECK_THROWS_AS(kernels_distinct(Letter::twist("E"), Letter::twist("E")), DomainError);
}

TEST_CASE("rule closure") {
  const auto d = Declarations::standard();
  const auto c = rule_closure(d, FunctorWord{Letter::induced_twist("E", 2, Sign::plus)});
  CHECK(c.size() == 4);
  CHECK(rule_closure(d, FunctorWord{Letter::twist("E")}).size() == 2);
}

}
