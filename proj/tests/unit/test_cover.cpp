#include <doctest.h>

#include "autoeq/cover.hpp"
#include "autoeq/errors.hpp"

using namespace autoeq;

TEST_SUITE("cover") {

TEST_CASE("tau and pushforward rewrites") {
  const auto d = CoverDeclarations::standard();
  const auto e = CoverObject::single(d, "E~");
  const auto f = CoverObject::single(d, "F~");
  CHECK(pullback_pushforward(d, e).to_string() == "E~ + E~");
  CHECK(pullback_pushforward(d, f).to_string() == "F~ + tau_*F~");
  CHECK(pullback_pushforward(d, e.tau(d)) == pullback_pushforward(d, e));
  CHECK(f.tau(d).tau(d) == f);
  CHECK(QuotientObject::pushforward(f.tau(d)) == QuotientObject::pushforward(f));
  const auto pair = QuotientObject::companion_pair("C");
  CHECK(pair.twist_by_omega() == pair);
  CHECK(pair.twist_by_omega().twist_by_omega() == pair);
  CHECK(QuotientObject({QuotientSummand::free("C")}).twist_by_omega().to_string() == "C(x)w");
}

TEST_CASE("Hom on the quotient by adjunction") {
  const auto d = CoverDeclarations::standard();
  const auto pe = QuotientObject::pushforward(CoverObject::single(d, "E~"));
  const auto pf = QuotientObject::pushforward(CoverObject::single(d, "F~"));
  CHECK(hom_on_quotient(d, pe, pf).empty());
  CHECK(hom_on_quotient(d, pf, pe).empty());
  CHECK(hom_on_quotient(d, pe, pe) == GradedDims{{0, 2}, {2, 2}});
  CHECK(hom_on_quotient(d, pf, pf) == GradedDims{{0, 1}, {2, 1}});
  CHECK(hom_on_quotient(d, pe, pe.shifted(1)) == GradedDims{{-1, 2}, {1, 2}});
  CHECK_THROWS_AS(hom_on_quotient(d, pe, QuotientObject::companion_pair("C")), ClosureError);
}

TEST_CASE("undeclared relations are outside the closure") {
  CoverDeclarations d;
  d.add_generator(FormalGenerator::spherical("A~"));
  d.add_generator(FormalGenerator::spherical("B~"));
  const auto pa = QuotientObject::pushforward(CoverObject::single(d, "A~"));
  const auto pb = QuotientObject::pushforward(CoverObject::single(d, "B~"));
  CHECK_THROWS_AS(hom_on_quotient(d, pa, pa), ClosureError);
  CHECK_THROWS_AS(hom_on_quotient(d, pa, pb), ClosureError);
  d.declare_orthogonal("A~", "B~");
  // A~ is orthogonal to B~ but nothing is known about tau_*A~ versus B~.
  CHECK_THROWS_AS(hom_on_quotient(d, pa, pb), ClosureError);
}

TEST_CASE("descend") {
  const auto d = CoverDeclarations::standard();
  const auto pair = descend(d, CoverFunctor::twist("E~"));
  CHECK(pair.differ_by_omega());
  CHECK(pair.second.to_string() == "Phi(T[E~]) o M_w");
  const auto id = descend(d, CoverFunctor::identity());
  CHECK(id.first.to_string() == "Id");
  CHECK(id.second.to_string() == "M_w");
  CHECK(descend(d, CoverFunctor::deck()).first == id.first);
  CHECK_THROWS_AS(descend(d, CoverFunctor::twist("F~")), DomainError);
}

TEST_CASE("values of the descended twists") {
  const auto d = CoverDeclarations::standard();
  const auto pair = descend(d, CoverFunctor::twist("E~"));
  const auto pe = QuotientObject::pushforward(CoverObject::single(d, "E~"));
  const auto pf = QuotientObject::pushforward(CoverObject::single(d, "F~"));
  const auto c = QuotientObject::companion_pair("C");
  for (const auto& phi : {pair.first, pair.second}) {
    CHECK(apply_descended(d, phi, pe).object == pe.shifted(-1));
    CHECK(apply_descended(d, phi, pf).object == pf);
    const auto ic = apply_descended(d, phi, c);
    CHECK(ic.object == c);
    CHECK(ic.ambiguous());
    CHECK(descended_box_shift(d, phi, pe, 2) == -2);
    CHECK(descended_box_shift(d, phi, pf, 2) == 0);
    CHECK(descended_box_shift(d, phi, pe, 5) == -5);
    CHECK_THROWS_AS(apply_descended(d, phi, QuotientObject({QuotientSummand::free("C")})), ClosureError);
  }
  // Sums are handled summand by summand.
  const QuotientObject mixed({QuotientSummand::push("E~"), QuotientSummand::push("F~", 2)});
  CHECK(apply_descended(d, pair.first, mixed).object.to_string() == "pi_*E~[-1] + pi_*F~[2]");
}

TEST_CASE("lift/descend bookkeeping") {
  for (int k = 1; k <= 4; ++k) {
    const auto t = lift_descend_bookkeeping(k);
    CHECK(t.k_to_one());
    CHECK(t.rows.size() == static_cast<std::size_t>(2 * k));
  }
  const auto t = lift_descend_bookkeeping(2);
  CHECK(t.rows[0].functor == "Id");
  CHECK(t.rows[0].lifts == std::vector<std::string>{"Id", "tau_*"});
  CHECK(t.rows[1].functor == "M_w");
  CHECK(t.rows[1].lifts == t.rows[0].lifts);
  CHECK(t.summary.size() == 2);
}

TEST_CASE("declaration errors") {
  auto d = CoverDeclarations::standard();
  CHECK_THROWS_AS(d.declare_tau_orthogonal("E~"), DomainError);
  CHECK_THROWS_AS(d.declare_orthogonal("E~", "E~"), DomainError);
  CHECK_THROWS_AS(d.add_generator(FormalGenerator::spherical("E~")), DomainError);
  CHECK_THROWS_AS(d.declare_quotient_companion("E~", "F~"), DomainError);
}

}
