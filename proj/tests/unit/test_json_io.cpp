#include <doctest.h>

#include "autoeq/errors.hpp"
#include "autoeq/json_io.hpp"

using namespace autoeq;

TEST_SUITE("json-io") {

TEST_CASE("graded dims") {
  const GradedDims g{{0, 1}, {2, 1}, {-3, 4}};
  const auto j = to_json(g);
  CHECK(j.dump() == R"({"-3":4,"0":1,"2":1})");
  CHECK(graded_dims_from_json(j) == g);
  CHECK(graded_dims_from_json(Json::parse(R"({"4": "12345678901234567890"})")).at(4) ==
        Integer("12345678901234567890"));
  CHECK_THROWS_AS(graded_dims_from_json(Json::parse(R"({"x": 1})")), ConfigError);
  CHECK_THROWS_AS(graded_dims_from_json(Json::parse(R"({"0": -1})")), ConfigError);
}

TEST_CASE("big integers survive") {
  const Integer big("340282366920938463463374607431768211456");
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(integer_from_json(to_json(Integer(-7))) == -7);
}

TEST_CASE("objects, words, lattices") {
  const auto d = Declarations::standard();
  const LinBoxObject a(d.generator("E"), 3, -1, Sign::minus);
  CHECK(lin_box_object_from_json(d, to_json(a)) == a);
  CHECK_THROWS_AS(lin_box_object_from_json(d, Json::parse(R"({"gen": "Q", "n": 2})")), ConfigError);
  CHECK_THROWS_AS(lin_box_object_from_json(d, Json::parse(R"({"gen": "E", "n": 0})")), ConfigError);

  const auto w = FunctorWord::parse("Tind[E,3,-]^2 S(1) Pbig[E,+,3]^-1");
  CHECK(functor_word_from_json(to_json(w)) == w);
  CHECK(functor_word_from_json(Json(w.to_string())) == w);
  auto tampered = to_json(w);
  tampered["text"] = "T[E]";
  CHECK_THROWS_AS(functor_word_from_json(tampered), ConfigError);

  const auto l = MukaiLattice::k3(3);
  const auto back = mukai_lattice_from_json(to_json(l));
  CHECK(back.gram() == l.gram());
  CHECK(back.structure_sheaf() == l.structure_sheaf());
  CHECK_THROWS_AS(mukai_lattice_from_json(Json::parse(R"({"rank": 2, "gram": [[1]], "v0": [1], "point": [1]})")),
                  ConfigError);

  const CycleType c({3, 1, 1});
  CHECK(cycle_type_from_json(to_json(c)) == c);
}

}
