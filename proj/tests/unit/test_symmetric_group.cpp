#include <doctest.h>

#include <random>

#include "autoeq/errors.hpp"
#include "autoeq/symmetric_group.hpp"
#include "oracles.hpp"

using namespace autoeq;

namespace {
GradedDims from_map(const std::map<int, mpz_class>& m) {
  GradedDims g;
  for (const auto& [d, v] : m) g.set(d, v);
  return g;
}
}  // namespace

TEST_SUITE("symmetric-group") {

TEST_CASE("permutations") {
  const Permutation p({1, 2, 0});
  CHECK(p.sign() == 1);
  CHECK(p.compose(p.inverse()) == Permutation::identity(3));
  CHECK(Permutation::transposition(4, 0, 3).sign() == -1);
  CHECK(p.cycle_type() == CycleType({3}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK(Permutation::transposition(3, 0, 1).act(std::uint32_t{0b001}) == 0b010u);
}

TEST_CASE("sign is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a(6), b(6);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation p(a), q(b);
    CHECK(p.compose(q).sign() == p.sign() * q.sign());
    CHECK(p.sign() == oracle::perm_sign(a));
  }
}

TEST_CASE("partitions and class sizes") {
  for (int n = 1; n <= 12; ++n) {
    const auto parts = partitions(n);
    CHECK(static_cast<long>(parts.size()) == oracle::partition_count(n));
    Integer total = 0;
    for (const auto& c : parts) {
      CHECK(c.n() == n);
      CHECK(factorial(n) % c.class_size() == 0);
      total += c.class_size();
    }
    CHECK(total == factorial(n));
  }
  CHECK(CycleType({2, 2}).class_size() == 3);
  CHECK(CycleType({1, 2, 1}).parts() == std::vector<int>{2, 1, 1});
}

TEST_CASE("character orthogonality") {
  for (int n = 2; n <= 8; ++n) {
    Integer s = 0;
    for (const auto& c : partitions(n)) s += c.class_size() * character_value(Character::sign, c);
    CHECK(s == 0);
  }
}

TEST_CASE("cycle index against fixed-point counting") {
  const std::vector<std::vector<int>> spaces{{0, 2}, {0, 2, 2}, {0, 2, 4}, {0, 4}, {0, 0, 2}};
  for (const auto& degrees : spaces) {
    GradedDims v;
    for (int d : degrees) v.set(d, v.at(d) + 1);
    for (int n = 1; n <= 5; ++n)
      for (bool sign : {false, true}) {
        CAPTURE(n);
        CAPTURE(v.to_string());
        const auto expected = from_map(oracle::isotypic_by_fixed_points(degrees, n, sign));
        CHECK(isotypic_dims(v, n, sign ? Character::sign : Character::trivial) == expected);
      }
  }
}

TEST_CASE("cycle index against the permutation-module count") {
  const GradedDims sphere{{0, 1}, {2, 1}};
  for (int n = 1; n <= 12; ++n)
    for (bool sign : {false, true})
      CHECK(isotypic_dims(sphere, n, sign ? Character::sign : Character::trivial) ==
            from_map(oracle::sphere_power_isotypic(n, sign)));
}

TEST_CASE("brute-force projector agrees with the cycle index") {
  const GradedDims sphere{{0, 1}, {2, 1}};
  for (int n = 1; n <= 6; ++n)
    for (auto c : {Character::trivial, Character::sign})
      CHECK(brute_force_isotypic(SubsetAlgebra(n), c) == isotypic_dims(sphere, n, c));
  CHECK_THROWS_AS(brute_force_isotypic(SubsetAlgebra(9), Character::trivial), DomainError);
}

TEST_CASE("isotypic_dims preconditions") {
  CHECK_THROWS_AS(isotypic_dims(GradedDims{{0, 1}, {1, 1}}, 2, Character::trivial), DomainError);
  CHECK_THROWS_AS(isotypic_dims(GradedDims{{0, 1}}, 13, Character::trivial), DomainError);
  CHECK_THROWS_AS(isotypic_dims(GradedDims{{0, 1}}, 0, Character::trivial), DomainError);
}

TEST_CASE("Koszul mode: exterior powers of an odd line") {
  // v = t: Sym^n of an odd line is the exterior power, zero for n >= 2.
  const GradedDims odd{{1, 1}};
  CHECK(isotypic_dims(odd, 1, Character::trivial, {true}) == GradedDims{{1, 1}});
  CHECK(isotypic_dims(odd, 2, Character::trivial, {true}).empty());
  CHECK(isotypic_dims(odd, 3, Character::sign, {true}) == GradedDims{{3, 1}});
  // Even input is unchanged by the flag.
  const GradedDims sphere{{0, 1}, {2, 1}};
  CHECK(isotypic_dims(sphere, 4, Character::sign, {true}) == isotypic_dims(sphere, 4, Character::sign));
}

TEST_CASE("group cohomology tables") {
  for (int n = 1; n <= 12; ++n) {
    const auto c = GroupCohomologyTable::lookup(GroupFamily::cyclic, n);
    CHECK(c.h1.order() == n);
    CHECK(c.h2.is_trivial());
    const auto s = GroupCohomologyTable::lookup(GroupFamily::symmetric, n);
    CHECK(s.h1.order() == (n >= 2 ? 2 : 1));
    CHECK(s.h2.order() == (n >= 4 ? 2 : 1));
    CHECK(linearization_count(s, true) == s.h1.order());
    CHECK(linearization_count(s, false) == 0);
  }
  CHECK(GroupCohomologyTable::lookup(GroupFamily::symmetric, 4).h2.to_string() == "Z/2");
  CHECK(GroupCohomologyTable::lookup(GroupFamily::cyclic, 1).h1.to_string() == "0");
}

}
