#include <doctest.h>

#include "autoeq/errors.hpp"
#include "autoeq/subset_algebra.hpp"
#include "autoeq/symmetric_group.hpp"

using namespace autoeq;

TEST_SUITE("subset-algebra") {

TEST_CASE("products") {
  const SubsetAlgebra a(3);
  CHECK(a.generator(1) * a.generator(1) == AlgebraElement());
  CHECK((a.generator(1) * a.generator(2)).to_string() == "h1h2");
  CHECK(power(a.diagonal_class(), 2) == a.orbit_sum(2) * Rational(2));
  CHECK(a.hilbert_series() == HilbertSeries{{0, 1}, {2, 3}, {4, 3}, {6, 1}});
  CHECK_THROWS_AS(SubsetAlgebra(0), DomainError);
  CHECK_THROWS_AS(SubsetAlgebra(13), DomainError);
}

TEST_CASE("h^k = k! e_k") {
  for (int n = 1; n <= 7; ++n) {
    const SubsetAlgebra a(n);
    for (int k = 0; k <= n + 1; ++k)
      CHECK(power(a.diagonal_class(), static_cast<unsigned>(k)) == a.orbit_sum(k) * Rational(factorial(k)));
  }
}

TEST_CASE("invariant subalgebra is k[h]/h^(n+1)") {
  for (int n = 1; n <= 6; ++n) {
    const auto inv = invariant_subalgebra(SubsetAlgebra(n), Character::trivial);
    CAPTURE(n);
    CHECK(inv.ring_check_passed());
    CHECK(inv.dims == projective_space_dims(n));
    REQUIRE(inv.generator);
    CHECK(*inv.generator == SubsetAlgebra(n).diagonal_class());
  }
}

TEST_CASE("sign part") {
  const auto two = invariant_subalgebra(SubsetAlgebra(2), Character::sign);
  CHECK(two.dims == GradedDims{{2, 1}});
  REQUIRE(two.basis.size() == 1);
  CHECK(two.basis.front().to_string() == "h1 - h2");
  CHECK(two.basis_is_isotypic);
  CHECK(invariant_subalgebra(SubsetAlgebra(4), Character::sign).dims.empty());
}

TEST_CASE("projection is idempotent and lands in the isotypic part") {
  const SubsetAlgebra a(4);
  const auto x = a.generator(1) * a.generator(2) + a.generator(3);
  for (auto c : {Character::trivial, Character::sign}) {
    const auto p = isotypic_projection(a, x, c);
    CHECK(isotypic_projection(a, p, c) == p);
    const auto swap = Permutation::transposition(4, 0, 1);
    CHECK(swap.act(p) == (c == Character::trivial ? p : p * Rational(-1)));
  }
}

}
