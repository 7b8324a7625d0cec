#include <doctest.h>

#include <random>

#include "autoeq/errors.hpp"
#include "autoeq/lattice.hpp"
#include "oracles.hpp"

using namespace autoeq;

namespace {
MukaiVector random_vector(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return {d(rng), d(rng), d(rng)};
}

std::vector<std::vector<mpz_class>> columns_of(const ClassIsometry& phi) {
  const auto& m = phi.matrix();
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}
}  // namespace

TEST_SUITE("k-lattice") {

TEST_CASE("K3 model pairing") {
  const auto l = MukaiLattice::k3();
  CHECK(l.is_even());
  CHECK(l.pairing(l.structure_sheaf(), l.structure_sheaf()) == -2);
  CHECK(l.euler_characteristic(l.structure_sheaf()) == 2);
  CHECK(l.pairing(l.point(), l.point()) == 0);
  CHECK(l.euler_form(l.structure_sheaf(), l.point()) == 1);
  std::mt19937_64 rng(5);
  for (long k = 1; k <= 3; ++k) {
    const auto lk = MukaiLattice::k3(k);
    for (int i = 0; i < 30; ++i) {
      const auto v = random_vector(rng), w = random_vector(rng);
      CHECK(lk.pairing(v, w) == oracle::k3_pairing(v, w, k));
    }
  }
  CHECK_THROWS_AS(l.pairing({1, 0}, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(MukaiLattice(IntMatrix{{0, 1}, {2, 0}}, {1, 0}, {0, 1}), DomainError);
}

TEST_CASE("reflections in spherical classes") {
  const auto l = MukaiLattice::k3();
  std::mt19937_64 rng(9);
  const std::vector<MukaiVector> spherical{{1, 0, 1}, {1, 1, 2}, {2, 1, 1}, {-1, 0, -1}, {1, 2, 5}};
  for (const auto& e : spherical) {
    REQUIRE(l.pairing(e, e) == -2);
    const auto t = reflection_isometry(l, e);
    CHECK(t.compose(t) == ClassIsometry::identity(l));
    CHECK(t(e) == MukaiVector{-e[0], -e[1], -e[2]});
    for (int i = 0; i < 20; ++i) {
      const auto v = random_vector(rng);
      CHECK(t(v) == oracle::k3_reflection(e, v));
      CHECK(p_twist_class_action(l, e, v) == v);
    }
  }
  CHECK_THROWS_AS(reflection_isometry(l, {1, 0, 0}), DomainError);
  CHECK_THROWS_AS(ClassIsometry(l, IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), DomainError);
}

TEST_CASE("mu map") {
  const auto l = MukaiLattice::k3();
  CHECK(mu_map(l, {0, 0, 1}, {1, 0, 1}, 2) == MukaiVector{1, 0, 3});
  CHECK(mu_map(l, {1, 0, 1}, {1, 0, 1}, 3) == MukaiVector{6, 0, 6});
  CHECK_THROWS_AS(mu_map(l, {0, 0, 1}, {1, 0, -1}, 2), DomainError);
}

TEST_CASE("mu is injective iff det != 0, det = e^r n") {
  const auto l = MukaiLattice::k3();
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 60) {
    const auto a0 = random_vector(rng, 6);
    const auto e = l.euler_characteristic(a0);
    if (e == 0) continue;
    ++checked;
    const int n = 1 + checked % 8;
    const auto m = mu_matrix(l, a0, n);
    std::vector<std::vector<mpz_class>> rows(3, std::vector<mpz_class>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j);
    CHECK(oracle::determinant(rows) == e * e * e * n);
    const auto report = mu_injectivity_check(l, a0, n, 10, static_cast<std::uint64_t>(checked));
    CHECK(report.injective());
    CHECK(report.quotient_kernel_dimension == 1);
  }
}

TEST_CASE("symmetric tensors against full tensors") {
  const auto l = MukaiLattice::k3();
  const auto t = reflection_isometry(l, {1, 1, 2});
  const auto phi = columns_of(t);
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 4; ++n) {
    const auto f = random_vector(rng, 4);
    const auto s = s_class(l, f, n);
    // The same class as a full tensor.
    std::vector<std::vector<std::vector<mpz_class>>> terms;
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<mpz_class>> term(static_cast<std::size_t>(n), l.structure_sheaf());
      term[static_cast<std::size_t>(i)] = f;
      terms.push_back(term);
    }
    const auto full = oracle::pure_tensor_sum(terms, 3);
    for (const auto& m : SymmetricTensor::basis(3, n)) CHECK(s.coefficient(m) == oracle::sorted_coefficient(full, m));

    const auto image = induced_class_map(l, t, n)(s);
    const auto full_image = oracle::apply_tensor_power(phi, full);
    for (const auto& m : SymmetricTensor::basis(3, n))
      CHECK(image.coefficient(m) == oracle::sorted_coefficient(full_image, m));
    CHECK(image == s_prime_class(l, t, t(f), n));
  }
}

TEST_CASE("symmetrize") {
  const MukaiVector p{0, 0, 1};
  const auto s = SymmetricTensor::symmetrize({p, p});
  CHECK(s.coefficient({2, 2}) == 2);
  CHECK(s.coefficients().size() == 1);
  CHECK(SymmetricTensor::basis(3, 2).size() == 6);
  CHECK(SymmetricTensor::basis(3, 8).size() == 45);
  const MukaiVector a{1, 2, 0}, b{0, 1, 3};
  const auto ab = SymmetricTensor::symmetrize({a, b});
  CHECK(ab == SymmetricTensor::from_symmetric_sum(3, {{a, b}, {b, a}}));
}

TEST_CASE("induced map is a homomorphism") {
  const auto l = MukaiLattice::k3();
  const auto t1 = reflection_isometry(l, {1, 0, 1});
  const auto t2 = reflection_isometry(l, {1, 1, 2});
  for (int n = 1; n <= 4; ++n) {
    const auto lhs = induced_class_map(l, t1.compose(t2), n).matrix();
    const auto rhs = induced_class_map(l, t1, n).matrix() * induced_class_map(l, t2, n).matrix();
    CHECK(lhs == rhs);
    CHECK(induced_class_map(l, ClassIsometry::identity(l), n).matrix() ==
          IntMatrix::identity(SymmetricTensor::basis(3, n).size()));
  }
}

TEST_CASE("equivariant Euler characteristic") {
  const auto e = FormalGenerator::spherical("E");
  CHECK(equivariant_euler(LinBoxObject(e, 3), LinBoxObject(e, 3)) == 4);
  CHECK(equivariant_euler(LinBoxObject(e, 2), LinBoxObject(e, 2, 0, Sign::minus)) == 1);
}

}
