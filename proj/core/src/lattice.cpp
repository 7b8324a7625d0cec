#include "autoeq/lattice.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "autoeq/errors.hpp"
#include "autoeq/symmetric_group.hpp"

namespace autoeq {

MukaiLattice::MukaiLattice(IntMatrix gram, MukaiVector structure_sheaf, MukaiVector point)
    : gram_(std::move(gram)), v0_(std::move(structure_sheaf)), point_(std::move(point)) {
  if (!gram_.is_square() || gram_.rows() == 0)
    throw DomainError("Gram matrix must be square and nonempty");
  if (!(gram_ == gram_.transpose())) throw DomainError("Gram matrix is not symmetric");
  check_member(v0_);
  check_member(point_);
}

MukaiLattice MukaiLattice::k3(const Integer& half_degree) {
  if (half_degree < 1) throw DomainError("the polarisation degree 2k needs k >= 1");
  IntMatrix g{{0, 0, -1}, {0, 2 * half_degree, 0}, {-1, 0, 0}};
  return MukaiLattice(std::move(g), {1, 0, 1}, {0, 0, 1});
}

void MukaiLattice::check_member(const MukaiVector& v) const {
  if (v.size() != rank())
    throw DomainError("vector " + to_string(v) + " has length " + std::to_string(v.size()) +
                      ", lattice rank is " + std::to_string(rank()));
}

Integer MukaiLattice::pairing(const MukaiVector& v, const MukaiVector& w) const {
  check_member(v);
  check_member(w);
  Integer sum = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_(i, j) != 0) sum += v[i] * gram_(i, j) * w[j];
  return sum;
}

bool MukaiLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

ClassIsometry::ClassIsometry(const MukaiLattice& lattice, IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != lattice.rank() || matrix_.cols() != lattice.rank())
    throw DomainError("isometry matrix has the wrong size for a rank " +
                      std::to_string(lattice.rank()) + " lattice");
  if (!(matrix_.transpose() * lattice.gram() * matrix_ == lattice.gram()))
    throw DomainError("matrix " + to_string(matrix_) + " does not preserve the Mukai pairing");
}

ClassIsometry ClassIsometry::identity(const MukaiLattice& lattice) {
  return ClassIsometry(lattice, IntMatrix::identity(lattice.rank()));
}

ClassIsometry ClassIsometry::compose(const ClassIsometry& other) const {
  ClassIsometry out;
  out.matrix_ = matrix_ * other.matrix_;
  return out;
}

namespace {
void require_spherical_class(const MukaiLattice& lattice, const MukaiVector& e) {
  const Integer self = lattice.pairing(e, e);
  if (self != -2)
    throw DomainError("class " + to_string(e) + " is not spherical: <e,e> = " + self.get_str() +
                      ", chi(e,e) must be 2");
}
}  // namespace

MukaiVector spherical_reflection(const MukaiLattice& lattice, const MukaiVector& e,
                                 const MukaiVector& v) {
  require_spherical_class(lattice, e);
  const Integer c = lattice.pairing(e, v);
  MukaiVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * e[i];
  return out;
}

ClassIsometry reflection_isometry(const MukaiLattice& lattice, const MukaiVector& e) {
  require_spherical_class(lattice, e);
  // Column j is the image of the j-th basis vector.
  IntMatrix m(lattice.rank(), lattice.rank());
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    MukaiVector basis(lattice.rank());
    basis[j] = 1;
    const auto image = spherical_reflection(lattice, e, basis);
    for (std::size_t i = 0; i < lattice.rank(); ++i) m(i, j) = image[i];
  }
  return ClassIsometry(lattice, std::move(m));
}

MukaiVector p_twist_class_action(const MukaiLattice& lattice, const MukaiVector& e,
                                 const MukaiVector& v) {
  // [P_E A] = [A] - chi(E,A)[E] + chi(E,A)[E]; the two cone terms cancel,
  // matching P_E = T_E^2 on classes.
  const auto twice = spherical_reflection(lattice, e, spherical_reflection(lattice, e, v));
  if (twice != v)
    throw std::logic_error("reflection in " + to_string(e) + " does not square to the identity on " +
                           to_string(v));
  return v;
}

namespace {
Integer mu_scalar(const MukaiLattice& lattice, const MukaiVector& a0) {
  lattice.check_member(a0);
  const Integer e = lattice.euler_characteristic(a0);
  if (e == 0)
    throw DomainError("hypothesis chi(O_X) != 0 violated: e = chi(" + to_string(a0) + ") = 0");
  return e;
}
}  // namespace

MukaiVector mu_map(const MukaiLattice& lattice, const MukaiVector& a, const MukaiVector& a0, int n) {
  if (n < 1) throw DomainError("mu_map needs n >= 1");
  const Integer e = mu_scalar(lattice, a0);
  const Integer coefficient = (n - 1) * lattice.euler_characteristic(a);
  MukaiVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = e * a[i] + coefficient * a0[i];
  return out;
}

IntMatrix mu_matrix(const MukaiLattice& lattice, const MukaiVector& a0, int n) {
  IntMatrix m(lattice.rank(), lattice.rank());
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    MukaiVector basis(lattice.rank());
    basis[j] = 1;
    const auto image = mu_map(lattice, basis, a0, n);
    for (std::size_t i = 0; i < lattice.rank(); ++i) m(i, j) = image[i];
  }
  return m;
}

MuInjectivityReport mu_injectivity_check(const MukaiLattice& lattice, const MukaiVector& a0, int n,
                                         std::size_t samples, std::uint64_t seed) {
  MuInjectivityReport report;
  report.a0 = a0;
  report.n = n;
  report.e = mu_scalar(lattice, a0);
  const RatMatrix mu = to_rational(mu_matrix(lattice, a0, n));
  const std::size_t r = lattice.rank();

  report.kernel_dimension = kernel_basis(mu).size();

  // Y: rows spanning the annihilator of a0, so ker Y = Q a0 and Y mu is mu
  // followed by the projection A -> A / Q a0.
  RatMatrix a0_row(1, r);
  for (std::size_t j = 0; j < r; ++j) a0_row(0, j) = a0[j];
  const auto annihilator = kernel_basis(a0_row);
  RatMatrix y(annihilator.size(), r);
  for (std::size_t i = 0; i < annihilator.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) y(i, j) = annihilator[i][j];
  const auto quotient_kernel = kernel_basis(y * mu);
  report.quotient_kernel_dimension = quotient_kernel.size();
  report.quotient_kernel_is_a0_line =
      quotient_kernel.size() == 1 && is_rational_multiple(to_rational(a0), quotient_kernel.front());

  MukaiVector expected = a0;
  for (auto& x : expected) x *= report.e * n;
  report.image_of_a0_is_ena0 = mu_map(lattice, a0, a0, n) == expected && report.e * n != 0;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coordinate(-50, 50);
  report.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    MukaiVector a(r);
    bool zero = true;
    for (auto& x : a) {
      x = coordinate(rng);
      zero = zero && x == 0;
    }
    if (zero) a[0] = 1;
    const auto image = mu_map(lattice, a, a0, n);
    if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
      ++report.samples_ok;
  }
  return report;
}

Integer equivariant_euler(const LinBoxObject& a, const LinBoxObject& b, const HomOptions& options) {
  return equivariant_hom(a, b, options).euler_characteristic();
}

namespace {

/// Ryser's formula.
Integer permanent(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    Integer product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) {
      Integer row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (subset & (std::uint32_t{1} << j)) row += a[i][j];
      product *= row;
    }
    const bool odd = (n - static_cast<std::size_t>(std::popcount(subset))) % 2 == 1;
    if (odd)
      total -= product;
    else
      total += product;
  }
  return total;
}

Integer multiplicity_factorials(const std::vector<int>& multiset) {
  Integer f = 1;
  for (std::size_t i = 0; i < multiset.size();) {
    std::size_t j = i;
    while (j < multiset.size() && multiset[j] == multiset[i]) ++j;
    f *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return f;
}

void multisets_into(std::size_t rank, int remaining, int smallest, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i = smallest; i < static_cast<int>(rank); ++i) {
    prefix.push_back(i);
    multisets_into(rank, remaining - 1, i, prefix, out);
    prefix.pop_back();
  }
}

void check_power(int n) {
  if (n < 1 || n > kMaxBruteForcePower)
    throw DomainError("tensor power must be in 1.." + std::to_string(kMaxBruteForcePower));
}

}  // namespace

SymmetricTensor::SymmetricTensor(std::size_t rank, int power) : rank_(rank), power_(power) {
  check_power(power);
}

Integer SymmetricTensor::coefficient(const std::vector<int>& multiset) const {
  auto it = coeffs_.find(multiset);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void SymmetricTensor::set(std::vector<int> multiset, const Integer& value) {
  std::sort(multiset.begin(), multiset.end());
  if (value == 0)
    coeffs_.erase(multiset);
  else
    coeffs_[std::move(multiset)] = value;
}

std::vector<std::vector<int>> SymmetricTensor::basis(std::size_t rank, int power) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  multisets_into(rank, power, 0, prefix, out);
  return out;
}

SymmetricTensor SymmetricTensor::symmetrize(const std::vector<MukaiVector>& factors) {
  if (factors.empty()) throw DomainError("symmetrize needs at least one factor");
  const std::size_t rank = factors.front().size();
  const int n = static_cast<int>(factors.size());
  SymmetricTensor t(rank, n);
  for (const auto& m : basis(rank, n)) {
    // Coefficient of e_{m_1} (x) .. (x) e_{m_n} in sum_sigma (x)_k v_{sigma(k)}.
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n),
                                        std::vector<Integer>(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) a[k][j] = factors[j].at(static_cast<std::size_t>(m[k]));
    t.set(m, permanent(a));
  }
  return t;
}

SymmetricTensor SymmetricTensor::from_symmetric_sum(
    std::size_t rank, const std::vector<std::vector<MukaiVector>>& terms) {
  if (terms.empty()) throw DomainError("from_symmetric_sum needs at least one term");
  const int n = static_cast<int>(terms.front().size());
  SymmetricTensor t(rank, n);
  for (const auto& m : basis(rank, n)) {
    Integer c = 0;
    for (const auto& term : terms) {
      Integer product = 1;
      for (std::size_t k = 0; k < term.size(); ++k) product *= term[k].at(static_cast<std::size_t>(m[k]));
      c += product;
    }
    t.set(m, c);
  }
  return t;
}

std::string SymmetricTensor::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) os << ", ";
    first = false;
    os << "O(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "):" << c.get_str();
  }
  os << "}";
  return os.str();
}

namespace {
SymmetricTensor slot_sum(std::size_t rank, const MukaiVector& filler, const MukaiVector& f, int n) {
  std::vector<std::vector<MukaiVector>> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<MukaiVector> term(static_cast<std::size_t>(n), filler);
    term[static_cast<std::size_t>(i)] = f;
    terms.push_back(std::move(term));
  }
  return SymmetricTensor::from_symmetric_sum(rank, terms);
}
}  // namespace

SymmetricTensor s_class(const MukaiLattice& lattice, const MukaiVector& f, int n) {
  lattice.check_member(f);
  return slot_sum(lattice.rank(), lattice.structure_sheaf(), f, n);
}

SymmetricTensor s_prime_class(const MukaiLattice& lattice, const ClassIsometry& phi,
                              const MukaiVector& f_prime, int n) {
  lattice.check_member(f_prime);
  return slot_sum(lattice.rank(), phi(lattice.structure_sheaf()), f_prime, n);
}

InducedClassMap::InducedClassMap(const ClassIsometry& phi, std::size_t rank, int n)
    : rank_(rank), n_(n), basis_(SymmetricTensor::basis(rank, n)) {
  check_power(n);
  if (phi.matrix().rows() != rank) throw DomainError("induced_class_map: dimension mismatch");
  const auto& m = phi.matrix();
  matrix_ = IntMatrix(basis_.size(), basis_.size());
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    const auto& source = basis_[col];
    const Integer repeats = multiplicity_factorials(source);
    for (std::size_t row = 0; row < basis_.size(); ++row) {
      const auto& target = basis_[row];
      // Coefficient of e_target in phi^{(x)n}(orbit sum of source); the
      // permanent counts each distinct arrangement `repeats` times.
      std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n),
                                          std::vector<Integer>(static_cast<std::size_t>(n)));
      for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < a.size(); ++l)
          a[k][l] = m(static_cast<std::size_t>(target[k]), static_cast<std::size_t>(source[l]));
      matrix_(row, col) = permanent(a) / repeats;
    }
  }
}

SymmetricTensor InducedClassMap::operator()(const SymmetricTensor& t) const {
  if (t.rank() != rank_ || t.power() != n_) throw DomainError("induced_class_map: dimension mismatch");
  IntVector v(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) v[i] = t.coefficient(basis_[i]);
  const auto image = matrix_ * v;
  SymmetricTensor out(rank_, n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) out.set(basis_[i], image[i]);
  return out;
}

InducedClassMap induced_class_map(const MukaiLattice& lattice, const ClassIsometry& phi, int n) {
  return InducedClassMap(phi, lattice.rank(), n);
}

}  // namespace autoeq
