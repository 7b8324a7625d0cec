#include "autoeq/subset_algebra.hpp"

#include <bit>
#include <sstream>

#include "autoeq/errors.hpp"
#include "autoeq/symmetric_group.hpp"

namespace autoeq {

std::string to_string(Character c) { return c == Character::trivial ? "trivial" : "sign"; }

AlgebraElement AlgebraElement::basis(std::uint32_t subset, const Rational& coefficient) {
  AlgebraElement x;
  x.add_term(subset, coefficient);
  return x;
}

Rational AlgebraElement::coefficient(std::uint32_t subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_homogeneous() const { return is_zero() || degree().has_value(); }

std::optional<int> AlgebraElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = SubsetAlgebra::degree_of(terms_.begin()->first);
  for (const auto& [s, c] : terms_)
    if (SubsetAlgebra::degree_of(s) != d) return std::nullopt;
  return d;
}

void AlgebraElement::add_term(std::uint32_t subset, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(subset, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_)
      if ((sa & sb) == 0) out.add_term(sa | sb, ca * cb);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (s == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (int i = 0; i < 32; ++i)
      if (s & (std::uint32_t{1} << i)) os << "h" << (i + 1);
  }
  return os.str();
}

SubsetAlgebra::SubsetAlgebra(int n) : n_(n) {
  if (n < 1) throw DomainError("SubsetAlgebra requires n >= 1");
  if (n > kMaxPower)
    throw DomainError("SubsetAlgebra: n = " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(kMaxPower));
}

HilbertSeries SubsetAlgebra::hilbert_series() const {
  // Counted from the basis rather than expanded from (1 + t^2)^n.
  HilbertSeries s;
  for (std::uint32_t subset = 0; subset <= full_subset(); ++subset) s.add_term(degree_of(subset), 1);
  return s;
}

GradedDims SubsetAlgebra::graded_dims() const { return GradedDims::from_series(hilbert_series()); }

AlgebraElement SubsetAlgebra::generator(int i) const {
  if (i < 1 || i > n_) throw DomainError("generator index out of range");
  return AlgebraElement::basis(std::uint32_t{1} << (i - 1));
}

AlgebraElement SubsetAlgebra::diagonal_class() const {
  AlgebraElement h;
  for (int i = 1; i <= n_; ++i) h += generator(i);
  return h;
}

AlgebraElement SubsetAlgebra::orbit_sum(int k) const {
  AlgebraElement x;
  for (auto s : subsets_of_size(k)) x.add_term(s, 1);
  return x;
}

std::vector<std::uint32_t> SubsetAlgebra::subsets_of_size(int k) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t subset = 0; subset <= full_subset(); ++subset)
    if (std::popcount(subset) == k) out.push_back(subset);
  return out;
}

int SubsetAlgebra::degree_of(std::uint32_t subset) { return 2 * std::popcount(subset); }

AlgebraElement power(const AlgebraElement& x, unsigned k) {
  AlgebraElement result = AlgebraElement::basis(0);
  for (unsigned i = 0; i < k; ++i) result = result * x;
  return result;
}

namespace {

/// Scales a nonzero element to coprime integer coefficients with a positive
/// leading coefficient.
AlgebraElement primitive(const AlgebraElement& x) {
  if (x.is_zero()) return x;
  Integer denominators = 1;
  for (const auto& [s, c] : x.terms()) denominators = lcm(denominators, Integer(c.get_den()));
  AlgebraElement scaled = x * Rational(denominators);
  Integer g = 0;
  for (const auto& [s, c] : scaled.terms()) g = gcd(g, Integer(c.get_num()));
  if (scaled.terms().begin()->second < 0) g = -g;
  return scaled * (Rational(1) / Rational(g));
}

/// Projection of h_{1..k} onto the isotypic part, summed one coset of the
/// stabiliser S_k x S_{n-k} at a time instead of over all of S_n.
AlgebraElement project_orbit_representative(const SubsetAlgebra& algebra, int k,
                                            Character character) {
  const int n = algebra.n();
  // Sum of chi over the stabiliser. For the sign character it vanishes as
  // soon as either factor contains a transposition.
  Integer stabiliser_sum;
  if (character == Character::trivial)
    stabiliser_sum = factorial(k) * factorial(n - k);
  else
    stabiliser_sum = (k <= 1 && n - k <= 1) ? 1 : 0;
  AlgebraElement out;
  if (stabiliser_sum == 0) return out;

  const Rational weight = Rational(stabiliser_sum) / Rational(factorial(n));
  for (auto target : algebra.subsets_of_size(k)) {
    // Order-preserving bijections {1..k} -> target and between the complements.
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      if (target & (std::uint32_t{1} << i)) images.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!(target & (std::uint32_t{1} << i))) images.push_back(i);
    const int chi = character == Character::trivial ? 1 : Permutation(images).sign();
    out.add_term(target, weight * chi);
  }
  return out;
}

bool transforms_by(const SubsetAlgebra& algebra, const AlgebraElement& x, Character character) {
  for (int i = 0; i + 1 < algebra.n(); ++i) {
    const auto swapped = Permutation::transposition(algebra.n(), i, i + 1).act(x);
    const auto expected = character == Character::trivial ? x : x * Rational(-1);
    if (!(swapped == expected)) return false;
  }
  return true;
}

}  // namespace

InvariantSubalgebra invariant_subalgebra(const SubsetAlgebra& algebra, Character character) {
  const int n = algebra.n();
  InvariantSubalgebra out;
  out.n = n;
  out.character = character;

  for (int k = 0; k <= n; ++k) {
    auto v = project_orbit_representative(algebra, k, character);
    if (v.is_zero()) continue;
    out.dims.set(2 * k, out.dims.at(2 * k) + 1);
    out.basis.push_back(primitive(v));
  }

  out.basis_is_isotypic = true;
  for (const auto& b : out.basis)
    out.basis_is_isotypic = out.basis_is_isotypic && transforms_by(algebra, b, character);

  if (character == Character::sign) return out;

  const AlgebraElement h = algebra.diagonal_class();
  out.generator = h;
  out.relations.push_back("h^" + std::to_string(n + 1) + " = 0");

  out.powers_nonzero = true;
  out.generated_by_h = true;
  AlgebraElement hk = algebra.one();
  for (int k = 0; k <= n; ++k) {
    out.powers_nonzero = out.powers_nonzero && !hk.is_zero();
    // h^k = k! e_k, so h^k spans degree 2k exactly when e_k does.
    out.generated_by_h = out.generated_by_h &&
                         hk == algebra.orbit_sum(k) * Rational(factorial(k)) &&
                         out.dims.at(2 * k) == 1;
    if (k == n)
      out.top_power_matches =
          hk == AlgebraElement::basis(algebra.full_subset(), Rational(factorial(n)));
    hk = hk * h;
  }
  out.top_relation = hk.is_zero();
  out.dims_are_projective = out.dims == projective_space_dims(n);
  return out;
}

}  // namespace autoeq
