#include "autoeq/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "autoeq/errors.hpp"
#include "autoeq/linalg.hpp"

namespace autoeq {

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("permutation images are not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto images = identity(n).images_;
  std::swap(images.at(static_cast<std::size_t>(i)), images.at(static_cast<std::size_t>(j)));
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(images));
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> parts;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i])) {
      seen[i] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

int Permutation::sign() const {
  if (images_.empty()) return 1;
  return cycle_type().sign();
}

std::uint32_t Permutation::act(std::uint32_t subset) const {
  std::uint32_t image = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (subset & (std::uint32_t{1} << i)) image |= std::uint32_t{1} << images_[i];
  return image;
}

AlgebraElement Permutation::act(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [s, c] : x.terms()) out.add_term(act(s), c);
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i] + 1;
  os << "]";
  return os.str();
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw DomainError("cycle lengths must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int CycleType::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Integer CycleType::centralizer_order() const {
  std::map<int, int> multiplicity;
  for (int p : parts_) ++multiplicity[p];
  Integer z = 1;
  for (const auto& [len, m] : multiplicity) {
    Integer lp;
    mpz_ui_pow_ui(lp.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(m));
    z *= lp * factorial(m);
  }
  return z;
}

Integer CycleType::class_size() const { return factorial(n()) / centralizer_order(); }

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {
void partitions_into(int remaining, int largest, std::vector<int>& prefix,
                     std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<CycleType> partitions(int n) {
  if (n < 1) throw DomainError("partitions require n >= 1");
  std::vector<CycleType> out;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

int character_value(Character character, const CycleType& type) {
  return character == Character::trivial ? 1 : type.sign();
}

namespace {

void check_power(int n) {
  if (n < 1) throw DomainError("symmetric group S_n requires n >= 1");
  if (n > kMaxPower)
    throw DomainError("n = " + std::to_string(n) + " exceeds the configured cap " +
                      std::to_string(kMaxPower));
}

/// Trace of an l-cycle acting on v^{(x)l}, as a series in t.
HilbertSeries cycle_trace(const GradedDims& v, int ell, bool koszul_signs) {
  HilbertSeries s;
  for (const auto& [d, dim] : v.entries()) {
    const bool negative = koszul_signs && (d % 2 != 0) && ((ell - 1) % 2 != 0);
    s.add_term(d * ell, negative ? Integer(-dim) : dim);
  }
  return s;
}

}  // namespace

GradedDims isotypic_dims(const GradedDims& v, int n, Character character,
                         const IsotypicOptions& options) {
  check_power(n);
  if (!options.koszul_signs && !v.all_even())
    throw DomainError("isotypic_dims: input " + v.to_string() +
                      " has odd degrees; only even gradings are supported");

  HilbertSeries sum;
  for (const auto& type : partitions(n)) {
    HilbertSeries term = HilbertSeries::one();
    for (int ell : type.parts()) term = term * cycle_trace(v, ell, options.koszul_signs);
    sum += term * Integer(type.class_size() * character_value(character, type));
  }
  // Both steps throw if the character inner product is not a genuine
  // dimension vector.
  return GradedDims::from_series(sum.divided_exactly(factorial(n)));
}

namespace {

template <class Visit>
void for_each_permutation(int n, Visit&& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

void check_brute_force_cap(int n) {
  if (n > kMaxBruteForcePower)
    throw DomainError("brute-force enumeration of S_" + std::to_string(n) + " exceeds the cap n <= " +
                      std::to_string(kMaxBruteForcePower));
}

}  // namespace

GradedDims brute_force_isotypic(const SubsetAlgebra& algebra, Character character) {
  const int n = algebra.n();
  check_brute_force_cap(n);

  // index of each subset within its degree block
  std::vector<std::size_t> index(algebra.full_subset() + 1);
  std::vector<std::size_t> block_size(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t s = 0; s <= algebra.full_subset(); ++s) {
    const auto k = static_cast<std::size_t>(SubsetAlgebra::degree_of(s) / 2);
    index[s] = block_size[k]++;
  }

  // n! times the projector, one integer block per degree.
  std::vector<std::vector<long long>> blocks(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
    blocks[k].assign(block_size[k] * block_size[k], 0);

  for_each_permutation(n, [&](const Permutation& sigma) {
    const int chi = character == Character::trivial ? 1 : sigma.sign();
    for (std::uint32_t s = 0; s <= algebra.full_subset(); ++s) {
      const auto k = static_cast<std::size_t>(SubsetAlgebra::degree_of(s) / 2);
      const std::uint32_t t = sigma.act(s);
      blocks[k][index[t] * block_size[k] + index[s]] += chi;
    }
  });

  GradedDims out;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    RatMatrix m(block_size[k], block_size[k]);
    for (std::size_t r = 0; r < block_size[k]; ++r)
      for (std::size_t c = 0; c < block_size[k]; ++c)
        m(r, c) = Rational(static_cast<long>(blocks[k][r * block_size[k] + c]));
    out.set(static_cast<int>(2 * k), Integer(static_cast<unsigned long>(rank(std::move(m)))));
  }
  return out;
}

AlgebraElement isotypic_projection(const SubsetAlgebra& algebra, const AlgebraElement& x,
                                   Character character) {
  check_brute_force_cap(algebra.n());
  AlgebraElement sum;
  for_each_permutation(algebra.n(), [&](const Permutation& sigma) {
    const int chi = character == Character::trivial ? 1 : sigma.sign();
    sum += sigma.act(x) * Rational(chi);
  });
  return sum * (Rational(1) / Rational(factorial(algebra.n())));
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (auto f : invariant_factors) o *= f;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    os << (i ? " x " : "") << "Z/" << invariant_factors[i];
  return os.str();
}

GroupCohomologyTable GroupCohomologyTable::lookup(GroupFamily family, int n) {
  if (n < 1) throw DomainError("group index must be >= 1");
  GroupCohomologyTable t;
  t.family = family;
  t.n = n;
  const auto un = static_cast<unsigned long>(n);
  if (family == GroupFamily::cyclic) {
    // H^1(Z/n) = Hom(Z/n, k*) = Z/n; H^2(Z/n; k*) = 0.
    if (n > 1) t.h1.invariant_factors = {un};
  } else {
    // Hom(S_n, k*) = Z/2 via the sign; Schur multiplier Z/2 from n = 4 on.
    if (n >= 2) t.h1.invariant_factors = {2};
    if (n >= 4) t.h2.invariant_factors = {2};
  }
  return t;
}

std::string GroupCohomologyTable::group_name() const {
  return (family == GroupFamily::cyclic ? "Z/" : "S_") + std::to_string(n);
}

Integer linearization_count(const GroupCohomologyTable& group, bool obstruction_vanishes) {
  return obstruction_vanishes ? group.h1.order() : Integer(0);
}

}  // namespace autoeq
