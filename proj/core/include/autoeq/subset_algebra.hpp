#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autoeq/graded.hpp"

namespace autoeq {

/// Largest tensor power the engine accepts; the subset basis has 2^n elements.
inline constexpr int kMaxPower = 12;

enum class Character { trivial, sign };

std::string to_string(Character c);

/// Element of k[h_1..h_n]/(h_i^2), keyed by the bitmask of the subset S in h_S.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement basis(std::uint32_t subset, const Rational& coefficient = 1);

  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::uint32_t subset) const;
  bool is_zero() const { return terms_.empty(); }

  /// Every term has the same degree 2|S|. The zero element is homogeneous.
  bool is_homogeneous() const;
  std::optional<int> degree() const;

  void add_term(std::uint32_t subset, const Rational& coefficient);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }

  /// h_S h_T = h_{S u T} if S and T are disjoint, else 0.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// e.g. "h1 - h2", "2*h1h2", "1".
  std::string to_string() const;

 private:
  std::map<std::uint32_t, Rational> terms_;
};

/// The graded algebra k[h_1,...,h_n]/(h_i^2) with deg h_i = 2, i.e. the
/// n-th tensor power of the cohomology ring of a 2-sphere.
class SubsetAlgebra {
 public:
  explicit SubsetAlgebra(int n);

  int n() const { return n_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
  std::uint32_t full_subset() const { return (std::uint32_t{1} << n_) - 1; }

  HilbertSeries hilbert_series() const;
  GradedDims graded_dims() const;

  AlgebraElement one() const { return AlgebraElement::basis(0); }
  /// h_i for 1 <= i <= n.
  AlgebraElement generator(int i) const;
  /// h_1 + ... + h_n.
  AlgebraElement diagonal_class() const;
  /// Sum of h_S over all |S| = k.
  AlgebraElement orbit_sum(int k) const;

  std::vector<std::uint32_t> subsets_of_size(int k) const;

  static int degree_of(std::uint32_t subset);

 private:
  int n_;
};

AlgebraElement power(const AlgebraElement& x, unsigned k);

/// Isotypic piece of a SubsetAlgebra together with ring-structure checks.
/// For the trivial character this is the invariant subalgebra, presented as
/// k[h]/(h^{n+1}) with h = h_1 + ... + h_n; for the sign character it is a
/// module without a presentation.
struct InvariantSubalgebra {
  int n = 0;
  Character character = Character::trivial;
  GradedDims dims;
  std::vector<AlgebraElement> basis;  // homogeneous, one list entry per basis vector
  std::optional<AlgebraElement> generator;
  std::vector<std::string> relations;

  bool basis_is_isotypic = false;    // checked on adjacent transpositions
  bool generated_by_h = false;       // h^k spans degree 2k, k = 0..n
  bool powers_nonzero = false;       // h^k != 0 for 0 <= k <= n
  bool top_relation = false;         // h^{n+1} = 0
  bool top_power_matches = false;    // h^n = n! h_{1..n}
  bool dims_are_projective = false;  // {0:1, 2:1, ..., 2n:1}

  bool ring_check_passed() const {
    return character == Character::trivial && basis_is_isotypic && generated_by_h &&
           powers_nonzero && top_relation && top_power_matches && dims_are_projective;
  }
};

InvariantSubalgebra invariant_subalgebra(const SubsetAlgebra& algebra, Character character);

}  // namespace autoeq
