#pragma once

#include <string>
#include <vector>

#include "autoeq/graded.hpp"
#include "autoeq/subset_algebra.hpp"

namespace autoeq {

/// Largest n for which the permutation-enumerating oracles run.
inline constexpr int kMaxBruteForcePower = 8;

Integer factorial(int n);

class CycleType;

/// A bijection of {0, ..., n-1}; printed 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition of the 0-based points i and j.
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const { return images_; }

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  CycleType cycle_type() const;

  /// Image of a subset bitmask.
  std::uint32_t act(std::uint32_t subset) const;
  AlgebraElement act(const AlgebraElement& x) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Multiset of cycle lengths, stored in descending order.
class CycleType {
 public:
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  int length() const { return static_cast<int>(parts_.size()); }

  /// prod_l l^{m_l} m_l!
  Integer centralizer_order() const;
  /// n! / centralizer_order
  Integer class_size() const;
  int sign() const { return ((n() - length()) % 2 == 0) ? 1 : -1; }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// All cycle types of S_n in reverse lexicographic order, starting at (n).
std::vector<CycleType> partitions(int n);

int character_value(Character character, const CycleType& type);

struct IsotypicOptions {
  /// Permit odd degrees and let a cycle of length l on a degree-d vector
  /// contribute the Koszul sign (-1)^{d(l-1)} to the trace. Experimental.
  bool koszul_signs = false;
};

/// Graded dimensions of the character-isotypic part of v^{(x)n}, computed
/// from the cycle index: (1/n!) sum_lambda |C_lambda| chi(lambda) prod_l v(t^l).
GradedDims isotypic_dims(const GradedDims& v, int n, Character character,
                         const IsotypicOptions& options = {});

/// The same quantity for v = 1 + t^2, obtained as the rank of the explicit
/// projector sum_sigma chi(sigma) sigma on the subset basis. n <= 8.
GradedDims brute_force_isotypic(const SubsetAlgebra& algebra, Character character);

/// (1/n!) sum_sigma chi(sigma) sigma . x. n <= 8.
AlgebraElement isotypic_projection(const SubsetAlgebra& algebra, const AlgebraElement& x,
                                   Character character);

/// Finite abelian group given by invariant factors; the empty list is 0.
struct FiniteAbelianGroup {
  std::vector<unsigned long> invariant_factors;

  Integer order() const;
  bool is_trivial() const { return order() == 1; }
  std::string to_string() const;
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

enum class GroupFamily { cyclic, symmetric };

/// H^1(G; k*) and the Schur multiplier H^2(G; k*) for cyclic and symmetric
/// groups, k algebraically closed of characteristic 0.
struct GroupCohomologyTable {
  GroupFamily family = GroupFamily::cyclic;
  int n = 1;
  FiniteAbelianGroup h1;
  FiniteAbelianGroup h2;

  static GroupCohomologyTable lookup(GroupFamily family, int n);
  std::string group_name() const;
};

/// Number of G-linearisations of a simple invariant object: |H^1| when the
/// obstruction class vanishes, otherwise none.
Integer linearization_count(const GroupCohomologyTable& group, bool obstruction_vanishes);

}  // namespace autoeq
