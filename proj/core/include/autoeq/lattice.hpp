#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autoeq/linalg.hpp"
#include "autoeq/linearized.hpp"

namespace autoeq {

using MukaiVector = IntVector;

/// Integral K-group of a surface with its Mukai pairing <.,.>; the Euler form
/// is chi(v, w) = -<v, w>, fixed here once for the whole module.
class MukaiLattice {
 public:
  MukaiLattice(IntMatrix gram, MukaiVector structure_sheaf, MukaiVector point);

  /// Rank-3 model (r, d, s) of a K3 surface with Picard rank 1:
  /// <(r,d,s),(r',d',s')> = 2k d d' - r s' - s r', O_X = (1,0,1), point = (0,0,1).
  static MukaiLattice k3(const Integer& half_degree = 1);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const MukaiVector& structure_sheaf() const { return v0_; }
  const MukaiVector& point() const { return point_; }

  Integer pairing(const MukaiVector& v, const MukaiVector& w) const;
  Integer euler_form(const MukaiVector& v, const MukaiVector& w) const { return -pairing(v, w); }
  /// chi(v) = chi(O_X, v).
  Integer euler_characteristic(const MukaiVector& v) const { return euler_form(v0_, v); }
  bool is_even() const;

  void check_member(const MukaiVector& v) const;

 private:
  IntMatrix gram_;
  MukaiVector v0_;
  MukaiVector point_;
};

/// Integer matrix preserving the Mukai pairing: M^T G M = G.
class ClassIsometry {
 public:
  /// Throws DomainError if the matrix is not an isometry of the lattice.
  ClassIsometry(const MukaiLattice& lattice, IntMatrix matrix);
  static ClassIsometry identity(const MukaiLattice& lattice);

  const IntMatrix& matrix() const { return matrix_; }
  MukaiVector operator()(const MukaiVector& v) const { return matrix_ * v; }
  /// (this * other)(v) = this(other(v)).
  ClassIsometry compose(const ClassIsometry& other) const;

  friend bool operator==(const ClassIsometry& a, const ClassIsometry& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  ClassIsometry() = default;
  IntMatrix matrix_;
};

/// K-class action of the spherical twist T_E: [T_E A] = [A] - chi(E, A)[E],
/// i.e. v -> v + <e, v> e. Requires <e, e> = -2.
MukaiVector spherical_reflection(const MukaiLattice& lattice, const MukaiVector& e,
                                 const MukaiVector& v);
ClassIsometry reflection_isometry(const MukaiLattice& lattice, const MukaiVector& e);

/// K-class action of the P-twist along a spherical E: the identity. Also
/// asserts that the reflection squares to the identity on v.
MukaiVector p_twist_class_action(const MukaiLattice& lattice, const MukaiVector& e,
                                 const MukaiVector& v);

/// a -> e a + (n-1) chi(a) a0 with e = chi(a0); DomainError when e = 0.
MukaiVector mu_map(const MukaiLattice& lattice, const MukaiVector& a, const MukaiVector& a0, int n);
IntMatrix mu_matrix(const MukaiLattice& lattice, const MukaiVector& a0, int n);

struct MuInjectivityReport {
  MukaiVector a0;
  int n = 0;
  Integer e;
  std::size_t kernel_dimension = 0;        // of mu over Q
  std::size_t quotient_kernel_dimension = 0;  // of mu composed with A -> A / Q a0
  bool quotient_kernel_is_a0_line = false; // mu(a) = 0 forces a in Q a0
  bool image_of_a0_is_ena0 = false;        // mu(a0) = e n a0 != 0
  std::size_t samples = 0;
  std::size_t samples_ok = 0;              // random a != 0 with mu(a) != 0

  bool injective() const {
    return kernel_dimension == 0 && quotient_kernel_is_a0_line && image_of_a0_is_ena0 &&
           samples_ok == samples;
  }
};

/// Exact rational kernel of mu together with the two-step argument: the
/// kernel lies on the line through a0, and a0 itself is not killed.
MuInjectivityReport mu_injectivity_check(const MukaiLattice& lattice, const MukaiVector& a0, int n,
                                         std::size_t samples, std::uint64_t seed = 1);

/// sum_d (-1)^d dim Hom^d(A, B) in D^{S_n}(X^n).
Integer equivariant_euler(const LinBoxObject& a, const LinBoxObject& b,
                          const HomOptions& options = {});

/// Element of the S_n-invariant part of K^{(x)n}, expanded in the orbit-sum
/// basis indexed by sorted index multisets.
class SymmetricTensor {
 public:
  SymmetricTensor(std::size_t rank, int power);

  std::size_t rank() const { return rank_; }
  int power() const { return power_; }
  const std::map<std::vector<int>, Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(const std::vector<int>& multiset) const;
  void set(std::vector<int> multiset, const Integer& value);

  /// Sum of v_{sigma(1)} (x) ... (x) v_{sigma(n)} over all sigma.
  static SymmetricTensor symmetrize(const std::vector<MukaiVector>& factors);
  /// Coefficients of a symmetric sum of pure tensors.
  static SymmetricTensor from_symmetric_sum(std::size_t rank,
                                            const std::vector<std::vector<MukaiVector>>& terms);

  /// All sorted multisets of size `power` from {0..rank-1}.
  static std::vector<std::vector<int>> basis(std::size_t rank, int power);

  friend bool operator==(const SymmetricTensor&, const SymmetricTensor&) = default;
  std::string to_string() const;

 private:
  std::size_t rank_;
  int power_;
  std::map<std::vector<int>, Integer> coeffs_;
};

/// [s(F)] = sum_i O (x) .. (x) F (slot i) (x) .. (x) O.
SymmetricTensor s_class(const MukaiLattice& lattice, const MukaiVector& f, int n);
/// [s'(F')] = sum_i phi(O) (x) .. (x) F' (slot i) (x) .. (x) phi(O).
SymmetricTensor s_prime_class(const MukaiLattice& lattice, const ClassIsometry& phi,
                              const MukaiVector& f_prime, int n);

/// phi^{(x)n} on the invariant tensor lattice, as a matrix in the orbit-sum basis.
class InducedClassMap {
 public:
  InducedClassMap(const ClassIsometry& phi, std::size_t rank, int n);

  const IntMatrix& matrix() const { return matrix_; }
  int power() const { return n_; }
  SymmetricTensor operator()(const SymmetricTensor& t) const;

  friend bool operator==(const InducedClassMap& a, const InducedClassMap& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t rank_;
  int n_;
  std::vector<std::vector<int>> basis_;
  IntMatrix matrix_;
};

InducedClassMap induced_class_map(const MukaiLattice& lattice, const ClassIsometry& phi, int n);

}  // namespace autoeq
