#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "autoeq/graded.hpp"
#include "autoeq/subset_algebra.hpp"
#include "autoeq/symmetric_group.hpp"

namespace autoeq {

/// Which of the two S_n-linearisations of a box power: the canonical one
/// (plus) or its twist by the sign character (minus).
enum class Sign : int { plus = 1, minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return value(a) * value(b) == 1 ? Sign::plus : Sign::minus; }
inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
Sign sign_from_int(int s);
/// "+" or "-"
std::string symbol(Sign s);
Sign parse_sign(const std::string& text);

/// An object of D(X) known only through its graded endomorphism algebra.
class FormalGenerator {
 public:
  /// Throws DomainError unless endo has dimension 1 in degree 0.
  FormalGenerator(std::string name, GradedDims endo, int dim = 2, bool calabi_yau = true);

  /// Ext^* = k + k[-dim].
  static FormalGenerator spherical(std::string name, int dim = 2);

  const std::string& name() const { return name_; }
  const GradedDims& endo() const { return endo_; }
  int dim() const { return dim_; }
  bool calabi_yau() const { return calabi_yau_; }

  friend bool operator==(const FormalGenerator&, const FormalGenerator&) = default;

 private:
  std::string name_;
  GradedDims endo_;
  int dim_;
  bool calabi_yau_;
};

bool is_spherical(const FormalGenerator& g);

/// gen^{(x)n}[shift] on X^n with one of its two linearisations. For n = 1 the
/// sign carries no information: E^{+[1]} and E^{-[1]} are both E.
struct LinBoxObject {
  FormalGenerator gen;
  int n = 1;
  int shift = 0;
  Sign sign = Sign::plus;

  LinBoxObject(FormalGenerator g, int power = 1, int shift_by = 0, Sign s = Sign::plus);

  LinBoxObject shifted(int k) const;
  /// Same object with shift reset to 0.
  LinBoxObject unshifted() const;

  /// Rules and tables compare the formal label, sign included.
  friend bool operator==(const LinBoxObject& a, const LinBoxObject& b) {
    return a.gen == b.gen && a.n == b.n && a.shift == b.shift && a.sign == b.sign;
  }

  /// e.g. "E", "E[-1]", "E^{[3]}", "E^{-[2]}[1]".
  std::string to_string() const;
};

/// Declares F in E^perp: Hom^*(E, F) = 0.
struct OrthogonalCompanion {
  std::string name;
  std::string of;
};

/// Registry of generators and orthogonality declarations; the rule closure
/// for Hom computations and functor values.
class Declarations {
 public:
  void add_generator(FormalGenerator g);
  /// `companion` in `generator`^perp. Both must be registered.
  void declare_orthogonal(const std::string& generator, const std::string& companion);

  bool has(const std::string& name) const { return generators_.count(name) > 0; }
  const FormalGenerator& generator(const std::string& name) const;
  const std::map<std::string, FormalGenerator>& generators() const { return generators_; }

  /// True iff f in e^perp was declared.
  bool is_orthogonal(const std::string& e, const std::string& f) const;
  std::vector<OrthogonalCompanion> companions_of(const std::string& e) const;
  const std::vector<OrthogonalCompanion>& companions() const { return companions_; }

  /// E spherical of dimension 2 with one spherical companion F in E^perp.
  static Declarations standard();

 private:
  std::map<std::string, FormalGenerator> generators_;
  std::vector<OrthogonalCompanion> companions_;
};

struct HomOptions {
  /// Experimental: Koszul signs on the factor-swap action; permits
  /// generators with odd-degree Ext groups. Off by default.
  bool koszul_signs = false;
};

/// Hom^*(A, B) in D^{S_n}(X^n) for box powers of one generator: the trivial
/// or sign isotypic part of End^*(E)^{(x)n}, according to the product of the
/// two linearisation signs, shifted by B.shift - A.shift.
GradedDims equivariant_hom(const LinBoxObject& a, const LinBoxObject& b,
                           const HomOptions& options = {});

/// As above, plus the declared orthogonality rule: Hom(E^{..[n]}, F^{..[n]}) = 0
/// for F in E^perp (Kunneth on the underlying box products).
GradedDims equivariant_hom(const Declarations& decls, const LinBoxObject& a,
                           const LinBoxObject& b, const HomOptions& options = {});

struct PnObjectReport {
  LinBoxObject object;
  GradedDims endomorphisms;
  bool dims_match = false;  // = {0:1, 2:1, ..., 2n:1}
  InvariantSubalgebra ring;
  bool ring_matches = false;

  bool is_pn_object() const { return dims_match && ring_matches; }
};

/// Checks that a linearised box power of a spherical surface object is a
/// P^n-object: graded dimensions and the ring structure k[h]/h^{n+1}.
/// Throws DomainError for a generator that is not spherical with dim 2.
PnObjectReport is_pn_object(const LinBoxObject& a, const HomOptions& options = {});

struct IsomorphismVerdict {
  bool isomorphic = false;
  std::string reason;
  /// Hom^0 between the unshifted objects, when signs were compared.
  std::optional<Integer> degree_zero_hom;
};

/// Same generator and power required. Different linearisations are shown to
/// be non-isomorphic by computing Hom^0 = 0, not by assumption.
IsomorphismVerdict are_isomorphic(const LinBoxObject& a, const LinBoxObject& b,
                                  const HomOptions& options = {});

}  // namespace autoeq
