#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "autoeq/graded.hpp"
#include "autoeq/linearized.hpp"

namespace autoeq {

/// Objects on a K3 double cover pi: X~ -> X of an Enriques surface, with the
/// deck involution tau.
class CoverDeclarations {
 public:
  void add_generator(FormalGenerator g, bool tau_invariant = false);
  /// f in e^perp (and e in f^perp, by Serre duality on the cover).
  void declare_orthogonal(const std::string& e, const std::string& f);
  /// tau_* g in g^perp.
  void declare_tau_orthogonal(const std::string& g);
  /// A quotient object C in (pi_* e)^perp that is not itself a pushforward.
  void declare_quotient_companion(const std::string& c, const std::string& e);

  bool has(const std::string& name) const { return generators_.count(name) > 0; }
  const FormalGenerator& generator(const std::string& name) const;
  std::vector<std::string> generator_names() const;
  bool is_tau_invariant(const std::string& g) const { return tau_invariant_.count(g) > 0; }
  bool is_orthogonal(const std::string& e, const std::string& f) const;
  bool is_tau_orthogonal(const std::string& g) const { return tau_orthogonal_.count(g) > 0; }
  bool is_quotient_companion(const std::string& c, const std::string& e) const;
  std::vector<std::string> orthogonal_companions(const std::string& e) const;
  std::vector<std::string> quotient_companions(const std::string& e) const;
  bool has_quotient_object(const std::string& c) const;

  /// E~ spherical and tau-invariant, F~ spherical in E~^perp with tau_* F~ in
  /// F~^perp, C in (pi_* E~)^perp.
  static CoverDeclarations standard();

 private:
  std::map<std::string, FormalGenerator> generators_;
  std::set<std::string> tau_invariant_;
  std::set<std::pair<std::string, std::string>> orthogonal_;
  std::set<std::string> tau_orthogonal_;
  std::set<std::pair<std::string, std::string>> quotient_companions_;
};

/// tau^{tau_power}_* of a generator, shifted.
struct CoverSummand {
  std::string gen;
  int tau_power = 0;
  int shift = 0;

  friend auto operator<=>(const CoverSummand&, const CoverSummand&) = default;
  std::string to_string() const;
};

/// Formal direct sum on the cover. Tau powers are reduced mod 2, and set to 0
/// for tau-invariant generators.
class CoverObject {
 public:
  CoverObject() = default;
  CoverObject(const CoverDeclarations& decls, std::vector<CoverSummand> summands);
  static CoverObject single(const CoverDeclarations& decls, const std::string& gen, int tau_power = 0,
                            int shift = 0);

  const std::vector<CoverSummand>& summands() const { return summands_; }
  CoverObject tau(const CoverDeclarations& decls) const;
  CoverObject operator+(const CoverObject& other) const;

  friend bool operator==(const CoverObject&, const CoverObject&) = default;
  std::string to_string() const;

 private:
  std::vector<CoverSummand> summands_;
};

/// pi_*(gen)[shift] or C (x) omega^{omega_power} [shift].
struct QuotientSummand {
  enum class Kind { push, free };
  Kind kind = Kind::push;
  std::string name;
  int omega_power = 0;
  int shift = 0;

  static QuotientSummand push(std::string gen, int shift = 0) {
    return {Kind::push, std::move(gen), 0, shift};
  }
  static QuotientSummand free(std::string c, int omega_power = 0, int shift = 0) {
    return {Kind::free, std::move(c), omega_power & 1, shift};
  }

  friend auto operator<=>(const QuotientSummand&, const QuotientSummand&) = default;
  std::string to_string() const;
};

/// Formal direct sum on the Enriques surface. pi_* tau_* = pi_* and
/// pi_*(A) (x) omega = pi_*(A) are applied on construction.
class QuotientObject {
 public:
  QuotientObject() = default;
  explicit QuotientObject(std::vector<QuotientSummand> summands);
  static QuotientObject pushforward(const CoverObject& a);
  /// C (+) C (x) omega.
  static QuotientObject companion_pair(const std::string& c, int shift = 0);

  const std::vector<QuotientSummand>& summands() const { return summands_; }
  bool is_pushforward() const;
  QuotientObject twist_by_omega() const;
  QuotientObject shifted(int k) const;

  friend bool operator==(const QuotientObject&, const QuotientObject&) = default;
  std::string to_string() const;

 private:
  std::vector<QuotientSummand> summands_;
};

/// pi^* pi_* A = A (+) tau_* A.
CoverObject pullback_pushforward(const CoverDeclarations& decls, const CoverObject& a);

/// Hom^* on the cover from the rules: endomorphisms of one generator, zero
/// between declared orthogonal generators and their tau-translates.
/// ClosureError otherwise.
GradedDims cover_hom(const CoverDeclarations& decls, const CoverSummand& a, const CoverSummand& b);
GradedDims cover_hom(const CoverDeclarations& decls, const CoverObject& a, const CoverObject& b);

/// Hom(pi_* A, pi_* B) = Hom(A (+) tau_* A, B) by adjunction.
GradedDims hom_on_quotient(const CoverDeclarations& decls, const QuotientObject& a,
                           const QuotientObject& b);

/// Equivariant functor labels on the cover.
struct CoverFunctor {
  enum class Kind { identity, twist, deck };
  Kind kind = Kind::identity;
  std::string gen;

  static CoverFunctor identity() { return {}; }
  static CoverFunctor twist(std::string gen) { return {Kind::twist, std::move(gen)}; }
  static CoverFunctor deck() { return {Kind::deck, {}}; }

  friend bool operator==(const CoverFunctor&, const CoverFunctor&) = default;
  std::string to_string() const;
};

/// Phi o M_omega^{omega_power} on D(X).
struct DescendedFunctor {
  CoverFunctor base;
  int omega_power = 0;

  friend bool operator==(const DescendedFunctor&, const DescendedFunctor&) = default;
  std::string to_string() const;
};

struct DescentPair {
  CoverFunctor lifted;
  CoverFunctor base;
  DescendedFunctor first;
  DescendedFunctor second;

  bool differ_by_omega() const {
    return first.base == second.base && (first.omega_power ^ second.omega_power) == 1;
  }
};

/// Rejects a twist along a generator that is not tau-invariant.
DescentPair descend(const CoverDeclarations& decls, const CoverFunctor& functor);

struct DescendedImage {
  QuotientObject object;
  /// One entry per companion pair C (+) C (x) omega whose image is only known
  /// up to Phi(C) = C or C (x) omega.
  std::vector<std::string> ambiguities;

  bool ambiguous() const { return !ambiguities.empty(); }
};

DescendedImage apply_descended(const CoverDeclarations& decls, const DescendedFunctor& phi,
                               const QuotientObject& a);

/// Shift by which phi^{[n]} acts on the box power a^{(x)n} of a single
/// shifted pushforward or companion pair.
int descended_box_shift(const CoverDeclarations& decls, const DescendedFunctor& phi,
                        const QuotientObject& factor, int n);

struct LiftRow {
  std::string functor;               // element of Aut D(Z)
  std::vector<std::string> lifts;    // its class in Aut_eq D(Z~) / <tau_*>
};

struct LiftDescendTable {
  int order = 2;
  std::vector<LiftRow> rows;
  std::vector<std::size_t> lift_fibre_sizes;     // preimages of each lifted class
  std::vector<std::size_t> descend_fibre_sizes;  // preimages of each descended class
  bool lift_descend_loses_deck_orbit = false;
  bool descend_lift_loses_omega_orbit = false;
  std::vector<std::string> summary;

  bool k_to_one() const;
};

/// Group model with deck group <tau_*> = Z/k on the cover and <M_omega> = Z/k
/// downstairs, over the base labels Id and Phi.
LiftDescendTable lift_descend_bookkeeping(int order);

}  // namespace autoeq
