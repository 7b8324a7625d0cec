#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoeq/linearized.hpp"

namespace autoeq {

enum class LetterKind {
  identity,
  twist,           // T[E]: spherical twist on D(X)
  p_twist,         // P[E]: P-twist along a spherical object on a surface
  induced_twist,   // Tind[E,n,s]: T_E induced to D^{S_n}(X^n) with kernel linearisation s
  induced_p_twist, // Pind[E,n,s]: P_E induced likewise
  big_p_twist,     // Pbig[E,s,n]: P^n-twist along the P^n-object E^{s[n]}
  shift,           // S(k)
};

/// One generator of a functor word. `inverse` marks the inverse autoequivalence.
struct Letter {
  LetterKind kind = LetterKind::identity;
  std::string gen;
  int n = 1;
  Sign sign = Sign::plus;
  int amount = 0;
  bool inverse = false;

  static Letter identity() { return {}; }
  static Letter twist(std::string gen) { return {LetterKind::twist, std::move(gen)}; }
  static Letter p_twist(std::string gen) { return {LetterKind::p_twist, std::move(gen)}; }
  static Letter induced_twist(std::string gen, int n, Sign s) {
    return {LetterKind::induced_twist, std::move(gen), n, s};
  }
  static Letter induced_p_twist(std::string gen, int n, Sign s) {
    return {LetterKind::induced_p_twist, std::move(gen), n, s};
  }
  static Letter big_p_twist(std::string gen, Sign s, int n) {
    return {LetterKind::big_p_twist, std::move(gen), n, s};
  }
  static Letter shift_by(int k) { return {LetterKind::shift, {}, 1, Sign::plus, k}; }

  Letter inverted() const;
  bool is_induced() const {
    return kind == LetterKind::induced_twist || kind == LetterKind::induced_p_twist;
  }

  friend bool operator==(const Letter&, const Letter&) = default;

  /// Text syntax without the power suffix, e.g. "Tind[E,3,+]".
  std::string base_string() const;
  std::string to_string() const;
};

/// A composite of letters, applied in sequence from first to last. The
/// empty word is the identity.
class FunctorWord {
 public:
  FunctorWord() = default;
  explicit FunctorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  FunctorWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Parses e.g. "T[E]^2", "Tind[E,3,+] S(2)", "Pbig[E,+,3]^-1 * Id".
  /// Letters are separated by whitespace, '*', '.' or the composition sign.
  /// Throws ConfigError with the offending position.
  static FunctorWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  FunctorWord inverse() const;
  FunctorWord power(int k) const;
  /// a then b.
  friend FunctorWord operator*(const FunctorWord& a, const FunctorWord& b);
  friend bool operator==(const FunctorWord&, const FunctorWord&) = default;

  /// Canonical text, runs of equal letters folded into powers; parse() inverts it.
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Value of one letter on a formal object. Throws ClosureError when the rules
/// do not determine the value.
LinBoxObject apply(const Declarations& decls, const Letter& letter, const LinBoxObject& object);
LinBoxObject apply(const Declarations& decls, const FunctorWord& word, const LinBoxObject& object);

struct RelationMismatch {
  LinBoxObject object;
  LinBoxObject lhs_value;
  LinBoxObject rhs_value;
};

struct RelationReport {
  bool agree = true;
  std::size_t checked = 0;
  std::optional<RelationMismatch> mismatch;

  std::string to_string() const;
};

/// Compares two words on every test object (object label and shift).
RelationReport check_relation(const Declarations& decls, const FunctorWord& lhs,
                              const FunctorWord& rhs, const std::vector<LinBoxObject>& testset);

/// Candidate objects for a word: for every power the word acts on, both
/// linearisations of each generator it names and of their declared companions.
/// A word naming no generator gets every declared generator at power 1.
std::vector<LinBoxObject> rule_closure(const Declarations& decls, const FunctorWord& word);

struct ExoticnessWitness {
  bool found = false;
  std::optional<LinBoxObject> first;
  std::optional<LinBoxObject> second;
  int first_shift = 0;
  int second_shift = 0;

  std::string to_string() const;
};

/// Searches the candidates for two objects of one category that the word
/// shifts by different amounts. A standard autoequivalence shifts every
/// object by the same amount, so a hit certifies the word is not standard.
ExoticnessWitness exoticness_witness(const Declarations& decls, const FunctorWord& word,
                                     const std::vector<LinBoxObject>& candidates);
ExoticnessWitness exoticness_witness(const Declarations& decls, const FunctorWord& word);

/// Two induced letters over one generator and power have non-isomorphic
/// kernels iff their kernel linearisations differ (for n >= 2). Throws
/// DomainError for letters that are not induced.
bool kernels_distinct(const Letter& a, const Letter& b);

struct ValueTableRow {
  std::string functor;
  Letter letter;
  std::vector<LinBoxObject> images;
  std::vector<int> shifts;
};

/// Values of P_{E^{[n]}}, P_{E^{-[n]}}, T_E^{[n]}, T_E^{-[n]} on E^{[n]} and E^{-[n]}.
struct ValueTable {
  std::string gen;
  int n = 1;
  std::vector<LinBoxObject> columns;
  std::vector<ValueTableRow> rows;
  std::vector<std::string> notes;
};

ValueTable value_table(const Declarations& decls, const std::string& gen, int n);

}  // namespace autoeq
