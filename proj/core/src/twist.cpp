#include "autoeq/twist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq {

Letter Letter::inverted() const {
  Letter out = *this;
  if (kind == LetterKind::identity) return out;
  if (kind == LetterKind::shift) {
    out.amount = -amount;
    return out;
  }
  out.inverse = !inverse;
  return out;
}

std::string Letter::base_string() const {
  std::ostringstream os;
  switch (kind) {
    case LetterKind::identity: os << "Id"; break;
    case LetterKind::twist: os << "T[" << gen << "]"; break;
    case LetterKind::p_twist: os << "P[" << gen << "]"; break;
    case LetterKind::induced_twist: os << "Tind[" << gen << "," << n << "," << symbol(sign) << "]"; break;
    case LetterKind::induced_p_twist: os << "Pind[" << gen << "," << n << "," << symbol(sign) << "]"; break;
    case LetterKind::big_p_twist: os << "Pbig[" << gen << "," << symbol(sign) << "," << n << "]"; break;
    case LetterKind::shift: os << "S(" << amount << ")"; break;
  }
  return os.str();
}

std::string Letter::to_string() const { return base_string() + (inverse ? "^-1" : ""); }

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  FunctorWord parse() {
    std::vector<Letter> letters;
    skip_separators();
    while (pos_ < text_.size()) {
      const Letter base = parse_atom();
      int exponent = 1;
      if (peek('^')) {
        ++pos_;
        exponent = parse_int();
      }
      if (base.kind == LetterKind::shift) {
        // S(k)^m is the single shift by k*m.
        if (exponent != 0) letters.push_back(Letter::shift_by(base.amount * exponent));
      } else if (base.kind == LetterKind::identity) {
        letters.push_back(base);
      } else {
        const Letter unit = exponent < 0 ? base.inverted() : base;
        for (int i = 0; i < std::abs(exponent); ++i) letters.push_back(unit);
      }
      const std::size_t before = pos_;
      skip_separators();
      if (pos_ < text_.size() && pos_ == before) fail("expected a separator between letters");
    }
    return FunctorWord(std::move(letters));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("functor word '" + text_ + "', position " + std::to_string(pos_ + 1) + ": " +
                      what);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(const std::string& keyword) {
    if (text_.compare(pos_, keyword.size(), keyword) != 0) return false;
    pos_ += keyword.size();
    return true;
  }

  void skip_separators() {
    static const std::string compose_sign = "\xE2\x88\x98";
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
        ++pos_;
      } else if (text_.compare(pos_, compose_sign.size(), compose_sign) == 0) {
        pos_ += compose_sign.size();
      } else {
        break;
      }
    }
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~' || c == '\'')
        ++pos_;
      else
        break;
    }
    if (pos_ == start) fail("expected a generator name");
    return text_.substr(start, pos_ - start);
  }

  int parse_int() {
    const std::size_t start = pos_;
    if (peek('-') || peek('+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])))
      fail("expected an integer");
    try {
      return std::stoi(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  Sign parse_sign_token() {
    if (peek('+')) {
      ++pos_;
      return Sign::plus;
    }
    if (peek('-')) {
      ++pos_;
      return Sign::minus;
    }
    fail("expected a linearisation sign + or -");
  }

  int parse_power() {
    const int n = parse_int();
    if (n < 1) fail("box power must be >= 1");
    return n;
  }

  Letter parse_atom() {
    if (consume("Id")) return Letter::identity();
    if (consume("Tind[") || consume("Pind[")) {
      const bool is_t = text_[pos_ - 5] == 'T';
      auto gen = parse_name();
      expect(',');
      const int n = parse_power();
      expect(',');
      const Sign s = parse_sign_token();
      expect(']');
      return is_t ? Letter::induced_twist(gen, n, s) : Letter::induced_p_twist(gen, n, s);
    }
    if (consume("Pbig[")) {
      auto gen = parse_name();
      expect(',');
      const Sign s = parse_sign_token();
      expect(',');
      const int n = parse_power();
      expect(']');
      return Letter::big_p_twist(gen, s, n);
    }
    if (consume("T[") || consume("P[")) {
      const bool is_t = text_[pos_ - 2] == 'T';
      auto gen = parse_name();
      expect(']');
      return is_t ? Letter::twist(gen) : Letter::p_twist(gen);
    }
    if (consume("S(")) {
      const int k = parse_int();
      expect(')');
      return Letter::shift_by(k);
    }
    fail("unknown letter (expected Id, T[..], P[..], Tind[..], Pind[..], Pbig[..] or S(..))");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctorWord FunctorWord::parse(const std::string& text) { return WordParser(text).parse(); }

FunctorWord FunctorWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return FunctorWord(std::move(out));
}

FunctorWord FunctorWord::power(int k) const {
  const FunctorWord unit = k < 0 ? inverse() : *this;
  FunctorWord out;
  for (int i = 0; i < std::abs(k); ++i) out = out * unit;
  return out;
}

FunctorWord operator*(const FunctorWord& a, const FunctorWord& b) {
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return FunctorWord(std::move(letters));
}

std::string FunctorWord::to_string() const {
  if (letters_.empty()) return "Id";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<int>(j - i);
    const Letter& l = letters_[i];
    if (i > 0) os << " ";
    // Shifts and identities are printed one per letter so parsing gives back
    // the same letter sequence.
    if (l.kind == LetterKind::shift || l.kind == LetterKind::identity || run == 1) {
      os << l.to_string();
      for (int r = 1; r < run; ++r) os << " " << l.to_string();
    } else {
      os << l.base_string() << "^" << (l.inverse ? -run : run);
    }
    i = j;
  }
  return os.str();
}

namespace {

/// Shift produced by the non-inverted letter on the object, or ClosureError.
int letter_shift(const Declarations& decls, const Letter& letter, const LinBoxObject& x) {
  const std::string& name = x.gen.name();
  auto outside = [&](const std::string& why) -> ClosureError {
    return ClosureError(letter.to_string() + " on " + x.to_string() + ": " + why);
  };
  auto require_spherical = [&](bool surface_only) -> const FormalGenerator& {
    const FormalGenerator& e = decls.generator(letter.gen);
    if (!is_spherical(e)) throw outside(letter.gen + " is not spherical");
    if (surface_only && e.dim() != 2) throw outside(letter.gen + " does not live on a surface");
    return e;
  };
  const bool orthogonal = decls.has(letter.gen) && decls.is_orthogonal(letter.gen, name);

  switch (letter.kind) {
    case LetterKind::identity:
      return 0;
    case LetterKind::shift:
      return letter.amount;
    case LetterKind::twist:
    case LetterKind::p_twist: {
      const auto& e = require_spherical(letter.kind == LetterKind::p_twist);
      if (x.n != 1) throw outside("acts on D(X), not on a box power");
      if (orthogonal) return 0;
      if (name != e.name()) throw outside(name + " is neither " + e.name() + " nor in its orthogonal");
      // T_E(E) = E[1-d]; P_E(E) = E[-2] for the P^1-object E, equal to T_E^2(E).
      return letter.kind == LetterKind::twist ? 1 - e.dim() : 2 * (1 - e.dim());
    }
    case LetterKind::induced_twist:
    case LetterKind::induced_p_twist: {
      const auto& e = require_spherical(letter.kind == LetterKind::induced_p_twist);
      if (x.n != letter.n)
        throw outside("induced to power " + std::to_string(letter.n) + ", object has power " +
                      std::to_string(x.n));
      if (orthogonal) return 0;
      if (name != e.name()) throw outside(name + " is neither " + e.name() + " nor in its orthogonal");
      // Underlying functor is T_E^{x n} (resp. P_E^{x n}); both linearisations
      // of E^{(x)n} go to the same-sign object.
      const int per_factor = 1 - e.dim();
      return (letter.kind == LetterKind::induced_twist ? 1 : 2) * letter.n * per_factor;
    }
    case LetterKind::big_p_twist: {
      require_spherical(true);
      if (x.n != letter.n)
        throw outside("P^" + std::to_string(letter.n) + "-twist on an object of power " +
                      std::to_string(x.n));
      if (orthogonal) return 0;
      if (name != letter.gen) throw outside(name + " is neither " + letter.gen + " nor in its orthogonal");
      return x.sign == letter.sign ? -2 * letter.n : 0;
    }
  }
  throw outside("unhandled letter");
}

}  // namespace

LinBoxObject apply(const Declarations& decls, const Letter& letter, const LinBoxObject& object) {
  const int k = letter_shift(decls, letter, object);
  return object.shifted(letter.inverse ? -k : k);
}

LinBoxObject apply(const Declarations& decls, const FunctorWord& word, const LinBoxObject& object) {
  LinBoxObject x = object;
  for (const auto& letter : word.letters()) x = apply(decls, letter, x);
  return x;
}

std::string RelationReport::to_string() const {
  std::ostringstream os;
  if (agree) {
    os << "agree on " << checked << " object(s)";
  } else if (mismatch) {
    os << "mismatch on " << mismatch->object.to_string() << ": " << mismatch->lhs_value.to_string()
       << " vs " << mismatch->rhs_value.to_string();
  }
  return os.str();
}

RelationReport check_relation(const Declarations& decls, const FunctorWord& lhs,
                              const FunctorWord& rhs, const std::vector<LinBoxObject>& testset) {
  RelationReport report;
  for (const auto& x : testset) {
    auto l = apply(decls, lhs, x);
    auto r = apply(decls, rhs, x);
    ++report.checked;
    if (!(l == r)) {
      report.agree = false;
      report.mismatch = RelationMismatch{x, std::move(l), std::move(r)};
      return report;
    }
  }
  return report;
}

std::vector<LinBoxObject> rule_closure(const Declarations& decls, const FunctorWord& word) {
  std::set<int> powers;
  std::vector<std::string> names;
  auto add_name = [&](const std::string& g) {
    if (decls.has(g) && std::find(names.begin(), names.end(), g) == names.end()) names.push_back(g);
  };
  for (const auto& l : word.letters()) {
    switch (l.kind) {
      case LetterKind::twist:
      case LetterKind::p_twist:
        powers.insert(1);
        add_name(l.gen);
        break;
      case LetterKind::induced_twist:
      case LetterKind::induced_p_twist:
      case LetterKind::big_p_twist:
        powers.insert(l.n);
        add_name(l.gen);
        break;
      default:
        break;
    }
  }
  const std::size_t named = names.size();
  for (std::size_t i = 0; i < named; ++i)
    for (const auto& c : decls.companions_of(names[i])) add_name(c.name);
  if (names.empty())
    for (const auto& [name, g] : decls.generators()) add_name(name);
  if (powers.empty()) powers.insert(1);

  std::vector<LinBoxObject> out;
  for (int n : powers)
    for (const auto& name : names) {
      const auto& g = decls.generator(name);
      out.emplace_back(g, n, 0, Sign::plus);
      if (n > 1) out.emplace_back(g, n, 0, Sign::minus);
    }
  return out;
}

std::string ExoticnessWitness::to_string() const {
  if (!found) return "no witness found in closure";
  std::ostringstream os;
  os << first->to_string() << " -> [" << first_shift << "], " << second->to_string() << " -> ["
     << second_shift << "]";
  return os.str();
}

ExoticnessWitness exoticness_witness(const Declarations& decls, const FunctorWord& word,
                                     const std::vector<LinBoxObject>& candidates) {
  // Values grouped by power: objects of different powers live in different
  // categories.
  std::map<int, std::vector<std::pair<LinBoxObject, int>>> values;
  for (const auto& x : candidates) {
    try {
      const auto y = apply(decls, word, x);
      if (!(y.unshifted() == x.unshifted())) continue;
      values[x.n].emplace_back(x, y.shift - x.shift);
    } catch (const ClosureError&) {
      continue;
    }
  }
  for (const auto& [n, group] : values) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (group[i].second != group[j].second)
          return {true, group[i].first, group[j].first, group[i].second, group[j].second};
  }
  return {};
}

ExoticnessWitness exoticness_witness(const Declarations& decls, const FunctorWord& word) {
  return exoticness_witness(decls, word, rule_closure(decls, word));
}

bool kernels_distinct(const Letter& a, const Letter& b) {
  if (!a.is_induced() || !b.is_induced())
    throw DomainError("kernels_distinct compares induced letters; got " + a.to_string() + " and " +
                      b.to_string());
  if (a.gen != b.gen || a.n != b.n)
    throw DomainError("kernels_distinct needs one generator and power; got " + a.to_string() +
                      " and " + b.to_string());
  if (a.kind != b.kind || a.inverse != b.inverse) return true;
  // The kernel of an autoequivalence is simple; model its two diagonal
  // linearisations on the n-th box power and compare them.
  const FormalGenerator kernel("kernel(" + a.base_string() + ")", GradedDims{{0, 1}}, 4, false);
  const LinBoxObject ka(kernel, a.n, 0, a.sign);
  const LinBoxObject kb(kernel, b.n, 0, b.sign);
  return !are_isomorphic(ka, kb).isomorphic;
}

ValueTable value_table(const Declarations& decls, const std::string& gen, int n) {
  const auto& e = decls.generator(gen);
  ValueTable table;
  table.gen = gen;
  table.n = n;
  table.columns = {LinBoxObject(e, n, 0, Sign::plus), LinBoxObject(e, n, 0, Sign::minus)};

  const std::vector<std::pair<std::string, Letter>> functors = {
      {"P_{" + gen + "^{[" + std::to_string(n) + "]}}", Letter::big_p_twist(gen, Sign::plus, n)},
      {"P_{" + gen + "^{-[" + std::to_string(n) + "]}}", Letter::big_p_twist(gen, Sign::minus, n)},
      {"T_" + gen + "^{[" + std::to_string(n) + "]}", Letter::induced_twist(gen, n, Sign::plus)},
      {"T_" + gen + "^{-[" + std::to_string(n) + "]}", Letter::induced_twist(gen, n, Sign::minus)},
  };
  for (const auto& [label, letter] : functors) {
    ValueTableRow row{label, letter, {}, {}};
    for (const auto& x : table.columns) {
      auto y = apply(decls, letter, x);
      row.shifts.push_back(y.shift - x.shift);
      row.images.push_back(std::move(y));
    }
    table.rows.push_back(std::move(row));
  }
  if (n == 1)
    table.notes.push_back("n = 1: " + gen + "^{[1]} = " + gen + "^{-[1]} = " + gen +
                          "; the two columns are formal labels of one object");
  return table;
}

}  // namespace autoeq
