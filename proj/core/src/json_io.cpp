#include "autoeq/json_io.hpp"

#include <limits>

#include "autoeq/errors.hpp"

namespace autoeq {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

const Json& field(const Json& j, const char* key) {
  expect(j.is_object(), std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  expect(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

int int_from_json(const Json& j, const std::string& what) {
  expect(j.is_number_integer(), what + " must be an integer");
  const auto v = j.get<long long>();
  expect(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(),
         what + " is out of range");
  return static_cast<int>(v);
}

const char* kind_name(LetterKind k) {
  switch (k) {
    case LetterKind::identity: return "identity";
    case LetterKind::twist: return "twist";
    case LetterKind::p_twist: return "p_twist";
    case LetterKind::induced_twist: return "induced_twist";
    case LetterKind::induced_p_twist: return "induced_p_twist";
    case LetterKind::big_p_twist: return "big_p_twist";
    case LetterKind::shift: return "shift";
  }
  return "identity";
}

LetterKind kind_from_name(const std::string& s) {
  for (auto k : {LetterKind::identity, LetterKind::twist, LetterKind::p_twist, LetterKind::induced_twist,
                 LetterKind::induced_p_twist, LetterKind::big_p_twist, LetterKind::shift})
    if (s == kind_name(k)) return k;
  throw ConfigError("unknown letter kind '" + s + "'");
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw ConfigError("not a decimal integer: '" + j.get<std::string>() + "'");
    return x;
  }
  throw ConfigError("expected an integer, got " + j.dump());
}

Json to_json(const GradedDims& g) {
  Json out = Json::object();
  for (const auto& [d, dim] : g.entries()) out[std::to_string(d)] = to_json(dim);
  return out;
}

GradedDims graded_dims_from_json(const Json& j) {
  expect(j.is_object(), "graded dimensions must be an object of degree: dimension");
  GradedDims g;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int degree = 0;
    try {
      degree = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    expect(used == key.size() && !key.empty(), "degree key '" + key + "' is not an integer");
    const Integer dim = integer_from_json(value);
    expect(dim >= 0, "negative dimension in degree " + key);
    g.set(degree, dim);
  }
  return g;
}

Json to_json(const CycleType& c) { return Json(c.parts()); }

CycleType cycle_type_from_json(const Json& j) {
  expect(j.is_array(), "cycle type must be an array of part lengths");
  std::vector<int> parts;
  for (const auto& p : j) parts.push_back(int_from_json(p, "cycle part"));
  try {
    return CycleType(std::move(parts));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

IntVector int_vector_from_json(const Json& j) {
  expect(j.is_array(), "expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  expect(j.is_array() && !j.empty(), "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = int_vector_from_json(j.front()).size();
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = int_vector_from_json(j[r]);
    expect(row.size() == cols, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json to_json(const LinBoxObject& a) {
  return {{"gen", a.gen.name()}, {"n", a.n}, {"shift", a.shift}, {"sign", symbol(a.sign)}};
}

LinBoxObject lin_box_object_from_json(const Declarations& decls, const Json& j) {
  const auto& gen = field(j, "gen");
  expect(gen.is_string(), "'gen' must be a string");
  const auto name = gen.get<std::string>();
  expect(decls.has(name), "unknown generator '" + name + "'");
  const int n = int_from_json(field(j, "n"), "'n'");
  const int shift = j.contains("shift") ? int_from_json(j["shift"], "'shift'") : 0;
  Sign sign = Sign::plus;
  if (j.contains("sign")) {
    const auto& s = j["sign"];
    sign = s.is_string() ? parse_sign(s.get<std::string>()) : sign_from_int(int_from_json(s, "'sign'"));
  }
  try {
    return LinBoxObject(decls.generator(name), n, shift, sign);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Json to_json(const Letter& l) {
  Json out{{"kind", kind_name(l.kind)}};
  if (!l.gen.empty()) out["gen"] = l.gen;
  if (l.is_induced() || l.kind == LetterKind::big_p_twist) {
    out["n"] = l.n;
    out["sign"] = symbol(l.sign);
  }
  if (l.kind == LetterKind::shift) out["amount"] = l.amount;
  if (l.inverse) out["inverse"] = true;
  return out;
}

Letter letter_from_json(const Json& j) {
  Letter l;
  const auto& kind = field(j, "kind");
  expect(kind.is_string(), "'kind' must be a string");
  l.kind = kind_from_name(kind.get<std::string>());
  if (j.contains("gen")) {
    expect(j["gen"].is_string(), "'gen' must be a string");
    l.gen = j["gen"].get<std::string>();
  }
  if (j.contains("n")) l.n = int_from_json(j["n"], "'n'");
  if (j.contains("sign")) {
    expect(j["sign"].is_string(), "'sign' must be a string");
    l.sign = parse_sign(j["sign"].get<std::string>());
  }
  if (j.contains("amount")) l.amount = int_from_json(j["amount"], "'amount'");
  if (j.contains("inverse")) {
    expect(j["inverse"].is_boolean(), "'inverse' must be a boolean");
    l.inverse = j["inverse"].get<bool>();
  }
  const bool needs_gen = l.kind != LetterKind::identity && l.kind != LetterKind::shift;
  expect(!needs_gen || !l.gen.empty(), std::string("letter '") + kind_name(l.kind) + "' needs 'gen'");
  return l;
}

Json to_json(const FunctorWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back(to_json(l));
  return {{"text", w.to_string()}, {"letters", letters}};
}

FunctorWord functor_word_from_json(const Json& j) {
  if (j.is_string()) return FunctorWord::parse(j.get<std::string>());
  expect(j.is_object(), "functor word must be a string or an object");
  if (j.contains("letters")) {
    expect(j["letters"].is_array(), "'letters' must be an array");
    std::vector<Letter> letters;
    for (const auto& l : j["letters"]) letters.push_back(letter_from_json(l));
    FunctorWord w(std::move(letters));
    if (j.contains("text")) {
      expect(j["text"].is_string(), "'text' must be a string");
      expect(FunctorWord::parse(j["text"].get<std::string>()) == w,
             "'text' and 'letters' describe different words");
    }
    return w;
  }
  const auto& text = field(j, "text");
  expect(text.is_string(), "'text' must be a string");
  return FunctorWord::parse(text.get<std::string>());
}

Json to_json(const MukaiLattice& l) {
  return {{"rank", l.rank()},
          {"gram", to_json(l.gram())},
          {"v0", to_json(l.structure_sheaf())},
          {"point", to_json(l.point())}};
}

MukaiLattice mukai_lattice_from_json(const Json& j) {
  const auto gram = int_matrix_from_json(field(j, "gram"));
  if (j.contains("rank")) {
    const int rank = int_from_json(j["rank"], "'rank'");
    expect(rank >= 1 && static_cast<std::size_t>(rank) == gram.rows(),
           "'rank' is " + std::to_string(rank) + " but 'gram' has " + std::to_string(gram.rows()) +
               " rows");
  }
  try {
    return MukaiLattice(gram, int_vector_from_json(field(j, "v0")),
                        int_vector_from_json(field(j, "point")));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("lattice: ") + e.what());
  }
}

}  // namespace autoeq
