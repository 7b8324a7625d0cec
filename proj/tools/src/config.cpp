#include "autoeq_tools/config.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include <toml.hpp>

#include "autoeq/errors.hpp"

namespace autoeq::tools {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + s + "' (expected text, csv or json)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "text";
}

namespace {

using LineMap = std::map<std::string, int>;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Line of every value in a JSON document, keyed by field path.
LineMap json_lines(const std::string& text) {
  struct Frame {
    bool array;
    std::string path;
    std::size_t index = 0;
    std::string key;
    bool want_key = false;
  };
  LineMap lines;
  std::vector<Frame> stack;
  int line = 1;
  auto child = [&]() -> std::string {
    if (stack.empty()) return "";
    const auto& f = stack.back();
    return f.array ? index(f.path, f.index) : join(f.path, f.key);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':') continue;
    if (c == '"') {
      const int start = line;
      std::string s;
      std::size_t j = i + 1;
      for (; j < text.size() && text[j] != '"'; ++j) {
        if (text[j] == '\\' && j + 1 < text.size()) ++j;
        if (text[j] == '\n') ++line;
        s += text[j];
      }
      if (!stack.empty() && !stack.back().array && stack.back().want_key) {
        stack.back().key = s;
        stack.back().want_key = false;
      } else {
        lines.emplace(child(), start);
      }
      i = j;
      continue;
    }
    if (c == '{' || c == '[') {
      const auto path = child();
      lines.emplace(path, line);
      stack.push_back({c == '[', path, 0, "", c == '{'});
      continue;
    }
    if (c == '}' || c == ']') {
      if (!stack.empty()) stack.pop_back();
      continue;
    }
    if (c == ',') {
      if (!stack.empty()) {
        auto& f = stack.back();
        if (f.array)
          ++f.index;
        else
          f.want_key = true;
      }
      continue;
    }
    lines.emplace(child(), line);
    while (i + 1 < text.size() && std::strchr(",}] \t\r\n", text[i + 1]) == nullptr) ++i;
  }
  return lines;
}

Json toml_to_json(const toml::node& node, const std::string& path, LineMap& lines,
                  const std::string& origin) {
  lines.emplace(path, static_cast<int>(node.source().begin.line));
  if (const auto* t = node.as_table()) {
    Json out = Json::object();
    for (auto&& [k, v] : *t) {
      const std::string key(k.str());
      out[key] = toml_to_json(v, join(path, key), lines, origin);
    }
    return out;
  }
  if (const auto* a = node.as_array()) {
    Json out = Json::array();
    for (std::size_t i = 0; i < a->size(); ++i)
      out.push_back(toml_to_json(*a->get(i), index(path, i), lines, origin));
    return out;
  }
  if (const auto* v = node.as_integer()) return Json(v->get());
  if (const auto* v = node.as_floating_point()) return Json(v->get());
  if (const auto* v = node.as_boolean()) return Json(v->get());
  if (const auto* v = node.as_string()) return Json(v->get());
  throw ConfigError(origin + ":" + std::to_string(node.source().begin.line) + ": field '" + path +
                    "': dates and times are not valid here");
}

class Reader {
 public:
  Reader(std::string origin, LineMap lines) : origin_(std::move(origin)), lines_(std::move(lines)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    std::string where = origin_;
    for (std::string p = path;; p = parent(p)) {
      auto it = lines_.find(p);
      if (it != lines_.end()) {
        where += ":" + std::to_string(it->second);
        break;
      }
      if (p.empty()) break;
    }
    throw ConfigError(where + ": field '" + (path.empty() ? "<root>" : path) + "': " + message);
  }

  void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(path, "expected a table/object");
    for (const auto& [key, value] : j.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) {
        std::string list;
        for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        fail(join(path, key), "unknown key (allowed: " + list + ")");
      }
    }
  }

  const Json& required(const Json& j, const std::string& path, const char* key) const {
    auto it = j.find(key);
    if (it == j.end()) fail(join(path, key), "missing required key");
    return *it;
  }

  std::string string(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  bool boolean(const Json& j, const std::string& path) const {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }

  int integer(const Json& j, const std::string& path, long long lo, long long hi) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    const auto v = j.get<long long>();
    if (v < lo || v > hi)
      fail(path, std::to_string(v) + " is outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(v);
  }

  const Json& array(const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  // Runs a core conversion, attaching the field path to its error.
  template <class F>
  auto convert(const std::string& path, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

 private:
  static std::string parent(const std::string& p) {
    const auto cut = p.find_last_of(".[");
    return cut == std::string::npos ? std::string() : p.substr(0, cut);
  }

  std::string origin_;
  LineMap lines_;
};

FormalGenerator read_generator(const Reader& r, const Json& j, const std::string& path,
                               std::initializer_list<const char*> keys, bool* tau_invariant) {
  r.only_keys(j, path, keys);
  const auto name = r.string(r.required(j, path, "name"), join(path, "name"));
  const int dim = j.contains("dim") ? r.integer(j["dim"], join(path, "dim"), 1, 64) : 2;
  const bool cy = j.contains("calabi_yau") ? r.boolean(j["calabi_yau"], join(path, "calabi_yau")) : true;
  if (tau_invariant)
    *tau_invariant = j.contains("tau_invariant") &&
                     r.boolean(j["tau_invariant"], join(path, "tau_invariant"));
  if (!j.contains("endo")) return r.convert(path, [&] { return FormalGenerator::spherical(name, dim); });
  const auto endo = r.convert(join(path, "endo"), [&] { return graded_dims_from_json(j["endo"]); });
  return r.convert(path, [&] { return FormalGenerator(name, endo, dim, cy); });
}

std::pair<std::string, std::string> read_named_of(const Reader& r, const Json& j, const std::string& path) {
  r.only_keys(j, path, {"name", "of"});
  return {r.string(r.required(j, path, "name"), join(path, "name")),
          r.string(r.required(j, path, "of"), join(path, "of"))};
}

RunConfig build(const Json& root, const Reader& r) {
  RunConfig cfg;
  r.only_keys(root, "", {"lattice", "generators", "companions", "cover", "n_range", "flags"});

  if (root.contains("lattice")) {
    const auto& l = root["lattice"];
    if (l.is_object() && l.contains("k3_half_degree")) {
      r.only_keys(l, "lattice", {"k3_half_degree"});
      const int k = r.integer(l["k3_half_degree"], "lattice.k3_half_degree", 1, 1000000);
      cfg.lattice = MukaiLattice::k3(k);
    } else {
      r.only_keys(l, "lattice", {"rank", "gram", "v0", "point"});
      r.required(l, "lattice", "gram");
      r.required(l, "lattice", "v0");
      r.required(l, "lattice", "point");
      cfg.lattice = r.convert("lattice", [&] { return mukai_lattice_from_json(l); });
    }
  }

  if (root.contains("generators")) {
    cfg.declarations = Declarations();
    const auto& gens = r.array(root["generators"], "generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto path = index("generators", i);
      auto g = read_generator(r, gens[i], path, {"name", "endo", "dim", "calabi_yau"}, nullptr);
      r.convert(path, [&] {
        cfg.declarations.add_generator(std::move(g));
        return 0;
      });
    }
  }

  if (root.contains("companions")) {
    const auto& comps = r.array(root["companions"], "companions");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto path = index("companions", i);
      const auto [name, of] = read_named_of(r, comps[i], path);
      r.convert(path, [&, &name = name, &of = of] {
        cfg.declarations.declare_orthogonal(of, name);
        return 0;
      });
    }
  }

  if (root.contains("cover")) {
    const auto& c = root["cover"];
    r.only_keys(c, "cover", {"generators", "orthogonal", "tau_orthogonal", "quotient_companions"});
    cfg.cover = CoverDeclarations();
    if (c.contains("generators")) {
      const auto& gens = r.array(c["generators"], "cover.generators");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto path = index("cover.generators", i);
        bool tau = false;
        auto g = read_generator(r, gens[i], path, {"name", "endo", "dim", "calabi_yau", "tau_invariant"}, &tau);
        r.convert(path, [&] {
          cfg.cover.add_generator(std::move(g), tau);
          return 0;
        });
      }
    }
    if (c.contains("orthogonal")) {
      const auto& pairs = r.array(c["orthogonal"], "cover.orthogonal");
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto path = index("cover.orthogonal", i);
        const auto& p = r.array(pairs[i], path);
        if (p.size() != 2) r.fail(path, "expected a pair [generator, companion]");
        const auto e = r.string(p[0], index(path, 0));
        const auto f = r.string(p[1], index(path, 1));
        r.convert(path, [&] {
          cfg.cover.declare_orthogonal(e, f);
          return 0;
        });
      }
    }
    if (c.contains("tau_orthogonal")) {
      const auto& names = r.array(c["tau_orthogonal"], "cover.tau_orthogonal");
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto path = index("cover.tau_orthogonal", i);
        const auto g = r.string(names[i], path);
        r.convert(path, [&] {
          cfg.cover.declare_tau_orthogonal(g);
          return 0;
        });
      }
    }
    if (c.contains("quotient_companions")) {
      const auto& comps = r.array(c["quotient_companions"], "cover.quotient_companions");
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto path = index("cover.quotient_companions", i);
        const auto [name, of] = read_named_of(r, comps[i], path);
        r.convert(path, [&, &name = name, &of = of] {
          cfg.cover.declare_quotient_companion(name, of);
          return 0;
        });
      }
    }
  }

  if (root.contains("n_range")) {
    const auto& range = r.array(root["n_range"], "n_range");
    if (range.size() != 2) r.fail("n_range", "expected [min, max]");
    cfg.n_min = r.integer(range[0], "n_range[0]", 1, kMaxPower);
    cfg.n_max = r.integer(range[1], "n_range[1]", 1, kMaxPower);
    if (cfg.n_min > cfg.n_max) r.fail("n_range", "min exceeds max");
  }

  if (root.contains("flags")) {
    const auto& f = root["flags"];
    r.only_keys(f, "flags", {"koszul_signs", "format"});
    if (f.contains("koszul_signs")) cfg.koszul_signs = r.boolean(f["koszul_signs"], "flags.koszul_signs");
    if (f.contains("format")) {
      const auto s = r.string(f["format"], "flags.format");
      cfg.format = r.convert("flags.format", [&] { return parse_format(s); });
    }
  }
  return cfg;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

RunConfig parse_config_json(const std::string& text, const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(origin + ":" + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  return build(root, Reader(origin, json_lines(text)));
}

RunConfig parse_config_toml(const std::string& text, const std::string& origin) {
  toml::table table;
  try {
    table = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    throw ConfigError(origin + ":" + std::to_string(e.source().begin.line) + ": " +
                      std::string(e.description()));
  }
  LineMap lines;
  const Json root = toml_to_json(table, "", lines, origin);
  lines[""] = 1;
  return build(root, Reader(origin, std::move(lines)));
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  return toml ? parse_config_toml(buffer.str(), path) : parse_config_json(buffer.str(), path);
}

}  // namespace autoeq::tools
