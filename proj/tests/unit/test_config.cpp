#include <doctest.h>

#include "autoeq/errors.hpp"
#include "autoeq_tools/config.hpp"

using namespace autoeq;
using namespace autoeq::tools;

namespace {
std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_SUITE("config") {

TEST_CASE("shipped configs agree") {
  const auto t = load_config(AUTOEQ_SOURCE_DIR "/configs/standard.toml");
  const auto j = load_config(AUTOEQ_SOURCE_DIR "/configs/standard.json");
  for (const auto* c : {&t, &j}) {
    CHECK(c->n_min == 2);
    CHECK(c->n_max == 8);
    REQUIRE(c->lattice);
    CHECK(c->lattice->gram() == MukaiLattice::k3().gram());
    CHECK(c->declarations.is_orthogonal("E", "F"));
    CHECK(c->cover.is_tau_invariant("E~"));
    CHECK(c->cover.is_tau_orthogonal("F~"));
    CHECK(c->cover.is_quotient_companion("C", "E~"));
    CHECK(c->format == OutputFormat::text);
  }
}

TEST_CASE("unknown keys are rejected with line and field") {
  const auto json = "{\n  \"n_range\": [2, 3],\n  \"flags\": {\"koszul\": true}\n}";
  const auto msg = error_of([&] { parse_config_json(json, "cfg.json"); });
  CHECK(msg.find("cfg.json:3") != std::string::npos);
  CHECK(msg.find("flags.koszul") != std::string::npos);

  const auto toml = "n_range = [2, 3]\n\n[[generators]]\nname = \"E\"\ncolour = \"red\"\n";
  const auto tmsg = error_of([&] { parse_config_toml(toml, "cfg.toml"); });
  CHECK(tmsg.find("cfg.toml:5") != std::string::npos);
  CHECK(tmsg.find("generators[0].colour") != std::string::npos);
}

TEST_CASE("type and range errors") {
  CHECK(error_of([] { parse_config_json(R"({"n_range": [3, 2]})"); }).find("min exceeds max") != std::string::npos);
  CHECK(error_of([] { parse_config_json(R"({"n_range": [1, 40]})"); }).find("n_range[1]") != std::string::npos);
  CHECK(error_of([] { parse_config_json(R"({"flags": {"format": "xml"}})"); }).find("flags.format") !=
        std::string::npos);
  CHECK(error_of([] { parse_config_json(R"({"generators": [{"name": "E", "endo": {"0": 2}}]})"); })
            .find("generators[0]") != std::string::npos);
  CHECK(error_of([] { parse_config_json(R"({"companions": [{"name": "F", "of": "E"}], "generators": []})"); })
            .find("companions[0]") != std::string::npos);
  CHECK(error_of([] { parse_config_json(R"({"lattice": {"gram": [[0, 1], [2, 0]], "v0": [1, 0], "point": [0, 1]}})"); })
            .find("lattice") != std::string::npos);
}

TEST_CASE("syntax errors carry a line") {
  const auto msg = error_of([] { parse_config_json("{\n\"n_range\": [2,\n}", "bad.json"); });
  CHECK(msg.find("bad.json:3") != std::string::npos);
  const auto tmsg = error_of([] { parse_config_toml("a = 1\nb = = 2\n", "bad.toml"); });
  CHECK(tmsg.find("bad.toml:2") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/config.toml"), ConfigError);
}

TEST_CASE("alternative lattice form and generic generators") {
  const auto c = parse_config_toml(R"(
[lattice]
k3_half_degree = 2

[[generators]]
name = "G"
endo = { "0" = 1, "2" = 2, "4" = 1 }
dim = 4
)");
  CHECK(c.lattice_or_default().gram()(1, 1) == 4);
  CHECK(c.declarations.generator("G").endo() == GradedDims{{0, 1}, {2, 2}, {4, 1}});
  CHECK_FALSE(c.declarations.has("E"));
}

}
