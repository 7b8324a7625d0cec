#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "autoeq/errors.hpp"
#include "autoeq_tools/commands.hpp"

using namespace autoeq;
using namespace autoeq::tools;

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Hom spaces, twist tables, K-lattice and cover calculus"};
  app.name("autoeq");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format;
  int n_flag = 0;
  bool koszul = false;
  app.add_option("--config", config_path, "run configuration (.toml or .json)");
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--n", n_flag, "box power; overrides the configured n_range")->check(CLI::Range(1, kMaxPower));
  app.add_flag("--koszul-signs", koszul, "experimental Koszul signs on the factor swap");

  HomsArgs homs_args;
  auto* homs = app.add_subcommand("homs", "graded Hom between two linearised box powers");
  homs->add_option("gen", homs_args.gen, "generator")->required();
  homs->add_option("n", homs_args.n, "box power")->required();
  homs->add_option("sign_a", homs_args.sign_a, "linearisation of the source (+ or -)")->required();
  homs->add_option("sign_b", homs_args.sign_b, "linearisation of the target (+ or -)")->required();
  homs->add_option("--shift-a", homs_args.shift_a, "shift of the source");
  homs->add_option("--shift-b", homs_args.shift_b, "shift of the target");

  std::string pn_gen = "E";
  auto* pn = app.add_subcommand("pn-check", "check that E^{[n]} is a P^n-object");
  pn->add_option("gen", pn_gen, "generator");

  std::string table_gen = "E";
  std::optional<int> table_n;
  std::optional<std::string> word;
  auto* table = app.add_subcommand("twist-table", "shift table of the P^n-twists and induced twists");
  table->add_option("gen", table_gen, "generator");
  table->add_option("n", table_n, "box power")->check(CLI::Range(1, kMaxPower));
  table->add_option("--word", word, "evaluate a functor word, e.g. \"Tind[E,2,+]^2 S(1)\"");

  std::string k_class;
  auto* kact = app.add_subcommand("k-action", "twist actions on the Mukai lattice");
  kact->add_option("--class", k_class, "spherical class e, e.g. 1,0,1 (default O_X)");

  std::string a0_text;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  auto* mu = app.add_subcommand("mu-inject", "injectivity of the induction map on K-classes");
  mu->add_option("--a0", a0_text, "class a0 (default O_X)");
  mu->add_option("--samples", samples, "random nonzero classes tested");
  mu->add_option("--seed", seed, "seed of the sample generator");

  auto* cover = app.add_subcommand("cover", "descend/lift calculus on the K3 double cover");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  std::string suites_help;
  for (const auto& s : suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + s;
  verify->add_option("suite", suite, suites_help);

  auto* report = app.add_subcommand("report", "all tables for the configured n_range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (!format.empty()) cfg.format = parse_format(format);
    cfg.koszul_signs = cfg.koszul_signs || koszul;
    const std::optional<int> n = n_flag > 0 ? std::optional<int>(n_flag) : std::nullopt;

    CommandResult result;
    if (homs->parsed()) {
      result = cmd_homs(cfg, homs_args);
    } else if (pn->parsed()) {
      result = cmd_pn_check(cfg, pn_gen, n_values(cfg, n));
    } else if (table->parsed()) {
      const int tn = table_n ? *table_n : (n ? *n : cfg.n_min);
      result = cmd_twist_table(cfg, table_gen, tn, word);
    } else if (kact->parsed()) {
      std::optional<MukaiVector> e;
      if (!k_class.empty()) e = parse_vector(k_class);
      result = cmd_k_action(cfg, e, n_values(cfg, n));
    } else if (mu->parsed()) {
      std::optional<MukaiVector> a0;
      if (!a0_text.empty()) a0 = parse_vector(a0_text);
      result = cmd_mu_inject(cfg, a0, n_values(cfg, n), samples, seed);
    } else if (cover->parsed()) {
      result = cmd_cover(cfg);
    } else if (verify->parsed()) {
      if (n) cfg.n_min = cfg.n_max = *n;
      result = cmd_verify(cfg, suite);
    } else if (report->parsed()) {
      if (n) cfg.n_min = cfg.n_max = *n;
      result = cmd_report(cfg);
    }
    std::cout << render(result, cfg.format);
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kPropertyFailure;
  }
}
