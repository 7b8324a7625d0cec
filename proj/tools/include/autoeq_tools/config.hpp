#pragma once

#include <optional>
#include <string>

#include "autoeq/cover.hpp"
#include "autoeq/json_io.hpp"
#include "autoeq/lattice.hpp"
#include "autoeq/linearized.hpp"

namespace autoeq::tools {

enum class OutputFormat { text, csv, json };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

struct RunConfig {
  std::optional<MukaiLattice> lattice;
  Declarations declarations = Declarations::standard();
  CoverDeclarations cover = CoverDeclarations::standard();
  int n_min = 2;
  int n_max = 8;
  bool koszul_signs = false;
  OutputFormat format = OutputFormat::text;

  MukaiLattice lattice_or_default() const { return lattice ? *lattice : MukaiLattice::k3(1); }
  HomOptions hom_options() const { return {koszul_signs}; }
};

/// Every key is checked; unknown keys and type mismatches raise ConfigError
/// naming the field and, where known, the source line.
RunConfig parse_config_json(const std::string& text, const std::string& origin = "<json>");
RunConfig parse_config_toml(const std::string& text, const std::string& origin = "<toml>");

/// Dispatches on the extension: .toml, otherwise JSON.
RunConfig load_config(const std::string& path);

}  // namespace autoeq::tools
