#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoeq_tools/config.hpp"
#include "autoeq_tools/table.hpp"

namespace autoeq::tools {

struct HomsArgs {
  std::string gen = "E";
  int n = 2;
  std::string sign_a = "+";
  std::string sign_b = "+";
  int shift_a = 0;
  int shift_b = 0;
};

/// Graded Hom between two linearised box powers, with the brute-force
/// projector cross-check when it applies.
CommandResult cmd_homs(const RunConfig& cfg, const HomsArgs& args);

CommandResult cmd_pn_check(const RunConfig& cfg, const std::string& gen, const std::vector<int>& ns);

/// Shift table of the two P^n-twists and the two induced twists; with a word,
/// the word's values on its rule closure and an exoticness witness.
CommandResult cmd_twist_table(const RunConfig& cfg, const std::string& gen, int n,
                              const std::optional<std::string>& word = std::nullopt);

/// Reflection, P-twist and induced class maps on the configured lattice.
CommandResult cmd_k_action(const RunConfig& cfg, const std::optional<MukaiVector>& spherical_class,
                           const std::vector<int>& ns);

CommandResult cmd_mu_inject(const RunConfig& cfg, const std::optional<MukaiVector>& a0,
                            const std::vector<int>& ns, std::size_t samples, std::uint64_t seed);

CommandResult cmd_cover(const RunConfig& cfg);

std::vector<std::string> suite_names();
/// Exit code 0 iff no property failed; documented deviations do not fail.
CommandResult cmd_verify(const RunConfig& cfg, const std::string& suite);

CommandResult cmd_report(const RunConfig& cfg);

/// Parses "(1,0,1)", "1,0,1" or "1 0 1".
MukaiVector parse_vector(const std::string& text);
std::string vector_text(const MukaiVector& v);

std::vector<int> n_values(const RunConfig& cfg, std::optional<int> n);

}  // namespace autoeq::tools
