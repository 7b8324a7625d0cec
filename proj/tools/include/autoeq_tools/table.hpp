#pragma once

#include <string>
#include <vector>

#include "autoeq/json_io.hpp"
#include "autoeq_tools/config.hpp"

namespace autoeq::tools {

/// Cells are JSON scalars so that every output format carries the same values.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::vector<std::string> notes;

  void add_row(std::vector<Json> row) { rows.push_back(std::move(row)); }
  friend bool operator==(const Table&, const Table&) = default;
};

enum ExitCode { kOk = 0, kPropertyFailure = 1, kConfigError = 2, kDomainError = 3 };

struct CommandResult {
  std::vector<Table> tables;
  int exit_code = kOk;
};

std::string cell_text(const Json& cell);

Json to_json(const Table& t);
Table table_from_json(const Json& j);
Json to_json(const CommandResult& r);
CommandResult command_result_from_json(const Json& j);

std::string render(const CommandResult& result, OutputFormat format);

}  // namespace autoeq::tools
