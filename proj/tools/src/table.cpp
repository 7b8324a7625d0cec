#include "autoeq_tools/table.hpp"

#include <algorithm>
#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq::tools {

std::string cell_text(const Json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_null()) return "";
  return cell.dump();
}

Json to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return {{"title", t.title}, {"columns", t.columns}, {"rows", rows}, {"notes", t.notes}};
}

Table table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("columns") || !j.contains("rows"))
    throw ConfigError("table object needs 'columns' and 'rows'");
  Table t;
  t.title = j.value("title", std::string());
  t.columns = j["columns"].get<std::vector<std::string>>();
  for (const auto& r : j["rows"]) {
    if (!r.is_array() || r.size() != t.columns.size())
      throw ConfigError("table row does not match the column count");
    t.rows.push_back(r.get<std::vector<Json>>());
  }
  if (j.contains("notes")) t.notes = j["notes"].get<std::vector<std::string>>();
  return t;
}

Json to_json(const CommandResult& r) {
  Json tables = Json::array();
  for (const auto& t : r.tables) tables.push_back(to_json(t));
  return {{"exit_code", r.exit_code}, {"tables", tables}};
}

CommandResult command_result_from_json(const Json& j) {
  CommandResult r;
  r.exit_code = j.at("exit_code").get<int>();
  for (const auto& t : j.at("tables")) r.tables.push_back(table_from_json(t));
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width counting UTF-8 code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void render_text(std::ostream& os, const Table& t) {
  if (!t.title.empty()) os << t.title << "\n";
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = width(t.columns[c]);
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], width(cell_text(r[c])));
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(w[c] - width(cells[c]) + 2, ' ');
    }
    os << "  " << out << "\n";
  };
  line(t.columns);
  std::vector<std::string> rule;
  for (auto x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& r : t.rows) {
    std::vector<std::string> cells;
    for (const auto& c : r) cells.push_back(cell_text(c));
    line(cells);
  }
  if (t.rows.empty()) os << "  (no rows)\n";
  for (const auto& n : t.notes) os << "  note: " << n << "\n";
}

void render_csv(std::ostream& os, const Table& t) {
  if (!t.title.empty()) os << "# " << t.title << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(r[c]));
    os << "\n";
  }
  for (const auto& n : t.notes) os << "# note: " << n << "\n";
}

}  // namespace

std::string render(const CommandResult& result, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::json) {
    os << to_json(result).dump(2) << "\n";
    return os.str();
  }
  for (std::size_t i = 0; i < result.tables.size(); ++i) {
    if (i) os << "\n";
    if (format == OutputFormat::text)
      render_text(os, result.tables[i]);
    else
      render_csv(os, result.tables[i]);
  }
  return os.str();
}

}  // namespace autoeq::tools
