#include "chowkit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chowkit {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

std::string cell_to_string(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(v);
        } else {
          return v ? "true" : "false";
        }
      },
      cell);
}

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::AssumedExternal:
      return "assumed-external";
  }
  return "fail";
}

namespace {

void write_aligned(std::ostringstream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text = "  ";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (const auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

void write_fields(std::ostringstream& out, const char* title, const std::vector<Field>& fields) {
  if (fields.empty()) return;
  out << title << ":\n";
  std::size_t width = 0;
  for (const auto& [key, value] : fields) width = std::max(width, key.size());
  for (const auto& [key, value] : fields) {
    out << "  " << key << std::string(width - key.size(), ' ') << " = " << cell_to_string(value) << '\n';
  }
}

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::ordered_json fields_to_json(const std::vector<Field>& fields) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields) obj[key] = to_json(value);
  return obj;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_escape(cells[i]);
  }
  out << '\n';
}

std::vector<std::string> stringify(const std::vector<Cell>& row) {
  std::vector<std::string> out;
  for (const auto& c : row) out.push_back(cell_to_string(c));
  return out;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  write_fields(out, "inputs", report.inputs);
  for (const auto& table : report.tables) {
    out << '\n' << table.name << ":\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : table.rows) rows.push_back(stringify(row));
    if (rows.empty()) {
      out << "  (none)\n";
    } else {
      write_aligned(out, table.columns, rows);
    }
  }
  if (!report.summary.empty()) {
    out << '\n';
    write_fields(out, "summary", report.summary);
  }
  if (!report.checks.empty()) {
    out << "\nchecks:\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.checks) rows.push_back({status_name(c.status), c.name, c.detail});
    write_aligned(out, {"status", "check", "detail"}, rows);
  }
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["inputs"] = fields_to_json(report.inputs);
  auto tables = nlohmann::ordered_json::array();
  for (const auto& table : report.tables) {
    nlohmann::ordered_json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      auto obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
      rows.push_back(std::move(obj));
    }
    t["rows"] = std::move(rows);
    tables.push_back(std::move(t));
  }
  doc["results"] = std::move(tables);
  doc["summary"] = fields_to_json(report.summary);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  auto block = [&](const std::string& name, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    if (out.tellp() > 0) out << '\n';
    out << "# " << name << '\n';
    csv_line(out, header);
    for (const auto& row : rows) csv_line(out, row);
  };
  auto field_rows = [](const std::vector<Field>& fields) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : fields) rows.push_back({key, cell_to_string(value)});
    return rows;
  };
  block("inputs", {"key", "value"}, field_rows({{"command", report.command}}));
  if (!report.inputs.empty()) {
    auto rows = field_rows(report.inputs);
    for (const auto& r : rows) csv_line(out, r);
  }
  for (const auto& table : report.tables) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : table.rows) rows.push_back(stringify(row));
    block(table.name, table.columns, rows);
  }
  if (!report.summary.empty()) block("summary", {"key", "value"}, field_rows(report.summary));
  if (!report.checks.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.checks) rows.push_back({c.name, status_name(c.status), c.detail});
    block("checks", {"name", "status", "detail"}, rows);
  }
  return out.str();
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Text:
      return render_text(report);
    case Format::Json:
      return render_json(report);
    case Format::Csv:
      return render_csv(report);
  }
  return render_text(report);
}

int exit_code(const Report& report) {
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Fail) return 1;
  }
  return 0;
}

}  // namespace chowkit
