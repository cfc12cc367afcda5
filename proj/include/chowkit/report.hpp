#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chowkit/rational.hpp"

namespace chowkit {

/// A report value. Rationals are always rendered exactly ("p" or "p/q").
using Cell = std::variant<std::string, long, Rational, bool>;

enum class CheckStatus { Pass, Fail, AssumedExternal };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

using Field = std::pair<std::string, Cell>;

struct Report {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Table> tables;
  std::vector<Field> summary;
  std::vector<Check> checks;
};

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

std::string cell_to_string(const Cell& cell);
std::string status_name(CheckStatus status);

/// Aligned human-readable tables.
std::string render_text(const Report& report);
/// Pretty-printed JSON with keys in insertion order; rationals as strings.
std::string render_json(const Report& report);
/// One block per table (inputs, tables, summary, checks), RFC 4180 quoting.
std::string render_csv(const Report& report);
std::string render(const Report& report, Format format);

/// 1 if any check failed, else 0.
int exit_code(const Report& report);

}  // namespace chowkit
