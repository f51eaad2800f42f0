#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hkquot/rational.hpp"

namespace hkq::cli {

enum class OutputFormat { json, csv, md, tex };

using Cell = std::variant<std::int64_t, Rational, std::string, bool>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// What a command produces: tables for the text formats and a json document.
struct Output {
  std::vector<Table> tables;
  nlohmann::ordered_json json;
};

nlohmann::ordered_json cell_json(const Cell& c);
std::string cell_text(const Cell& c);

/// Array of row objects keyed by column name.
nlohmann::ordered_json table_json(const Table& t);
/// One table renders as its array; several as an object keyed by title.
nlohmann::ordered_json tables_json(const std::vector<Table>& tables);

std::string render(const Output& out, OutputFormat fmt);

}  // namespace hkq::cli
