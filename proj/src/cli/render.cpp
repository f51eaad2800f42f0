#include "render.hpp"

#include <sstream>

namespace hkq::cli {

using nlohmann::ordered_json;

ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          if (is_integral(v)) return v.numerator();
          return ordered_json{{"num", v.numerator()}, {"den", v.denominator()}};
        } else {
          return v;
        }
      },
      c);
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) return to_string(v);
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return std::to_string(v);
      },
      c);
}

ordered_json table_json(const Table& t) {
  auto arr = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

ordered_json tables_json(const std::vector<Table>& tables) {
  if (tables.size() == 1) return table_json(tables.front());
  ordered_json obj = ordered_json::object();
  for (const auto& t : tables) obj[t.title] = table_json(t);
  return obj;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
    out += ch;
  }
  return out;
}

void render_csv(std::ostream& os, const std::vector<Table>& tables) {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    if (tables.size() > 1) os << (k ? "\n" : "") << "# " << t.title << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << csv_field(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
      os << '\n';
    }
  }
}

void render_md(std::ostream& os, const std::vector<Table>& tables) {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    if (k) os << '\n';
    if (tables.size() > 1) os << "### " << t.title << "\n\n";
    os << '|';
    for (const auto& c : t.columns) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& row : t.rows) {
      os << '|';
      for (const auto& c : row) os << ' ' << cell_text(c) << " |";
      os << '\n';
    }
  }
}

void render_tex(std::ostream& os, const std::vector<Table>& tables) {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    if (k) os << '\n';
    if (tables.size() > 1) os << "% " << t.title << '\n';
    os << "\\begin{tabular}{|" << std::string(t.columns.size(), 'c') << "|}\n\\hline\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? " & " : "") << tex_escape(t.columns[i]);
    os << "\\\\ \\hline\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? " & " : "") << tex_escape(cell_text(row[i]));
      os << "\\\\ \\hline\n";
    }
    os << "\\end{tabular}\n";
  }
}

}  // namespace

std::string render(const Output& out, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: os << out.json.dump(2) << '\n'; break;
    case OutputFormat::csv: render_csv(os, out.tables); break;
    case OutputFormat::md: render_md(os, out.tables); break;
    case OutputFormat::tex: render_tex(os, out.tables); break;
  }
  return os.str();
}

}  // namespace hkq::cli
