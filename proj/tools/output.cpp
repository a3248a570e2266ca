#include "output.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace braidlab::cli {

void OutputFormat::validate() const {
  if (precision < 1 || precision > 17) {
    throw std::invalid_argument("precision must be between 1 and 17");
  }
}

std::string format_number(double x, int precision) {
  if (x == 0.0) return "0";
  return fmt::format("{:.{}g}", x, precision);
}

namespace {

double rounded(double x, int precision) {
  const std::string s = format_number(x, precision);
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct CsvCell {
  int precision;
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_number(v, precision); }
  std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
  int precision;
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return rounded(v, precision);
  }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

void write_table(std::ostream& out, const Table& table, const OutputFormat& format) {
  format.validate();
  if (format.kind == FormatKind::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << csv_field(table.columns[c]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << std::visit(CsvCell{format.precision}, row[c]);
      }
      out << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      obj[table.columns[c]] = std::visit(JsonCell{format.precision}, row[c]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump() << '\n';
}

}  // namespace braidlab::cli
