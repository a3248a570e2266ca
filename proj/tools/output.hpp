#pragma once

// Tabular output for the command line front end: CSV or a single JSON
// object with a "rows" array. Formatting never consults the C locale.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace braidlab::cli {

enum class FormatKind { csv, json };

struct OutputFormat {
  FormatKind kind = FormatKind::csv;
  int precision = 12;  // significant digits, 1..17

  /// Throws std::invalid_argument when precision is outside [1, 17].
  void validate() const;
};

/// Null renders as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// x rounded to the given number of significant digits, shortest form,
/// "-0" folded to "0".
std::string format_number(double x, int precision);

void write_table(std::ostream& out, const Table& table, const OutputFormat& format);

}  // namespace braidlab::cli
