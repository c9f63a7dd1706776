#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace knotconc::csv {

struct Row {
  std::vector<std::string> fields;
  /// 1-based line on which the row starts.
  std::size_t line = 0;
  /// Set when a quoted field was left unterminated at end of input.
  bool malformed = false;
};

/// RFC 4180 reader: comma separated, double-quoted fields with "" escapes,
/// quoted fields may span lines, CRLF or LF row endings. A leading UTF-8 BOM
/// is skipped. Blank lines yield no rows.
std::vector<Row> read_all(std::istream& in);

}  // namespace knotconc::csv
