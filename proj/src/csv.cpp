#include "knotconc/csv.hpp"

#include <iterator>

namespace knotconc::csv {

std::vector<Row> read_all(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t i = 0;
  if (data.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;

  std::vector<Row> rows;
  std::size_t line = 1;
  while (i < data.size()) {
    Row row;
    row.line = line;
    std::string field;
    bool blank = true;
    bool done = false;
    while (!done) {
      if (i >= data.size()) {
        row.fields.push_back(std::move(field));
        break;
      }
      char c = data[i];
      if (c == '"') {
        blank = false;
        ++i;
        bool closed = false;
        while (i < data.size()) {
          if (data[i] == '"') {
            if (i + 1 < data.size() && data[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            closed = true;
            break;
          }
          if (data[i] == '\n') ++line;
          field += data[i++];
        }
        if (!closed) row.malformed = true;
        continue;
      }
      if (c == ',') {
        blank = false;
        row.fields.push_back(std::move(field));
        field.clear();
        ++i;
        continue;
      }
      if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ++i;
      if (c == '\n' || c == '\r') {
        ++i;
        ++line;
        row.fields.push_back(std::move(field));
        done = true;
        continue;
      }
      blank = false;
      field += c;
      ++i;
    }
    if (!blank) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace knotconc::csv
