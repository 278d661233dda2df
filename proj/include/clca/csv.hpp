#pragma once
// Small CSV layer: comma separator, dot decimal, mandatory header row,
// '#' comment lines, minimal RFC-4180 double-quoting (the inventory fixtures
// carry flow names with embedded commas).
//
// Numbers are serialized with std::to_chars so that full-precision output
// round-trips bit for bit (the write -> read identity property).

#include <cstddef>
#include <string>
#include <vector>

namespace clca::csv {

struct Table {
  std::string source;  // file name, used in error messages
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // physical line of each row

  // Column index by header name; -1 when absent.
  int column(const std::string& name) const;
  // Same, but throws a schema error naming the file.
  int require(const std::string& name) const;
  const std::string& cell(std::size_t row, int col) const;
};

Table read_file(const std::string& path);
Table read_string(const std::string& text, const std::string& source = "<string>");

// Typed cell accessors; errors name file, row and column.
double to_number(const Table& t, std::size_t row, int col);
bool to_flag(const Table& t, std::size_t row, int col);  // accepts 0/1/true/false

// Bare string -> double; throws a parse error mentioning `what`.
double parse_number(const std::string& text, const std::string& what);

// Scientific notation, 17 significant digits: parses back to the same bits.
std::string format_full(double v);
// Scientific notation rounded to `digits` significant digits (for diffing
// against published 3-s.f. tables).
std::string format_sig(double v, int digits);
// digits <= 0 selects full precision.
std::string format(double v, int digits);
// Nearest double to format_sig(v, digits); identity when digits <= 0.
double round_sig(double v, int digits);

// Field escaping for the writer (quotes only when necessary).
std::string escape(const std::string& field);

// Assemble a CSV document; `comments` are emitted first as '# ' lines.
std::string write(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows,
                  const std::vector<std::string>& comments = {});

} // namespace clca::csv
