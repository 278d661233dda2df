#include "clca/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "clca/error.hpp"

namespace clca::csv {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Split one physical line into fields. Handles "quoted, fields" and the
// doubled-quote escape; anything fancier is rejected.
std::vector<std::string> split_line(const std::string& line, const std::string& source,
                                    std::size_t lineno) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back(field);
      field.clear();
      ++i;
      continue;
    }
    field += c;
    ++i;
  }
  if (quoted)
    fail(errc::parse, source + ":" + std::to_string(lineno) + ": unterminated quote");
  out.push_back(field);
  return out;
}

} // namespace

int Table::column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

int Table::require(const std::string& name) const {
  int c = column(name);
  if (c < 0)
    fail(errc::schema, source + ": missing column \"" + name + "\"");
  return c;
}

const std::string& Table::cell(std::size_t row, int col) const {
  static const std::string empty;
  if (row >= rows.size() || col < 0) return empty;
  const auto& r = rows[row];
  if (static_cast<std::size_t>(col) >= r.size()) return empty;
  return r[static_cast<std::size_t>(col)];
}

Table read_string(const std::string& text, const std::string& source) {
  Table t;
  t.source = source;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string probe = trim(line);
    if (probe.empty() || probe[0] == '#') continue;
    auto fields = split_line(line, source, lineno);
    if (!have_header) {
      for (auto& f : fields) f = trim(f);
      t.header = std::move(fields);
      have_header = true;
    } else {
      t.rows.push_back(std::move(fields));
      t.line_numbers.push_back(lineno);
      if (t.rows.back().size() != t.header.size())
        fail(errc::schema, source + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(t.header.size()) + " fields, got " +
                               std::to_string(t.rows.back().size()));
    }
  }
  if (!have_header)
    fail(errc::schema, source + ": missing header row");
  return t;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(errc::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_string(buf.str(), path);
}

double parse_number(const std::string& text, const std::string& what) {
  std::string s = trim(text);
  if (s.empty())
    fail(errc::parse, what + ": empty value where a number is required");
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    fail(errc::parse, what + ": not a finite number: \"" + s + "\"");
  return v;
}

double to_number(const Table& t, std::size_t row, int col) {
  std::string where = t.source;
  if (row < t.line_numbers.size()) where += ":" + std::to_string(t.line_numbers[row]);
  if (col >= 0 && static_cast<std::size_t>(col) < t.header.size())
    where += ": column \"" + t.header[static_cast<std::size_t>(col)] + "\"";
  return parse_number(t.cell(row, col), where);
}

bool to_flag(const Table& t, std::size_t row, int col) {
  std::string s = trim(t.cell(row, col));
  if (s == "0" || s == "false") return false;
  if (s == "1" || s == "true") return true;
  std::string where = t.source;
  if (row < t.line_numbers.size()) where += ":" + std::to_string(t.line_numbers[row]);
  fail(errc::parse, where + ": expected 0/1/true/false, got \"" + s + "\"");
}

namespace {

std::string format_sci(double v, int precision) {
  if (v == 0) v = 0.0;  // fold -0 into 0; they compare equal anyway
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, precision);
  return std::string(buf, res.ptr);
}

} // namespace

std::string format_full(double v) { return format_sci(v, 16); }

std::string format_sig(double v, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 17) digits = 17;
  return format_sci(v, digits - 1);
}

std::string format(double v, int digits) {
  return digits <= 0 ? format_full(v) : format_sig(v, digits);
}

double round_sig(double v, int digits) {
  if (digits <= 0) return v;
  return parse_number(format_sig(v, digits), "round_sig");
}

std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string write(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows,
                  const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += escape(header[i]);
  }
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += escape(r[i]);
    }
    out += '\n';
  }
  return out;
}

} // namespace clca::csv
