#include "vicsim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vicsim {

std::string format_double(double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t n = 0; n < header.size(); ++n)
    if (header[n] == name) return n;
  throw std::out_of_range("csv: no column '" + std::string(name) + "'");
}

void write_csv(std::ostream& os, const CsvTable& table) {
  for (std::size_t n = 0; n < table.header.size(); ++n) os << (n ? "," : "") << table.header[n];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t n = 0; n < row.size(); ++n) os << (n ? "," : "") << format_double(row[n]);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_csv(os, table);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

} // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  if (!std::getline(is, line)) throw IoError("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.header = split(line);
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line)) row.push_back(parse_double(cell));
    if (row.size() != table.header.size()) throw IoError("csv: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  return read_csv(is);
}

} // namespace vicsim
