#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vicsim {

/// I/O failure while reading or writing output files.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shortest-safe decimal form with 17 significant digits ("%.17g").
std::string format_double(double value);

/// Strict parse of a full string as a double; throws std::invalid_argument.
double parse_double(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
/// Writes to path; throws IoError if the file cannot be written.
void write_csv_file(const std::string& path, const CsvTable& table);

CsvTable read_csv(std::istream& is);
CsvTable read_csv_file(const std::string& path);

} // namespace vicsim
