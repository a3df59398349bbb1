#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace socgrad::csv {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Numeric table with a header row. Cells are doubles; an empty optional is
/// written as an empty field (used for columns that do not apply to a row,
/// e.g. the control of a trajectory's terminal state). Present values must
/// be finite; write() validates the schema before emitting anything.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  void require_valid() const;
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;
  static Table read(std::istream& in);
  static Table read_file(const std::string& path);
};

}  // namespace socgrad::csv
