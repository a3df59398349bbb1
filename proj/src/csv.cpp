#include "socgrad/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace socgrad::csv {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void Table::require_valid() const {
  if (columns.empty()) {
    throw std::invalid_argument("csv: table has no columns");
  }
  for (const auto& name : columns) {
    if (name.empty() || name.find(',') != std::string::npos ||
        name.find('\n') != std::string::npos) {
      throw std::invalid_argument("csv: bad column name '" + name + "'");
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      throw std::invalid_argument("csv: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) +
                                  " cells, expected " +
                                  std::to_string(columns.size()));
    }
    for (const auto& cell : rows[r]) {
      if (cell.has_value() && !std::isfinite(*cell)) {
        throw std::invalid_argument("csv: non-finite value in row " +
                                    std::to_string(r + 1));
      }
    }
  }
}

void Table::write(std::ostream& out) const {
  require_valid();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out << ',';
    out << columns[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      if (row[c].has_value()) out << format_double(*row[c]);
    }
    out << '\n';
  }
}

void Table::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("csv: cannot open '" + path + "' for writing");
  }
  write(out);
  if (!out.good()) {
    throw std::runtime_error("csv: write to '" + path + "' failed");
  }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

Table Table::read(std::istream& in) {
  Table table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("csv: empty input, no header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.columns = split_line(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != table.columns.size()) {
      throw std::invalid_argument("csv: line " + std::to_string(lineno) + " has " +
                                  std::to_string(fields.size()) +
                                  " fields, expected " +
                                  std::to_string(table.columns.size()));
    }
    std::vector<std::optional<double>> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      if (f.empty()) {
        row.emplace_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw std::invalid_argument("csv: line " + std::to_string(lineno) +
                                    ": cannot parse '" + f + "' as a number");
      }
      row.emplace_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table Table::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("csv: cannot open '" + path + "'");
  }
  try {
    return read(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace socgrad::csv
