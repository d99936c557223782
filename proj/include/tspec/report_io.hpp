#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace tspec {

using Cell = std::variant<long long, double, std::string>;

/// Column-named rows, written as CSV (header first) or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Doubles are written with 17 significant digits so output is reproducible.
void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

/// Least-squares slope of ln y against ln x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tspec
