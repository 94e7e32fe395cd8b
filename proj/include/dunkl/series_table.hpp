#pragma once

#include <string>
#include <vector>

namespace dunkl {

/// Column-labelled numeric table. Column 0 is the abscissa; the remaining
/// columns hold one value per configuration.
struct SeriesTable {
  struct Column {
    std::string name;
    std::string unit;  // empty for dimensionless or count columns
  };

  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  std::size_t width() const noexcept { return columns.size(); }
  bool empty() const noexcept { return rows.empty(); }
};

}  // namespace dunkl
