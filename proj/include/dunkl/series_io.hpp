#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/series_table.hpp"

namespace dunkl::io {

inline constexpr const char* kVersion = "1.0.0";

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double value);

/// Header row of names (with " [unit]" where a unit applies) followed by one
/// line per row. Throws DomainError for an empty table.
std::string csv_string(const SeriesTable& table);

/// Writes csv_string to `path`. No file is created on error; IoError when
/// the path cannot be written.
void emit_csv(const SeriesTable& table, const std::filesystem::path& path);

/// How a table is drawn.
struct FigureSpec {
  std::string figure_id;  // "fig1" ... "fig7"
  std::string title;
  std::string x_label;
  std::string y_label;
  std::size_t value_columns;  // expected number of curves
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Plot box and data ranges of an emitted SVG, recorded in its metadata.
struct SvgFrame {
  double left = 80.0;
  double top = 40.0;
  double width = 560.0;
  double height = 400.0;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
};

/// Self-contained SVG with one polyline per value column. Vertices are
/// computed from the CSV-quantized values, never recomputed.
std::string svg_string(const SeriesTable& table, const FigureSpec& spec);

/// The affine frame svg_string uses for `table`.
SvgFrame svg_frame(const SeriesTable& table);

void emit_svg(const SeriesTable& table, const FigureSpec& spec, const std::filesystem::path& path);

}  // namespace dunkl::io
