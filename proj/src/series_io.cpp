#include "dunkl/series_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>

#include "dunkl/errors.hpp"

namespace dunkl::io {

namespace {

std::string fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  return {buf.data(), res.ptr};
}

double quantized(double v) {
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string column_header(const SeriesTable::Column& c) {
  return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  return {buf.data(), res.ptr};
}

std::string csv_string(const SeriesTable& table) {
  if (table.empty()) throw DomainError("csv: table has no rows");
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += column_header(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw DomainError("csv: row width does not match header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const SeriesTable& table, const std::filesystem::path& path) {
  write_file(path, csv_string(table));
}

SvgFrame svg_frame(const SeriesTable& table) {
  if (table.empty() || table.width() < 2) throw DomainError("svg: table needs rows and at least one value column");
  SvgFrame f;
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& row : table.rows) {
    xlo = std::min(xlo, quantized(row[0]));
    xhi = std::max(xhi, quantized(row[0]));
    for (std::size_t c = 1; c < row.size(); ++c) {
      ylo = std::min(ylo, quantized(row[c]));
      yhi = std::max(yhi, quantized(row[c]));
    }
  }
  if (!(xhi > xlo)) {
    xlo -= 1.0;
    xhi += 1.0;
  }
  if (!(yhi > ylo)) {
    ylo -= 1.0;
    yhi += 1.0;
  }
  const double pad = 0.05 * (yhi - ylo);
  f.x_min = xlo;
  f.x_max = xhi;
  f.y_min = ylo - pad;
  f.y_max = yhi + pad;
  return f;
}

std::string svg_string(const SeriesTable& table, const FigureSpec& spec) {
  if (table.empty()) throw DomainError("svg: table has no rows");
  if (table.width() != spec.value_columns + 1)
    throw DomainError("svg: " + spec.figure_id + " expects " + std::to_string(spec.value_columns) +
                      " value columns, table has " + std::to_string(table.width() - 1));
  const SvgFrame f = svg_frame(table);
  const double total_w = f.left + f.width + 180.0;
  const double total_h = f.top + f.height + 60.0;
  auto px = [&](double x) { return f.left + (x - f.x_min) / (f.x_max - f.x_min) * f.width; };
  auto py = [&](double y) { return f.top + (f.y_max - y) / (f.y_max - f.y_min) * f.height; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(total_w, 0) + "\" height=\"" +
       fixed(total_h, 0) + "\" viewBox=\"0 0 " + fixed(total_w, 0) + " " + fixed(total_h, 0) + "\">\n";
  s += "<!--\n  generator: dunkl-osc " + std::string(kVersion) + "\n  figure: " + xml_escape(spec.figure_id) + "\n";
  for (const auto& [key, value] : spec.metadata) s += "  " + xml_escape(key) + ": " + xml_escape(value) + "\n";
  s += "  plot_box: " + format_number(f.left) + "," + format_number(f.top) + "," + format_number(f.width) + "," +
       format_number(f.height) + "\n";
  s += "  x_range: " + format_number(f.x_min) + "," + format_number(f.x_max) + "\n";
  s += "  y_range: " + format_number(f.y_min) + "," + format_number(f.y_max) + "\n";
  s += "-->\n";
  s += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fixed(f.left + f.width / 2, 1) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" + xml_escape(spec.title) + "</text>\n";

  // Axes and ticks.
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<rect x=\"" + fixed(f.left, 3) + "\" y=\"" + fixed(f.top, 3) + "\" width=\"" + fixed(f.width, 3) +
       "\" height=\"" + fixed(f.height, 3) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  constexpr int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double xv = f.x_min + (f.x_max - f.x_min) * i / ticks;
    const double yv = f.y_min + (f.y_max - f.y_min) * i / ticks;
    s += "<line x1=\"" + fixed(px(xv), 3) + "\" y1=\"" + fixed(f.top + f.height, 3) + "\" x2=\"" + fixed(px(xv), 3) +
         "\" y2=\"" + fixed(f.top + f.height + 5, 3) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(px(xv), 3) + "\" y=\"" + fixed(f.top + f.height + 20, 3) +
         "\" text-anchor=\"middle\">" + format_number(std::round(xv * 1e4) / 1e4) + "</text>\n";
    s += "<line x1=\"" + fixed(f.left - 5, 3) + "\" y1=\"" + fixed(py(yv), 3) + "\" x2=\"" + fixed(f.left, 3) +
         "\" y2=\"" + fixed(py(yv), 3) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(f.left - 8, 3) + "\" y=\"" + fixed(py(yv) + 4, 3) + "\" text-anchor=\"end\">" +
         format_number(std::round(yv * 1e4) / 1e4) + "</text>\n";
  }
  s += "<text x=\"" + fixed(f.left + f.width / 2, 1) + "\" y=\"" + fixed(f.top + f.height + 45, 1) +
       "\" text-anchor=\"middle\">" + xml_escape(spec.x_label) + "</text>\n";
  s += "<text x=\"20\" y=\"" + fixed(f.top + f.height / 2, 1) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
       fixed(f.top + f.height / 2, 1) + ")\">" + xml_escape(spec.y_label) + "</text>\n";
  s += "</g>\n";

  // One polyline per configuration, then the legend.
  for (std::size_t c = 1; c < table.width(); ++c) {
    const char* colour = kPalette[(c - 1) % kPalette.size()];
    s += "<polyline class=\"series\" data-column=\"" + xml_escape(table.columns[c].name) + "\" fill=\"none\" stroke=\"" +
         colour + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i) s += ' ';
      s += fixed(px(quantized(table.rows[i][0])), 3) + "," + fixed(py(quantized(table.rows[i][c])), 3);
    }
    s += "\"/>\n";
  }
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 1; c < table.width(); ++c) {
    const double y = f.top + 10 + 20.0 * static_cast<double>(c - 1);
    const double x = f.left + f.width + 15;
    s += "<line x1=\"" + fixed(x, 3) + "\" y1=\"" + fixed(y, 3) + "\" x2=\"" + fixed(x + 25, 3) + "\" y2=\"" +
         fixed(y, 3) + "\" stroke=\"" + kPalette[(c - 1) % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fixed(x + 32, 3) + "\" y=\"" + fixed(y + 4, 3) + "\">" + xml_escape(table.columns[c].name) +
         "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

void emit_svg(const SeriesTable& table, const FigureSpec& spec, const std::filesystem::path& path) {
  write_file(path, svg_string(table, spec));
}

}  // namespace dunkl::io
