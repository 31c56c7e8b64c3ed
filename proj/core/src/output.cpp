#include "mlae/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mlae {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#000000",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

/// Error statistic a row contributes to the chart.
double plotted_error(const ErrorRow& row) {
  return std::isnan(row.rmse) ? row.percentile_error : row.rmse;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(const ErrorCurve& curve, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : curve.rows) {
    out << r.kind << ',' << format_number(r.a_target) << ',' << r.m << ',' << r.n_queries << ','
        << format_number(r.rmse) << ',' << format_number(r.bias) << ','
        << format_number(r.percentile_error) << ',' << format_number(r.crb) << ','
        << format_number(r.classical_bound) << ',' << format_number(r.gamma_fit) << ','
        << format_number(r.delta_fit) << '\n';
  }
}

std::string render_svg(const ErrorCurve& curve, double a_target) {
  constexpr double width = 640, height = 480, left = 70, right = 150, top = 30, bottom = 50;
  std::vector<const ErrorRow*> rows;
  for (const auto& r : curve.rows) {
    if (r.a_target == a_target && plotted_error(r) > 0.0) rows.push_back(&r);
  }

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto* r : rows) {
    const double x = std::log10(static_cast<double>(r->n_queries));
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    for (double y : {plotted_error(*r), r->crb, r->classical_bound}) {
      if (!(y > 0.0)) continue;
      y_lo = std::min(y_lo, std::log10(y));
      y_hi = std::max(y_hi, std::log10(y));
    }
  }
  if (rows.empty()) x_lo = 0, x_hi = 1, y_lo = -1, y_hi = 0;
  x_lo = std::floor(x_lo), x_hi = std::max(std::ceil(x_hi), x_lo + 1);
  y_lo = std::floor(y_lo), y_hi = std::max(std::ceil(y_hi), y_lo + 1);

  const auto px = [&](double lx) { return left + (lx - x_lo) / (x_hi - x_lo) * (width - left - right); };
  const auto py = [&](double ly) { return top + (y_hi - ly) / (y_hi - y_lo) * (height - top - bottom); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << left << "\" y=\"18\">a = " << format_number(a_target) << "</text>\n";
  for (double d = x_lo; d <= x_hi; d += 1) {
    svg << "<line x1=\"" << px(d) << "\" y1=\"" << top << "\" x2=\"" << px(d) << "\" y2=\""
        << height - bottom << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << px(d) - 10 << "\" y=\"" << height - bottom + 16 << "\">1e" << d << "</text>\n";
  }
  for (double d = y_lo; d <= y_hi; d += 1) {
    svg << "<line x1=\"" << left << "\" y1=\"" << py(d) << "\" x2=\"" << width - right << "\" y2=\""
        << py(d) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << left - 40 << "\" y=\"" << py(d) + 4 << "\">1e" << d << "</text>\n";
  }
  svg << "<text x=\"" << (width - right + left) / 2 - 40 << "\" y=\"" << height - 12
      << "\">number of queries</text>\n";
  svg << "<text x=\"14\" y=\"" << (height - bottom + top) / 2
      << "\" transform=\"rotate(-90 14 " << (height - bottom + top) / 2 << ")\">estimation error</text>\n";

  std::map<std::string, std::vector<const ErrorRow*>> series;
  for (const auto* r : rows) series[r->kind].push_back(r);

  const auto polyline = [&](const std::vector<const ErrorRow*>& pts, auto value, const char* color,
                            const char* dash) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\"" << dash << " points=\"";
    for (const auto* r : pts) {
      const double y = value(*r);
      if (!(y > 0.0)) continue;
      svg << px(std::log10(static_cast<double>(r->n_queries))) << ',' << py(std::log10(y)) << ' ';
    }
    svg << "\"/>\n";
  };

  std::size_t index = 0;
  for (const auto& [name, pts] : series) {
    const char* color = kPalette[index % std::size(kPalette)];
    polyline(pts, plotted_error, color, "");
    polyline(pts, [](const ErrorRow& r) { return r.crb; }, color, " stroke-dasharray=\"2,3\"");
    for (const auto* r : pts) {
      svg << "<circle cx=\"" << px(std::log10(static_cast<double>(r->n_queries))) << "\" cy=\""
          << py(std::log10(plotted_error(*r))) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = top + 16.0 * static_cast<double>(index);
    svg << "<line x1=\"" << width - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << width - right + 30
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\"/>\n";
    svg << "<text x=\"" << width - right + 34 << "\" y=\"" << ly + 4 << "\">" << name << "</text>\n";
    ++index;
  }
  if (!series.empty()) {
    polyline(series.begin()->second, [](const ErrorRow& r) { return r.classical_bound; }, "#888",
             " stroke-dasharray=\"6,4\"");
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> emit_outputs(const ErrorCurve& curve, const OutputOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(options.directory, ec);
  if (ec) {
    throw std::runtime_error("cannot create '" + options.directory.string() + "': " + ec.message());
  }
  std::vector<std::filesystem::path> written;

  std::ostringstream csv;
  write_csv(curve, csv);
  const auto csv_path = options.directory / (options.stem + ".csv");
  write_file(csv_path, csv.str());
  written.push_back(csv_path);

  if (options.svg) {
    std::vector<double> targets;
    for (const auto& r : curve.rows) {
      if (std::find(targets.begin(), targets.end(), r.a_target) == targets.end()) {
        targets.push_back(r.a_target);
      }
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const auto path = options.directory / (options.stem + "_a" + std::to_string(k) + ".svg");
      write_file(path, render_svg(curve, targets[k]));
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace mlae
