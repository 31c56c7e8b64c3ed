#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlae/experiments.hpp"

namespace mlae {

inline constexpr const char* kCsvHeader =
    "kind,a_target,M,n_queries,rmse,bias,percentile_error,crb,classical_bound,gamma_fit,delta_fit";

/// 12 significant digits, "%.12g"; NaN renders as an empty field.
std::string format_number(double value);

/// Header plus one LF-terminated line per row, in row order.
void write_csv(const ErrorCurve& curve, std::ostream& out);

/// Log-log chart of error against query count for one target, one polyline
/// per series plus dashed Cramer-Rao and classical reference lines.
std::string render_svg(const ErrorCurve& curve, double a_target);

struct OutputOptions {
  std::filesystem::path directory = ".";
  std::string stem = "sweep";
  bool svg = false;
};

/// Writes <stem>.csv and, with svg set, <stem>_a<k>.svg for the k-th distinct
/// target. Returns the written paths. Throws std::runtime_error naming the
/// path on IO failure.
std::vector<std::filesystem::path> emit_outputs(const ErrorCurve& curve, const OutputOptions& options);

}  // namespace mlae
