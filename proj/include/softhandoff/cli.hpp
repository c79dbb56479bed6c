#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softhandoff/region.hpp"

namespace softhandoff::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// 12 significant digits, "." separator, negative zero printed as 0.
std::string format_number(double v);

struct ReferenceCurve {
  std::string label;
  std::vector<Point2> points;  // strictly increasing x
  bool known_discrepancy = false;
  std::string note;
};

const std::vector<ReferenceCurve>& reference_curves();
const ReferenceCurve* find_reference(std::string_view label);

/// Linear interpolation inside the curve's x range, nullopt outside.
std::optional<double> reference_height(const ReferenceCurve& curve, double x);

/// First two numeric columns of a CSV with a header row.
std::vector<Point2> read_curve_csv(const std::string& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);
void write_file(const std::string& path, const std::string& content);

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 2 validation error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softhandoff::cli
