#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adhesion/curves.hpp"

namespace adhesion {

/// One exported field sample. epsilon is empty for vanishing-viscosity rows.
struct ProfileRow {
  double x = 0.0;
  double t = 0.0;
  std::optional<double> eps;
  double u = 0.0;
  double R = 0.0;
  std::string region_label;
};

/// CSV with columns exactly: x,t,epsilon,u,R,region_label.
/// 17 significant digits, '.' decimal separator, LF line endings.
std::string export_profile(const std::vector<ProfileRow>& rows);
std::vector<ProfileRow> parse_profile(const std::string& csv);

/// Curve samples, columns: label,t,x.
struct CurveRow {
  std::string label;
  double t = 0.0;
  double x = 0.0;
};
std::string export_curves(const std::vector<CurveRow>& rows);

/// 17-significant-digit decimal form that round-trips doubles bit-exactly.
std::string format_g17(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace adhesion
