#include "adhesion/profile_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "adhesion/errors.hpp"

namespace adhesion {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string export_profile(const std::vector<ProfileRow>& rows) {
  std::string out = "x,t,epsilon,u,R,region_label\n";
  for (const auto& r : rows) {
    out += format_g17(r.x);
    out += ',';
    out += format_g17(r.t);
    out += ',';
    if (r.eps) out += format_g17(*r.eps);
    out += ',';
    out += format_g17(r.u);
    out += ',';
    out += format_g17(r.R);
    out += ',';
    out += r.region_label;
    out += '\n';
  }
  return out;
}

std::vector<ProfileRow> parse_profile(const std::string& csv) {
  std::vector<ProfileRow> rows;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "x,t,epsilon,u,R,region_label")
    throw validation_error("parse_profile: bad or missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    ProfileRow r;
    auto next = [&]() {
      if (!std::getline(ls, field, ',')) throw validation_error("parse_profile: short row");
      return field;
    };
    r.x = std::stod(next());
    r.t = std::stod(next());
    const std::string e = next();
    if (!e.empty()) r.eps = std::stod(e);
    r.u = std::stod(next());
    r.R = std::stod(next());
    std::getline(ls, r.region_label);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string export_curves(const std::vector<CurveRow>& rows) {
  std::string out = "label,t,x\n";
  for (const auto& r : rows) {
    out += r.label;
    out += ',';
    out += format_g17(r.t);
    out += ',';
    out += format_g17(r.x);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw numerics_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw numerics_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw numerics_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace adhesion
