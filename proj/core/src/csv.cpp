#include "aradon/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace aradon {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string write_sinogram_csv(const OctantSinogram& sino) {
  std::string out = "k,slope,angle_deg";
  for (std::size_t b = 0; b < sino.bin_count(); ++b) out += ",b" + std::to_string(b);
  out += '\n';
  for (std::size_t k = 0; k < sino.rows.size(); ++k) {
    out += std::to_string(k) + ',' + format_real(sino.slopes[k]) + ',' + format_real(sino.angles_deg[k]);
    for (Bin v : sino.rows[k]) out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string write_sinogram_csv(const ExactSinogram& sino) {
  std::string out = "angle_deg";
  for (std::size_t r = 0; r < sino.rho_count(); ++r) out += ",r" + std::to_string(r);
  out += '\n';
  for (std::size_t a = 0; a < sino.angles_deg.size(); ++a) {
    out += format_real(sino.angles_deg[a]);
    for (double v : sino.values[a]) out += ',' + format_real(v);
    out += '\n';
  }
  return out;
}

std::string write_trace_csv(const Trace& trace) {
  std::string out = "cycle,stage,row,shift_bit\n";
  for (const auto& e : trace) {
    out += std::to_string(e.cycle) + ',' + std::to_string(e.stage) + ',' + std::to_string(e.row) +
           ',' + std::to_string(e.shift_bit) + '\n';
  }
  return out;
}

std::string write_compare_csv(const CompareReport& report) {
  std::string out = "octant,k,slope,angle_deg,lag,rmse,max_abs_diff,pearson\n";
  for (const auto& r : report.records) {
    out += std::string(octant_name(r.octant)) + ',' + std::to_string(r.k) + ',' + format_real(r.slope) +
           ',' + format_real(r.angle_deg) + ',' + std::to_string(r.lag) + ',' + format_real(r.rmse) +
           ',' + format_real(r.max_abs_diff) + ',' + format_real(r.pearson) + '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw CsvError("csv: malformed number '" + std::string(field) + "'");
  }
  return value;
}

double parse_real(std::string_view field) {
  // libstdc++ 11 lacks floating-point from_chars.
  std::string owned(field);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw CsvError("csv: malformed real '" + owned + "'");
  }
  if (used != owned.size()) throw CsvError("csv: malformed real '" + owned + "'");
  return v;
}

}  // namespace

OctantSinogram parse_octant_csv(std::string_view text, Octant octant) {
  const auto lines = split_lines(text);
  if (lines.empty() || !lines[0].starts_with("k,slope,angle_deg")) {
    throw CsvError("csv: missing octant sinogram header");
  }
  const std::size_t bins = split_fields(lines[0]).size() - 3;
  OctantSinogram sino;
  sino.octant = octant;
  sino.n = (bins + 1) / 2;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != bins + 3) throw CsvError("csv: row " + std::to_string(i) + " has wrong width");
    if (parse_number<std::size_t>(fields[0]) != i - 1) throw CsvError("csv: rows out of order");
    sino.slopes.push_back(parse_real(fields[1]));
    sino.angles_deg.push_back(parse_real(fields[2]));
    std::vector<Bin> row;
    row.reserve(bins);
    for (std::size_t b = 0; b < bins; ++b) row.push_back(parse_number<Bin>(fields[b + 3]));
    sino.rows.push_back(std::move(row));
  }
  if (sino.rows.size() != sino.n || bins % 2 == 0) {
    throw CsvError("csv: expected n rows of 2n-1 bins");
  }
  return sino;
}

Trace parse_trace_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "cycle,stage,row,shift_bit") throw CsvError("csv: missing trace header");
  Trace trace;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 4) throw CsvError("csv: trace row " + std::to_string(i) + " has wrong width");
    trace.push_back({parse_number<std::uint64_t>(f[0]), parse_number<std::size_t>(f[1]),
                     parse_number<std::size_t>(f[2]), parse_number<int>(f[3])});
  }
  return trace;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace aradon
