#include "aradon/radon_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "aradon/errors.hpp"

namespace aradon {

std::size_t total_shift(std::size_t d, std::size_t k, std::size_t n) {
  if (n < 2) throw ArgumentError("total_shift: n must be >= 2");
  if (d >= n || k >= n) {
    throw ArgumentError("total_shift: index out of range (d=" + std::to_string(d) +
                        ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  // floor(d*k/(n-1) + 1/2) in integers.
  const std::size_t den = n - 1;
  return (2 * d * k + den) / (2 * den);
}

ShiftTable::ShiftTable(std::size_t n) : n_(n) {
  if (n < 2) throw ArgumentError("shift table: n must be >= 2");
  shifts_.resize(n * n);
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t k = 0; k < n; ++k) shifts_[d * n + k] = total_shift(d, k, n);
  }
}

std::vector<std::size_t> ShiftTable::column(std::size_t k) const {
  std::vector<std::size_t> col(n_);
  for (std::size_t d = 0; d < n_; ++d) col[d] = at(d, k);
  return col;
}

namespace {

void check_projection_args(const Image& img, const ShiftTable& table, std::size_t k) {
  if (table.size() != img.size()) {
    throw ArgumentError("shift table built for n=" + std::to_string(table.size()) +
                        " but image is " + std::to_string(img.size()));
  }
  if (k >= img.size()) {
    throw ArgumentError("angle index " + std::to_string(k) + " out of range");
  }
}

}  // namespace

std::vector<Bin> shear_project_octant(const Image& img, const ShiftTable& table, std::size_t k) {
  check_projection_args(img, table, k);
  const std::size_t n = img.size();
  std::vector<Bin> bins(2 * n - 1, 0);
  for (std::size_t d = 0; d < n; ++d) {
    const auto row = img.row(d);
    const std::size_t shift = table.at(d, k);
    for (std::size_t c = 0; c < n; ++c) bins[c + shift] += row[c];
  }
  return bins;
}

std::vector<Bin> discrete_line_project(const Image& img, const ShiftTable& table, std::size_t k) {
  check_projection_args(img, table, k);
  const auto n = static_cast<std::ptrdiff_t>(img.size());
  std::vector<Bin> bins(2 * img.size() - 1, 0);
  // Line b enters the top row at column b and moves down one row at a time,
  // either straight down or one column over when the line equation steps.
  for (std::ptrdiff_t b = 0; b < 2 * n - 1; ++b) {
    std::ptrdiff_t col = b;
    Bin sum = 0;
    for (std::ptrdiff_t d = 0; d < n; ++d) {
      if (d > 0) {
        const auto ud = static_cast<std::size_t>(d);
        const bool diagonal_step = table.at(ud, k) != table.at(ud - 1, k);
        if (diagonal_step) --col;
      }
      if (col >= 0 && col < n) sum += img(static_cast<std::size_t>(d), static_cast<std::size_t>(col));
    }
    bins[static_cast<std::size_t>(b)] = sum;
  }
  return bins;
}

std::string_view octant_name(Octant o) noexcept {
  switch (o) {
    case Octant::Deg0to45: return "deg0to45";
    case Octant::Deg45to90: return "deg45to90";
    case Octant::Deg90to135: return "deg90to135";
    case Octant::Deg135to180: return "deg135to180";
  }
  return "unknown";
}

Octant parse_octant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Octant o : kAllOctants) {
    if (lower == octant_name(o)) return o;
  }
  throw ArgumentError("unknown octant '" + std::string(name) +
                      "' (expected deg0to45, deg45to90, deg90to135 or deg135to180)");
}

Image preprocess_for_octant(const Image& img, Octant octant) {
  switch (octant) {
    case Octant::Deg0to45: return img;
    case Octant::Deg45to90: return transpose(img);
    case Octant::Deg90to135: return mirror_h(transpose(img));
    case Octant::Deg135to180: return mirror_h(img);
  }
  return img;
}

std::vector<double> slope_table(std::size_t n) {
  if (n < 2) throw ArgumentError("slope table: n must be >= 2");
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) / static_cast<double>(n - 1);
  return t;
}

std::vector<double> slope_angles_deg(std::size_t n) {
  auto angles = slope_table(n);
  for (double& a : angles) a = std::atan(a) * 180.0 / std::numbers::pi;
  return angles;
}

OctantSinogram approx_octant(const Image& img, Octant octant) {
  const Image prepared = preprocess_for_octant(img, octant);
  const std::size_t n = prepared.size();
  const ShiftTable table(n);
  OctantSinogram sino;
  sino.n = n;
  sino.octant = octant;
  sino.rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) sino.rows.push_back(shear_project_octant(prepared, table, k));
  sino.slopes = slope_table(n);
  sino.angles_deg = slope_angles_deg(n);
  return sino;
}

std::array<OctantSinogram, 4> full_approx_radon(const Image& img) {
  return {approx_octant(img, Octant::Deg0to45), approx_octant(img, Octant::Deg45to90),
          approx_octant(img, Octant::Deg90to135), approx_octant(img, Octant::Deg135to180)};
}

}  // namespace aradon
