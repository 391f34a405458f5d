#pragma once

// Shear-based approximate discrete Radon transform.
//
// Geometry: for angle index k in [0, n-1] the discrete line through row d is
// displaced by total_shift(d, k, n) = round_half_up(d * k / (n - 1)) pixels.
// Pixel (r, c) lands in bin c + total_shift(r, k, n), so every projection has
// 2n-1 bins. k = 0 gives column sums, k = n-1 gives the b = r + c diagonals.
//
// The four 45-degree bands are reduced to the native band by preprocessing:
//   Deg0to45     img
//   Deg45to90    transpose(img)
//   Deg90to135   mirror_h(transpose(img))
//   Deg135to180  mirror_h(img)

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "aradon/image.hpp"

namespace aradon {

using Bin = std::int64_t;

/// Cumulative shift of row offset d at angle index k for an n×n image.
/// Throws ArgumentError unless n >= 2, d < n, k < n.
std::size_t total_shift(std::size_t d, std::size_t k, std::size_t n);

/// Tabulated total_shift for every (row offset, angle index).
class ShiftTable {
 public:
  explicit ShiftTable(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t at(std::size_t d, std::size_t k) const noexcept { return shifts_[d * n_ + k]; }

  /// Column k as a vector indexed by row offset.
  std::vector<std::size_t> column(std::size_t k) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> shifts_;
};

inline ShiftTable build_shift_table(std::size_t n) { return ShiftTable(n); }

/// Projection of one angle by shearing rows and summing columns.
std::vector<Bin> shear_project_octant(const Image& img, const ShiftTable& table, std::size_t k);

/// Same projection computed by walking each discrete line pixel by pixel.
/// Kept structurally separate from shear_project_octant so each can check the other.
std::vector<Bin> discrete_line_project(const Image& img, const ShiftTable& table, std::size_t k);

enum class Octant { Deg0to45, Deg45to90, Deg90to135, Deg135to180 };

inline constexpr std::array<Octant, 4> kAllOctants = {Octant::Deg0to45, Octant::Deg45to90,
                                                      Octant::Deg90to135, Octant::Deg135to180};

std::string_view octant_name(Octant o) noexcept;
/// Inverse of octant_name (case-insensitive); throws ArgumentError on unknown names.
Octant parse_octant(std::string_view name);

/// Applies the mirror/transpose preprocessing for an octant.
Image preprocess_for_octant(const Image& img, Octant octant);

struct OctantSinogram {
  std::size_t n = 0;
  Octant octant = Octant::Deg0to45;
  /// n rows of 2n-1 bins, indexed by angle index k.
  std::vector<std::vector<Bin>> rows;
  /// t_k = k / (n-1).
  std::vector<double> slopes;
  /// atan(t_k) in degrees, before octant remapping.
  std::vector<double> angles_deg;

  std::size_t bin_count() const noexcept { return n == 0 ? 0 : 2 * n - 1; }
};

/// Native-band slopes and their angles for an n×n image.
std::vector<double> slope_table(std::size_t n);
std::vector<double> slope_angles_deg(std::size_t n);

/// All n angles of one octant. Preprocessing is applied internally.
OctantSinogram approx_octant(const Image& img, Octant octant);

/// The four octant sinograms, in kAllOctants order.
std::array<OctantSinogram, 4> full_approx_radon(const Image& img);

}  // namespace aradon
