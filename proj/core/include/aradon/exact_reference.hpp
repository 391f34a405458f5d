#pragma once

// Fractional-weight discrete Radon transform used as the accuracy reference.
//
// Frame: origin at the image center ((n-1)/2, (n-1)/2), x to the right,
// y downward, rho = x cos(theta) + y sin(theta). Every pixel is split into
// four subpixels at (+-1/4, +-1/4) carrying a quarter of its intensity; each
// subpixel's mass is shared linearly between the two rho bins around it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aradon/image.hpp"

namespace aradon {

struct ExactSinogram {
  std::vector<double> angles_deg;
  std::vector<double> rho_centers;
  /// angles_deg.size() rows of rho_centers.size() values.
  std::vector<std::vector<double>> values;

  std::size_t rho_count() const noexcept { return rho_centers.size(); }
};

/// Unit-spaced rho centers, 2*ceil(n*sqrt(2)/2) + 3 of them, symmetric about 0.
std::vector<double> rho_axis(std::size_t n);

/// Subpixel projections performed by exact_radon for an n×n image and p angles.
std::uint64_t op_count_estimate(std::size_t n, std::size_t p);

struct ExactStats {
  std::uint64_t subpixel_ops = 0;
};

/// Angles must lie in [0, 180). Passing `stats` enables the operation counter.
ExactSinogram exact_radon(const Image& img, std::span<const double> angles_deg,
                          ExactStats* stats = nullptr);

/// Angles start, start+step, ... strictly below stop.
std::vector<double> angle_range(double start, double step, double stop);

}  // namespace aradon
