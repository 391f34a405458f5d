#include "aradon/exact_reference.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "aradon/errors.hpp"

namespace aradon {

std::vector<double> rho_axis(std::size_t n) {
  if (n < 2) throw ArgumentError("rho_axis: n must be >= 2");
  const auto half = static_cast<std::ptrdiff_t>(
      std::ceil(static_cast<double>(n) * std::numbers::sqrt2 / 2.0));
  const std::ptrdiff_t radius = half + 1;
  std::vector<double> centers;
  centers.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::ptrdiff_t i = -radius; i <= radius; ++i) centers.push_back(static_cast<double>(i));
  return centers;
}

std::uint64_t op_count_estimate(std::size_t n, std::size_t p) {
  return 4ull * static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(n) *
         static_cast<std::uint64_t>(n);
}

ExactSinogram exact_radon(const Image& img, std::span<const double> angles_deg, ExactStats* stats) {
  const std::size_t n = img.size();
  if (n < 2) throw ArgumentError("exact_radon: image side must be >= 2");
  for (double a : angles_deg) {
    if (!(a >= 0.0 && a < 180.0)) {
      throw ArgumentError("exact_radon: angle " + std::to_string(a) + " outside [0, 180)");
    }
  }

  ExactSinogram sino;
  sino.angles_deg.assign(angles_deg.begin(), angles_deg.end());
  sino.rho_centers = rho_axis(n);
  const std::size_t bins = sino.rho_centers.size();
  const double origin = -sino.rho_centers.front();
  const double center = (static_cast<double>(n) - 1.0) / 2.0;
  constexpr std::array<double, 2> kSub = {-0.25, 0.25};

  std::uint64_t ops = 0;
  sino.values.reserve(angles_deg.size());
  for (double angle : angles_deg) {
    const double theta = angle * std::numbers::pi / 180.0;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    std::vector<double> row(bins, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const double quarter = img(r, c) / 4.0;
        const double x0 = static_cast<double>(c) - center;
        const double y0 = static_cast<double>(r) - center;
        for (double dy : kSub) {
          for (double dx : kSub) {
            ++ops;
            const double pos = (x0 + dx) * cs + (y0 + dy) * sn + origin;
            const double lower = std::floor(pos);
            const double frac = pos - lower;
            const auto i = static_cast<std::size_t>(lower);
            row[i] += quarter * (1.0 - frac);
            row[i + 1] += quarter * frac;
          }
        }
      }
    }
    sino.values.push_back(std::move(row));
  }
  if (stats != nullptr) stats->subpixel_ops += ops;
  return sino;
}

std::vector<double> angle_range(double start, double step, double stop) {
  if (!(step > 0.0)) throw ArgumentError("angle_range: step must be positive");
  std::vector<double> angles;
  for (std::size_t i = 0;; ++i) {
    const double a = start + static_cast<double>(i) * step;
    if (a >= stop - 1e-12) break;
    angles.push_back(a);
  }
  return angles;
}

}  // namespace aradon
