#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aradon/exact_reference.hpp"
#include "aradon/image.hpp"
#include "aradon/radon_core.hpp"

namespace aradon {

/// sqrt(mean((a-b)^2)). Lengths must match and be non-zero.
double rmse(std::span<const double> a, std::span<const double> b);

/// Pearson correlation. Throws CorrelationError if both inputs are constant;
/// returns 0 if exactly one is.
double pearson(std::span<const double> a, std::span<const double> b);

struct Alignment {
  int lag = 0;
  double rmse = 0.0;
  double max_abs_diff = 0.0;
  double pearson = 0.0;
};

/// Compares exact[i] against approx[i - lag] over the union of both supports
/// (zero outside each row) for every lag in [-max_lag, max_lag] and keeps the
/// lag with the highest correlation. Ties go to the smaller |lag|, then to the
/// negative lag.
Alignment align_and_compare(std::span<const Bin> approx_row, std::span<const double> exact_row,
                            int max_lag);

/// Where angle index k of an octant lands on the exact transform's [0, 180)
/// axis. When `reversed` is set, approximate bins run against increasing rho.
struct AngleMapping {
  double angle_deg;
  bool reversed;
};

AngleMapping equivalent_angle(Octant octant, std::size_t k, std::size_t n);
std::vector<double> equivalent_angles(Octant octant, std::size_t n);

struct CompareRecord {
  Octant octant;
  std::size_t k;
  double slope;
  double angle_deg;  // exact-transform angle
  int lag;
  double rmse;
  double max_abs_diff;
  double pearson;
};

struct CompareReport {
  std::vector<CompareRecord> records;
  double mean_pearson = 0.0;
};

/// One record per angle index. `exact` must contain every equivalent angle of
/// the octant. max_lag < 0 means use n.
CompareReport compare_octant(const Image& img, const OctantSinogram& octant,
                             const ExactSinogram& exact, int max_lag = -1);

/// Concatenates reports and recomputes the mean correlation.
CompareReport merge_reports(std::span<const CompareReport> reports);

}  // namespace aradon
