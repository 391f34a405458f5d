#include "aradon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aradon/errors.hpp"

namespace aradon {

double rmse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("rmse: length mismatch");
  if (a.empty()) throw ArgumentError("rmse: empty input");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("pearson: length mismatch");
  if (a.size() < 2) throw ArgumentError("pearson: need at least two samples");
  const double count = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / count;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / count;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 && var_b == 0.0) throw CorrelationError("pearson: both inputs are constant");
  if (var_a == 0.0 || var_b == 0.0) return 0.0;
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

Alignment align_and_compare(std::span<const Bin> approx_row, std::span<const double> exact_row,
                            int max_lag) {
  if (approx_row.empty() || exact_row.empty()) throw ArgumentError("align_and_compare: empty row");
  if (max_lag < 0) throw ArgumentError("align_and_compare: max_lag must be >= 0");

  const auto approx_len = static_cast<long>(approx_row.size());
  const auto exact_len = static_cast<long>(exact_row.size());

  auto evaluate = [&](int lag) {
    const long lo = std::min(0L, static_cast<long>(lag));
    const long hi = std::max(exact_len, approx_len + lag);
    std::vector<double> a, e;
    a.reserve(static_cast<std::size_t>(hi - lo));
    e.reserve(static_cast<std::size_t>(hi - lo));
    for (long i = lo; i < hi; ++i) {
      const long j = i - lag;
      a.push_back(j >= 0 && j < approx_len ? static_cast<double>(approx_row[static_cast<std::size_t>(j)]) : 0.0);
      e.push_back(i >= 0 && i < exact_len ? exact_row[static_cast<std::size_t>(i)] : 0.0);
    }
    Alignment al;
    al.lag = lag;
    al.pearson = pearson(a, e);
    al.rmse = rmse(a, e);
    for (std::size_t i = 0; i < a.size(); ++i) al.max_abs_diff = std::max(al.max_abs_diff, std::abs(a[i] - e[i]));
    return al;
  };

  // Candidate order 0, -1, +1, -2, +2, ... realizes the tie-break rule.
  Alignment best = evaluate(0);
  for (int m = 1; m <= max_lag; ++m) {
    for (int lag : {-m, m}) {
      Alignment cand = evaluate(lag);
      if (cand.pearson > best.pearson) best = cand;
    }
  }
  return best;
}

AngleMapping equivalent_angle(Octant octant, std::size_t k, std::size_t n) {
  if (n < 2 || k >= n) throw ArgumentError("equivalent_angle: angle index out of range");
  const double native = slope_angles_deg(n)[k];
  switch (octant) {
    case Octant::Deg0to45: return {native, false};
    case Octant::Deg45to90: return {90.0 - native, false};
    case Octant::Deg90to135: return {90.0 + native, true};
    case Octant::Deg135to180:
      // 180 degrees is the 0 degree projection read backward.
      if (k == 0) return {0.0, true};
      return {180.0 - native, false};
  }
  return {native, false};
}

std::vector<double> equivalent_angles(Octant octant, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(equivalent_angle(octant, k, n).angle_deg);
  return out;
}

namespace {

std::size_t find_angle(const ExactSinogram& exact, double angle) {
  for (std::size_t i = 0; i < exact.angles_deg.size(); ++i) {
    if (std::abs(exact.angles_deg[i] - angle) <= 1e-9) return i;
  }
  throw ArgumentError("compare_octant: exact sinogram has no angle " + std::to_string(angle));
}

}  // namespace

CompareReport compare_octant(const Image& img, const OctantSinogram& octant,
                             const ExactSinogram& exact, int max_lag) {
  const std::size_t n = octant.n;
  if (img.size() != n) throw ArgumentError("compare_octant: image and sinogram sizes differ");
  if (octant.rows.size() != n) throw ArgumentError("compare_octant: malformed octant sinogram");
  if (max_lag < 0) max_lag = static_cast<int>(n);

  CompareReport report;
  report.records.reserve(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const AngleMapping map = equivalent_angle(octant.octant, k, n);
    const auto& exact_row = exact.values[find_angle(exact, map.angle_deg)];
    std::vector<Bin> approx_row = octant.rows[k];
    if (map.reversed) std::reverse(approx_row.begin(), approx_row.end());
    const Alignment al = align_and_compare(approx_row, exact_row, max_lag);
    report.records.push_back({octant.octant, k, octant.slopes[k], map.angle_deg, al.lag, al.rmse,
                              al.max_abs_diff, al.pearson});
    sum += al.pearson;
  }
  report.mean_pearson = sum / static_cast<double>(n);
  return report;
}

CompareReport merge_reports(std::span<const CompareReport> reports) {
  CompareReport merged;
  for (const auto& r : reports) merged.records.insert(merged.records.end(), r.records.begin(), r.records.end());
  if (!merged.records.empty()) {
    double sum = 0.0;
    for (const auto& rec : merged.records) sum += rec.pearson;
    merged.mean_pearson = sum / static_cast<double>(merged.records.size());
  }
  return merged;
}

}  // namespace aradon
