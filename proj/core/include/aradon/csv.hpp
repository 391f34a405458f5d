#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aradon/analysis.hpp"
#include "aradon/exact_reference.hpp"
#include "aradon/pipeline_sim.hpp"
#include "aradon/radon_core.hpp"

namespace aradon {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nine significant digits; integral values keep a trailing ".0".
std::string format_real(double v);

/// Header `k,slope,angle_deg,b0,...`; one row per angle index.
std::string write_sinogram_csv(const OctantSinogram& sino);
/// Header `angle_deg,r0,...`; one row per angle.
std::string write_sinogram_csv(const ExactSinogram& sino);
/// Header `cycle,stage,row,shift_bit`, ordered by cycle then stage.
std::string write_trace_csv(const Trace& trace);
std::string write_compare_csv(const CompareReport& report);

/// Reads back write_sinogram_csv(OctantSinogram). The octant is not stored in
/// the file and is taken from the caller.
OctantSinogram parse_octant_csv(std::string_view text, Octant octant = Octant::Deg0to45);
Trace parse_trace_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace aradon
