#pragma once

// Cycle-accurate model of the row-streaming shear pipeline.
//
// Rows enter stage 1 one per clock, top to bottom, together with their row
// offset in a side register. Each clock, the word leaving stage j is added
// lane-wise into accumulator k = j-1, then the stage-j multiplexer either
// passes it on or shifts it one lane toward higher bin index (zero fill at
// lane 0). The control bit comes from the line-equation calculator, which
// sees only the stage index and the row offset.
//
// The hardware description shifts left with zero fill at the rightmost
// pixel; that is the mirror of the orientation modeled here, and readout is
// in the same canonical bin order as shear_project_octant.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aradon/image.hpp"
#include "aradon/radon_core.hpp"

namespace aradon {

struct PipelineConfig {
  std::size_t n = 0;
  unsigned pixel_bits = 8;
  std::size_t lane_count = 0;
  unsigned acc_bits = 0;

  /// Config for an n×n image: 2n-1 lanes, 8 + ceil(log2 n) accumulator bits.
  static PipelineConfig for_size(std::size_t n);
};

/// ceil(log2 n) for n >= 1.
unsigned ceil_log2(std::size_t n) noexcept;

/// Shift-or-pass control for stage j in [1, n-1] and row offset d.
int line_eq_calc(std::size_t stage, std::size_t d, std::size_t n);

/// Fixed-width lane adder. Wraps modulo 2^bits and reports carry-out.
struct LaneSum {
  std::uint32_t value;
  bool overflow;
};
LaneSum lane_add(std::uint32_t a, std::uint32_t b, unsigned bits) noexcept;

using Lane = std::uint32_t;

struct StageRegister {
  std::vector<Lane> lanes;
  bool occupied = false;
};

struct PipelineState {
  std::uint64_t cycle = 0;
  /// stage_regs[j-1] is stage j.
  std::vector<StageRegister> stage_regs;
  std::vector<std::optional<std::size_t>> row_num_regs;
  /// acc[k] accumulates angle index k.
  std::vector<std::vector<Lane>> acc;
  std::vector<std::optional<std::uint64_t>> ready;
  /// Largest value any accumulator lane has held.
  Lane max_acc_lane = 0;
  /// Sticky: set if any accumulator add carried out of acc_bits.
  bool overflow = false;
};

struct TraceEntry {
  std::uint64_t cycle;
  std::size_t stage;
  std::size_t row;
  int shift_bit;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using Trace = std::vector<TraceEntry>;

class Pipeline {
 public:
  /// Throws ArgumentError when cfg does not describe img.
  Pipeline(Image img, PipelineConfig cfg);
  explicit Pipeline(Image img) : Pipeline(img, PipelineConfig::for_size(img.size())) {}

  /// Advances one clock. Inert apart from the cycle counter once finished.
  void step();

  bool finished() const noexcept;
  const PipelineState& state() const noexcept { return state_; }
  const PipelineConfig& config() const noexcept { return cfg_; }
  const Trace& trace() const noexcept { return trace_; }

  /// Accumulator k in canonical bin order.
  std::vector<Bin> readout(std::size_t k) const;

 private:
  Image img_;
  PipelineConfig cfg_;
  PipelineState state_;
  Trace trace_;
  std::size_t next_row_ = 0;
};

struct SimResult {
  OctantSinogram sinogram;
  Trace trace;
  /// ready[k] = clock on which angle k was complete.
  std::vector<std::uint64_t> ready;
  std::uint64_t total_cycles = 0;
  Lane max_acc_lane = 0;
  bool overflow = false;
};

/// Runs the native 0-45 degree band to completion.
SimResult sim_run(const Image& img);

/// Runs one octant: radon_core preprocessing followed by sim_run.
SimResult sim_run_octant(const Image& img, Octant octant);

}  // namespace aradon
