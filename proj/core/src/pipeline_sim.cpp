#include "aradon/pipeline_sim.hpp"

#include <algorithm>
#include <string>

#include "aradon/errors.hpp"

namespace aradon {

unsigned ceil_log2(std::size_t n) noexcept {
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

PipelineConfig PipelineConfig::for_size(std::size_t n) {
  if (n < 2) throw ArgumentError("pipeline: n must be >= 2");
  PipelineConfig cfg;
  cfg.n = n;
  cfg.pixel_bits = 8;
  cfg.lane_count = 2 * n - 1;
  cfg.acc_bits = cfg.pixel_bits + ceil_log2(n);
  return cfg;
}

int line_eq_calc(std::size_t stage, std::size_t d, std::size_t n) {
  if (n < 2 || stage < 1 || stage >= n || d >= n) {
    throw ArgumentError("line_eq_calc: stage " + std::to_string(stage) + ", row " +
                        std::to_string(d) + " out of range for n=" + std::to_string(n));
  }
  return static_cast<int>(total_shift(d, stage, n) - total_shift(d, stage - 1, n));
}

LaneSum lane_add(std::uint32_t a, std::uint32_t b, unsigned bits) noexcept {
  const std::uint64_t sum = std::uint64_t{a} + b;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  return {static_cast<std::uint32_t>(sum & (limit - 1)), sum >= limit};
}

namespace {

void validate(const Image& img, const PipelineConfig& cfg) {
  const std::size_t n = img.size();
  if (cfg.n != n) {
    throw ArgumentError("pipeline config for n=" + std::to_string(cfg.n) + " given a " +
                        std::to_string(n) + "x" + std::to_string(n) + " image");
  }
  if (cfg.pixel_bits != 8) throw ArgumentError("pipeline: only 8-bit pixels are modeled");
  if (cfg.lane_count != 2 * n - 1) throw ArgumentError("pipeline: lane_count must be 2n-1");
  // n * (2^pixel_bits - 1) must fit.
  if (cfg.acc_bits > 31 ||
      static_cast<std::uint64_t>(n) * ((1u << cfg.pixel_bits) - 1) >= (std::uint64_t{1} << cfg.acc_bits)) {
    throw ArgumentError("pipeline: acc_bits=" + std::to_string(cfg.acc_bits) +
                        " cannot hold a full column sum");
  }
}

}  // namespace

Pipeline::Pipeline(Image img, PipelineConfig cfg) : img_(std::move(img)), cfg_(cfg) {
  validate(img_, cfg_);
  const std::size_t n = cfg_.n;
  state_.stage_regs.assign(n, StageRegister{std::vector<Lane>(cfg_.lane_count, 0), false});
  state_.row_num_regs.assign(n, std::nullopt);
  state_.acc.assign(n, std::vector<Lane>(cfg_.lane_count, 0));
  state_.ready.assign(n, std::nullopt);
  trace_.reserve(n * (n - 1));
}

bool Pipeline::finished() const noexcept {
  return std::all_of(state_.ready.begin(), state_.ready.end(),
                     [](const auto& r) { return r.has_value(); });
}

void Pipeline::step() {
  const std::uint64_t clock = state_.cycle + 1;
  if (finished()) {
    state_.cycle = clock;
    return;
  }
  const std::size_t n = cfg_.n;
  auto& regs = state_.stage_regs;
  auto& rows = state_.row_num_regs;
  std::vector<TraceEntry> decisions;

  // Walk from the last stage backward so each word moves into a slot that
  // has already been vacated this clock.
  for (std::size_t j = n; j >= 1; --j) {
    StageRegister& reg = regs[j - 1];
    if (!reg.occupied) continue;
    const std::size_t d = *rows[j - 1];
    const std::size_t k = j - 1;

    auto& acc = state_.acc[k];
    for (std::size_t lane = 0; lane < cfg_.lane_count; ++lane) {
      const LaneSum s = lane_add(acc[lane], reg.lanes[lane], cfg_.acc_bits);
      acc[lane] = s.value;
      state_.overflow = state_.overflow || s.overflow;
      state_.max_acc_lane = std::max(state_.max_acc_lane, s.value);
    }
    if (d == n - 1) state_.ready[k] = clock;

    if (j < n) {
      const int bit = line_eq_calc(j, d, n);
      decisions.push_back({clock, j, d, bit});
      StageRegister& next = regs[j];
      if (bit == 1) {
        next.lanes[0] = 0;
        std::copy(reg.lanes.begin(), reg.lanes.end() - 1, next.lanes.begin() + 1);
      } else {
        next.lanes = reg.lanes;
      }
      next.occupied = true;
      rows[j] = d;
    }
    reg.occupied = false;
    rows[j - 1].reset();
  }

  if (next_row_ < n) {
    StageRegister& first = regs[0];
    std::fill(first.lanes.begin(), first.lanes.end(), 0);
    const auto src = img_.row(next_row_);
    std::copy(src.begin(), src.end(), first.lanes.begin());
    first.occupied = true;
    rows[0] = next_row_;
    ++next_row_;
  }

  // Stages were visited last-first; the trace is ordered by stage.
  trace_.insert(trace_.end(), decisions.rbegin(), decisions.rend());

  state_.cycle = clock;
}

std::vector<Bin> Pipeline::readout(std::size_t k) const {
  if (k >= cfg_.n) throw ArgumentError("readout: angle index out of range");
  const auto& acc = state_.acc[k];
  return {acc.begin(), acc.end()};
}

SimResult sim_run(const Image& img) {
  Pipeline pipe(img);
  while (!pipe.finished()) pipe.step();

  const std::size_t n = img.size();
  SimResult result;
  result.sinogram.n = n;
  result.sinogram.octant = Octant::Deg0to45;
  for (std::size_t k = 0; k < n; ++k) result.sinogram.rows.push_back(pipe.readout(k));
  result.sinogram.slopes = slope_table(n);
  result.sinogram.angles_deg = slope_angles_deg(n);
  result.trace = pipe.trace();
  for (const auto& r : pipe.state().ready) result.ready.push_back(*r);
  result.total_cycles = pipe.state().cycle;
  result.max_acc_lane = pipe.state().max_acc_lane;
  result.overflow = pipe.state().overflow;
  return result;
}

SimResult sim_run_octant(const Image& img, Octant octant) {
  SimResult result = sim_run(preprocess_for_octant(img, octant));
  result.sinogram.octant = octant;
  return result;
}

}  // namespace aradon
