#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "aradon/analysis.hpp"
#include "aradon/csv.hpp"
#include "aradon/errors.hpp"
#include "aradon/exact_reference.hpp"
#include "aradon/pgm.hpp"
#include "aradon/pipeline_sim.hpp"
#include "aradon/radon_core.hpp"

namespace aradon::cli {

namespace {

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  bool pad = false;
  bool render = false;
  std::string angles;
  std::string octant;
  std::optional<int> max_lag;
};

std::string default_prefix(const std::string& input) {
  std::filesystem::path p(input);
  p.replace_extension();
  return p.string();
}

std::vector<Octant> selected_octants(const CliConfig& cfg, std::vector<Octant> fallback) {
  if (cfg.octant.empty()) return fallback;
  return {parse_octant(cfg.octant)};
}

std::vector<double> to_grid(const OctantSinogram& sino) {
  std::vector<double> grid;
  grid.reserve(sino.rows.size() * sino.bin_count());
  for (const auto& row : sino.rows) grid.insert(grid.end(), row.begin(), row.end());
  return grid;
}

std::vector<double> to_grid(const ExactSinogram& sino) {
  std::vector<double> grid;
  grid.reserve(sino.values.size() * sino.rho_count());
  for (const auto& row : sino.values) grid.insert(grid.end(), row.begin(), row.end());
  return grid;
}

std::string octant_path(const std::string& prefix, Octant o, const char* suffix) {
  return prefix + "_" + std::string(octant_name(o)) + suffix;
}

int cmd_approx(const CliConfig& cfg, const Image& img, std::ostream& out) {
  for (Octant o : selected_octants(cfg, {kAllOctants.begin(), kAllOctants.end()})) {
    const OctantSinogram sino = approx_octant(img, o);
    const std::string csv_path = octant_path(cfg.output, o, ".csv");
    write_file_atomic(csv_path, write_sinogram_csv(sino));
    out << "wrote " << csv_path << '\n';
    if (cfg.render) {
      const std::string pgm_path = octant_path(cfg.output, o, ".pgm");
      write_file_atomic(pgm_path, render_pgm(to_grid(sino), sino.bin_count(), sino.rows.size()));
      out << "wrote " << pgm_path << '\n';
    }
  }
  return 0;
}

int cmd_exact(const CliConfig& cfg, const Image& img, std::ostream& out) {
  const auto angles = cfg.angles.empty() ? angle_range(0.0, 1.0, 180.0) : parse_angle_list(cfg.angles);
  const ExactSinogram sino = exact_radon(img, angles);
  const std::string csv_path = cfg.output + "_exact.csv";
  write_file_atomic(csv_path, write_sinogram_csv(sino));
  out << "wrote " << csv_path << '\n';
  if (cfg.render) {
    const std::string pgm_path = cfg.output + "_exact.pgm";
    write_file_atomic(pgm_path, render_pgm(to_grid(sino), sino.rho_count(), sino.values.size()));
    out << "wrote " << pgm_path << '\n';
  }
  return 0;
}

void print_latency(const SimResult& sim, std::size_t n, std::ostream& out) {
  out << "N=" << n << " theta_k_ready = N+1+k [";
  for (std::size_t k = 0; k < sim.ready.size(); ++k) out << (k ? " " : "") << sim.ready[k];
  out << "], total_cycles = " << sim.total_cycles << '\n';
}

int cmd_simulate(const CliConfig& cfg, const Image& img, std::ostream& out, bool trace_only) {
  for (Octant o : selected_octants(cfg, {Octant::Deg0to45})) {
    const SimResult sim = sim_run_octant(img, o);
    if (sim.overflow) throw std::runtime_error("accumulator overflow during simulation");
    const std::string trace_path = octant_path(cfg.output, o, "_trace.csv");
    write_file_atomic(trace_path, write_trace_csv(sim.trace));
    out << "wrote " << trace_path << '\n';
    if (!trace_only) {
      const std::string sino_path = octant_path(cfg.output, o, "_sim.csv");
      write_file_atomic(sino_path, write_sinogram_csv(sim.sinogram));
      out << "wrote " << sino_path << '\n';
      if (cfg.render) {
        const std::string pgm_path = octant_path(cfg.output, o, "_sim.pgm");
        write_file_atomic(pgm_path, render_pgm(to_grid(sim.sinogram), sim.sinogram.bin_count(),
                                               sim.sinogram.rows.size()));
        out << "wrote " << pgm_path << '\n';
      }
      print_latency(sim, img.size(), out);
    }
  }
  return 0;
}

int cmd_compare(const CliConfig& cfg, const Image& img, std::ostream& out) {
  std::vector<CompareReport> reports;
  for (Octant o : selected_octants(cfg, {kAllOctants.begin(), kAllOctants.end()})) {
    const OctantSinogram sino = approx_octant(img, o);
    const ExactSinogram exact = exact_radon(img, equivalent_angles(o, img.size()));
    reports.push_back(compare_octant(img, sino, exact, cfg.max_lag.value_or(-1)));
  }
  const CompareReport merged = merge_reports(reports);
  const std::string csv_path = cfg.output + "_compare.csv";
  write_file_atomic(csv_path, write_compare_csv(merged));
  out << "wrote " << csv_path << '\n';
  std::ostringstream mean;
  mean << "mean_pearson = " << format_real(merged.mean_pearson);
  out << mean.str() << '\n';
  return 0;
}

}  // namespace

std::vector<double> parse_angle_list(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ArgumentError("bad angle '" + s + "' in --angles");
    }
    if (used != s.size()) throw ArgumentError("bad angle '" + s + "' in --angles");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw ArgumentError("--angles range must be start:step:stop");
    return angle_range(to_double(parts[0]), to_double(parts[1]), to_double(parts[2]));
  }
  std::vector<double> angles;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) angles.push_back(to_double(part));
  if (angles.empty()) throw ArgumentError("--angles is empty");
  return angles;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shear-based approximate Radon transform tools"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Input PGM (P2 or P5)")->required();
    sub->add_option("-o,--output", cfg.output, "Output path prefix (default: input without extension)");
    sub->add_flag("--pad", cfg.pad, "Zero-pad non-square input to square");
  };

  auto* approx = app.add_subcommand("approx", "Approximate transform, one CSV per octant");
  add_common(approx);
  approx->add_option("--octant", cfg.octant, "Restrict to one octant");
  approx->add_flag("--render", cfg.render, "Also write normalized PGM renders");

  auto* exact = app.add_subcommand("exact", "Exact fractional-weight reference transform");
  add_common(exact);
  exact->add_option("--angles", cfg.angles, "Angles in degrees: a,b,c or start:step:stop (default 0:1:180)");
  exact->add_flag("--render", cfg.render, "Also write a normalized PGM render");

  auto* simulate = app.add_subcommand("simulate", "Cycle-accurate pipeline run with trace and latency summary");
  add_common(simulate);
  simulate->add_option("--octant", cfg.octant, "Octant to simulate (default deg0to45)");
  simulate->add_flag("--render", cfg.render, "Also write a normalized PGM render");

  auto* trace = app.add_subcommand("trace", "Pipeline multiplexer trace only");
  add_common(trace);
  trace->add_option("--octant", cfg.octant, "Octant to simulate (default deg0to45)");

  auto* compare = app.add_subcommand("compare", "Approximate vs exact comparison report");
  add_common(compare);
  compare->add_option("--octant", cfg.octant, "Restrict to one octant");
  compare->add_option("--max-lag", cfg.max_lag, "Alignment search radius in bins (default n)")
      ->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const Image img = read_pgm(read_file(cfg.input), {.pad_to_square = cfg.pad});
    if (cfg.output.empty()) cfg.output = default_prefix(cfg.input);
    if (approx->parsed()) return cmd_approx(cfg, img, out);
    if (exact->parsed()) return cmd_exact(cfg, img, out);
    if (simulate->parsed()) return cmd_simulate(cfg, img, out, false);
    if (trace->parsed()) return cmd_simulate(cfg, img, out, true);
    if (compare->parsed()) return cmd_compare(cfg, img, out);
  } catch (const std::exception& e) {
    err << "aradon: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace aradon::cli
