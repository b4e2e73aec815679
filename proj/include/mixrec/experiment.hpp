#ifndef MIXREC_EXPERIMENT_HPP
#define MIXREC_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixrec/oracle.hpp"
#include "mixrec/processes.hpp"
#include "mixrec/recursion.hpp"

namespace mixrec {

/// Optional projection stage appended to a run.
struct OracleSpec {
  std::string grid0;          // grid spec for the projection support
  std::size_t quad_points = 2000;
  std::size_t max_iter = 100000;
  double tol = 1e-9;
};

/// Everything one experiment needs: process, model, schedule, seeds, output.
struct ExperimentConfig {
  ProcessConfig process;
  std::string grid_spec;             // "lo:hi:K" or 2D form; "atoms:a,b,..."
  std::string kernel_spec;           // "gaussian:sigma2" or "drift:sigma2:ts"
  std::string schedule_spec = "harmonic";  // or "power:alpha:c"
  std::vector<std::uint64_t> seeds = {1};
  std::size_t trace_stride = 0;      // 0 = automatic
  std::vector<std::size_t> checkpoints;
  std::string out_dir;
  int threads = 1;
  std::optional<OracleSpec> oracle;

  GridPtr make_grid() const;
  Kernel make_kernel() const;
  WeightSchedule make_schedule() const;
  MixingDensity make_f0() const;     // uniform unless f0_masses set
  std::vector<double> f0_masses;     // optional explicit start

  void validate() const;
  std::string to_json() const;
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
};

/// Files produced by a run, with content hashes.
struct Manifest {
  struct Entry {
    std::string path;    // relative to the run directory
    std::string sha256;
    std::uint64_t bytes = 0;
  };
  std::vector<Entry> entries;

  void add_file(const std::string& dir, const std::string& rel_path);
  std::string to_json() const;
  bool same_hashes(const Manifest& other) const;
};

/// simulate -> fit -> diagnose -> (oracle) for every seed; writes stream,
/// trace, density and checkpoint CSVs plus an aggregate summary, then the
/// manifest. Any stage failure aborts with stage, seed and iteration in the
/// message and leaves a ".failed" marker next to the partial outputs.
Manifest run_experiment(const ExperimentConfig& config);

/// Preset configurations reproducing the worked examples. Known ids:
/// ex1, ex2, ex3, ex4a, ex4b, ex4b_misspec, ma_q.
ExperimentConfig preset_config(const std::string& example_id);

/// Flag-style overrides applied on top of a preset (n, seeds, grid, ...).
struct Overrides {
  std::optional<std::size_t> n;
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::string> grid;
  std::optional<std::string> schedule;
  std::optional<double> r;
  std::optional<int> threads;
  std::optional<std::string> out_dir;
};

Manifest reproduce(const std::string& example_id, const Overrides& overrides);

std::vector<std::string> preset_ids();

}  // namespace mixrec

#endif  // MIXREC_EXPERIMENT_HPP
