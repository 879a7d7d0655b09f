#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "analysis/behavior.hpp"
#include "core/run_config.hpp"

namespace alife {

inline constexpr std::string_view kTimeseriesHeader =
    "t,N,births,deaths,grass_cells,mean_energy,total_energy,act_rest,act_move_left,"
    "act_move_right,act_jump,act_eat,act_mate_left,act_mate_right";
inline constexpr std::string_view kWeightsHeader = "t,gene_index,mean,std";
inline constexpr std::string_view kSummaryHeader =
    "pg,mode,seed,survived,final_n,extinction_iteration,majority_label,status";

struct RunOutcome {
  bool survived = false;
  uint64_t final_population = 0;
  int64_t extinction_iteration = -1;  // -1 when the run survived
  uint64_t iterations_completed = 0;
};

// Full scenario: fresh simulation, timeseries.csv + weights.csv rows at the
// configured intervals, optional periodic snapshots, snapshot_final.txt and
// manifest.txt in out_dir. Stops early on extinction.
RunOutcome run_scenario(const RunConfig& config, const std::filesystem::path& out_dir);

// Continues a snapshotted run to max_iterations (optionally overridden; 0
// keeps the stored value). Output files cover only the resumed stretch, so
// concatenating the pieces of a split run reproduces the uninterrupted one.
RunOutcome resume_scenario(const std::filesystem::path& snapshot_path,
                           const std::filesystem::path& out_dir,
                           uint64_t max_iterations_override = 0);

struct SweepRow {
  double grass_probability = 0.0;
  MotivationMode mode = MotivationMode::kEnabled;
  uint64_t seed = 0;
  bool ok = true;
  std::string error;  // empty when ok
  bool survived = false;
  uint64_t final_population = 0;
  int64_t extinction_iteration = -1;
  std::string majority_label = "none";
};

// Cartesian grid of (grass probability x motivation mode x seed), enumerated
// with the seed axis innermost. Runs are independent simulations without file
// output; jobs > 1 distributes them over worker threads (results are
// positioned by grid index, so the row order never depends on scheduling).
// A failed run is recorded in its row and does not stop the sweep.
std::vector<SweepRow> sweep(const RunConfig& base_config,
                            std::span<const double> grass_probabilities,
                            std::span<const MotivationMode> modes,
                            std::span<const uint64_t> seeds, unsigned jobs = 1);

void write_summary_csv(const std::filesystem::path& path,
                       std::span<const SweepRow> rows);

struct ProbeReport {
  uint64_t agents = 0;
  PopulationClassification classification;  // meaningful when agents > 0
  std::string summary_text;                 // contents of probe_summary.txt
};

// Probes every agent in a snapshot; writes probe.csv (one row per agent) and
// probe_summary.txt into out_dir and returns the summary.
ProbeReport probe_snapshot_file(const std::filesystem::path& snapshot_path,
                                const std::filesystem::path& out_dir);

}  // namespace alife
