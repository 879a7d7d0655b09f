#include "harness/scenario.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "analysis/stats.hpp"
#include "engine/simulation.hpp"
#include "harness/config_io.hpp"
#include "harness/snapshot.hpp"
#include "harness/text_format.hpp"

namespace alife {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string one_line(std::string text) {
  for (char& c : text)
    if (c == '\n' || c == '\r') c = ' ';
  return text;
}

void write_timeseries_row(std::ostream& out, const StepRecord& rec) {
  out << rec.iteration << ',' << rec.population << ',' << rec.births << ','
      << rec.deaths << ',' << rec.grass_cells << ','
      << format_double(rec.population == 0
                           ? 0.0
                           : rec.total_energy / static_cast<double>(rec.population))
      << ',' << format_double(rec.total_energy);
  for (uint64_t count : rec.action_counts) out << ',' << count;
  out << '\n';
}

void write_weights_rows(std::ostream& out, const WeightStats& stats) {
  for (int g = 0; g < kGenomeLength; ++g) {
    out << stats.iteration << ',' << g << ',' << format_double(stats.mean[g]) << ','
        << format_double(stats.stddev[g]) << '\n';
  }
}

std::string snapshot_name(uint64_t iteration) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "snapshot_%09llu.txt",
                static_cast<unsigned long long>(iteration));
  return buf;
}

void write_manifest(const std::filesystem::path& path, const RunConfig& cfg,
                    const std::optional<RunOutcome>& outcome, const std::string& error) {
  std::ofstream out = open_output(path);
  out << "alife_manifest 1\n";
  for (const auto& [key, value] : config_echo(cfg, /*include_output_dir=*/true))
    out << "config " << key << ' ' << value << '\n';
  if (outcome) {
    out << "outcome " << (outcome->survived ? "survived" : "extinct") << '\n';
    out << "final_population " << outcome->final_population << '\n';
    out << "extinction_iteration " << outcome->extinction_iteration << '\n';
    out << "iterations_completed " << outcome->iterations_completed << '\n';
    out << "status ok\n";
  } else {
    out << "status aborted\n";
    out << "error " << one_line(error) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write error on manifest: " + path.string());
}

// Shared by fresh and resumed scenarios. On an I/O failure mid-run the
// manifest records the abort before the error propagates.
RunOutcome drive_scenario(Simulation& sim, const RunConfig& cfg,
                          const std::filesystem::path& out_dir) {
  ensure_directory(out_dir);
  try {
    std::ofstream timeseries = open_output(out_dir / "timeseries.csv");
    timeseries << kTimeseriesHeader << '\n';
    std::ofstream weights = open_output(out_dir / "weights.csv");
    weights << kWeightsHeader << '\n';

    while (sim.iteration() < cfg.max_iterations && sim.population() > 0) {
      const uint64_t t = sim.iteration();
      if (t % cfg.weights_interval == 0) {
        if (const auto stats = weight_stats(sim.world().agents(), t))
          write_weights_rows(weights, *stats);
      }
      const StepRecord rec = sim.step();
      if (t % cfg.timeseries_interval == 0) write_timeseries_row(timeseries, rec);
      if (cfg.snapshot_interval > 0 && sim.iteration() % cfg.snapshot_interval == 0)
        save_snapshot(sim, out_dir / snapshot_name(sim.iteration()));
    }

    save_snapshot(sim, out_dir / "snapshot_final.txt");
    timeseries.flush();
    weights.flush();
    if (!timeseries || !weights)
      throw IoError("write error in " + out_dir.string());

    RunOutcome outcome;
    outcome.survived = sim.population() > 0;
    outcome.final_population = sim.population();
    outcome.iterations_completed = sim.iteration();
    outcome.extinction_iteration =
        outcome.survived ? -1 : static_cast<int64_t>(sim.iteration()) - 1;
    write_manifest(out_dir / "manifest.txt", cfg, outcome, "");
    return outcome;
  } catch (const std::exception& e) {
    try {
      write_manifest(out_dir / "manifest.txt", cfg, std::nullopt, e.what());
    } catch (...) {
      // The abort record is best effort; the original error matters more.
    }
    throw;
  }
}

SweepRow execute_sweep_run(const RunConfig& cfg) {
  SweepRow row;
  row.grass_probability = cfg.world.grass_probability;
  row.mode = cfg.world.motivation_mode;
  row.seed = cfg.seed;
  try {
    if (const auto problems = validate_config(cfg); !problems.empty()) {
      std::string joined = "invalid run config:";
      for (const std::string& p : problems) joined += " " + p + ";";
      throw ConfigError(joined);
    }
    Simulation sim(cfg);
    while (sim.iteration() < cfg.max_iterations && sim.population() > 0) sim.step();
    row.survived = sim.population() > 0;
    row.final_population = sim.population();
    row.extinction_iteration =
        row.survived ? -1 : static_cast<int64_t>(sim.iteration()) - 1;
    if (const auto classes = population_classification(sim.world().agents()))
      row.majority_label = scheme_label_name(classes->majority_label);
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

RunOutcome run_scenario(const RunConfig& config, const std::filesystem::path& out_dir) {
  if (const auto problems = validate_config(config); !problems.empty()) {
    std::string joined = "invalid run config:";
    for (const std::string& p : problems) joined += "\n  - " + p;
    throw ConfigError(joined);
  }
  Simulation sim(config);
  return drive_scenario(sim, config, out_dir);
}

RunOutcome resume_scenario(const std::filesystem::path& snapshot_path,
                           const std::filesystem::path& out_dir,
                           uint64_t max_iterations_override) {
  SnapshotData data = load_snapshot(snapshot_path);
  if (max_iterations_override > 0) data.config.max_iterations = max_iterations_override;
  data.config.output_directory = out_dir.string();
  RunConfig config = data.config;
  Simulation sim = simulation_from_snapshot(std::move(data));
  return drive_scenario(sim, config, out_dir);
}

std::vector<SweepRow> sweep(const RunConfig& base_config,
                            std::span<const double> grass_probabilities,
                            std::span<const MotivationMode> modes,
                            std::span<const uint64_t> seeds, unsigned jobs) {
  std::vector<RunConfig> configs;
  configs.reserve(grass_probabilities.size() * modes.size() * seeds.size());
  for (double pg : grass_probabilities) {
    for (MotivationMode mode : modes) {
      for (uint64_t seed : seeds) {
        RunConfig cfg = base_config;
        cfg.world.grass_probability = pg;
        cfg.world.motivation_mode = mode;
        cfg.seed = seed;
        configs.push_back(cfg);
      }
    }
  }
  std::vector<SweepRow> rows(configs.size());
  if (configs.empty()) return rows;

  if (jobs <= 1) {
    for (size_t i = 0; i < configs.size(); ++i) rows[i] = execute_sweep_run(configs[i]);
    return rows;
  }
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < configs.size(); i = next.fetch_add(1))
      rows[i] = execute_sweep_run(configs[i]);
  };
  std::vector<std::thread> threads;
  const size_t thread_count = std::min<size_t>(jobs, configs.size());
  threads.reserve(thread_count);
  for (size_t i = 0; i < thread_count; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return rows;
}

void write_summary_csv(const std::filesystem::path& path, std::span<const SweepRow> rows) {
  std::ofstream out = open_output(path);
  out << kSummaryHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_double(row.grass_probability) << ',' << motivation_mode_name(row.mode)
        << ',' << row.seed << ',' << (row.survived ? 1 : 0) << ',' << row.final_population
        << ',' << row.extinction_iteration << ',' << row.majority_label << ',';
    if (row.ok) {
      out << "ok";
    } else {
      std::string msg = one_line(row.error);
      for (char& c : msg)
        if (c == ',') c = ';';
      out << "error: " << msg;
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("write error on summary: " + path.string());
}

ProbeReport probe_snapshot_file(const std::filesystem::path& snapshot_path,
                                const std::filesystem::path& out_dir) {
  const SnapshotData data = load_snapshot(snapshot_path);
  ensure_directory(out_dir);

  std::ofstream csv = open_output(out_dir / "probe.csv");
  csv << "agent,position,energy,label,rule1_food_seeking,rule2_mating_on_neighbor,"
         "rule3_rest_on_empty,mating_suppressed_when_hungry\n";
  const std::span<const Agent> agents = data.world.agents();
  for (size_t id = 0; id < agents.size(); ++id) {
    const SchemeClassification c = classify_scheme(probe_agent(agents[id].genome));
    csv << id << ',' << agents[id].position << ',' << format_double(agents[id].energy)
        << ',' << scheme_label_name(c.label) << ',' << (c.rule1_food_seeking ? 1 : 0)
        << ',' << (c.rule2_mating_on_neighbor ? 1 : 0) << ','
        << (c.rule3_rest_on_empty ? 1 : 0) << ','
        << (c.mating_suppressed_when_hungry ? 1 : 0) << '\n';
  }
  csv.flush();
  if (!csv) throw IoError("write error on probe.csv in " + out_dir.string());

  ProbeReport report;
  report.agents = agents.size();
  std::ostringstream summary;
  summary << "agents " << agents.size() << '\n';
  if (const auto classes = population_classification(agents)) {
    report.classification = *classes;
    summary << "reflex_only " << format_double(classes->fraction(SchemeLabel::kReflexOnly))
            << '\n';
    summary << "motivation_gated "
            << format_double(classes->fraction(SchemeLabel::kMotivationGated)) << '\n';
    summary << "other " << format_double(classes->fraction(SchemeLabel::kOther)) << '\n';
    summary << "mating_suppressed " << format_double(classes->mating_suppressed_fraction())
            << '\n';
    summary << "majority_label " << scheme_label_name(classes->majority_label) << '\n';
  } else {
    summary << "note no agents\n";
    summary << "majority_label none\n";
  }
  report.summary_text = summary.str();

  std::ofstream txt = open_output(out_dir / "probe_summary.txt");
  txt << report.summary_text;
  txt.flush();
  if (!txt) throw IoError("write error on probe_summary.txt in " + out_dir.string());
  return report;
}

}  // namespace alife
