#include "alife/alife.h"

#include <cstring>
#include <string>
#include <vector>

#include "analysis/behavior.hpp"
#include "engine/simulation.hpp"
#include "harness/config_io.hpp"
#include "harness/scenario.hpp"
#include "harness/snapshot.hpp"

struct alife_config {
  alife::ConfigValues file_values;
  alife::ConfigValues overrides;
};

struct alife_sim {
  alife::Simulation sim;
};

namespace {

constexpr const char* kVersion = "1.0.0";

void copy_message(char* dst, size_t dst_len, const char* src) {
  if (!dst || dst_len == 0) return;
  const size_t n = std::min(dst_len - 1, std::strlen(src));
  std::memcpy(dst, src, n);
  dst[n] = '\0';
}

template <typename Fn>
alife_status guarded(char* err, size_t err_len, Fn&& fn) {
  try {
    fn();
    return ALIFE_OK;
  } catch (const alife::ConfigError& e) {
    copy_message(err, err_len, e.what());
    return ALIFE_ERROR_CONFIG;
  } catch (const alife::IoError& e) {
    copy_message(err, err_len, e.what());
    return ALIFE_ERROR_IO;
  } catch (const std::exception& e) {
    copy_message(err, err_len, e.what());
    return ALIFE_ERROR_INTERNAL;
  } catch (...) {
    copy_message(err, err_len, "unknown error");
    return ALIFE_ERROR_INTERNAL;
  }
}

alife_status null_argument(char* err, size_t err_len, const char* what) {
  copy_message(err, err_len, what);
  return ALIFE_ERROR_INTERNAL;
}

alife::RunConfig build(const alife_config& config) {
  return alife::build_config(config.file_values, config.overrides);
}

alife_run_summary to_summary(const alife::RunOutcome& outcome) {
  alife_run_summary s;
  s.survived = outcome.survived ? 1 : 0;
  s.final_population = outcome.final_population;
  s.extinction_iteration = outcome.extinction_iteration;
  s.iterations_completed = outcome.iterations_completed;
  return s;
}

}  // namespace

extern "C" {

const char* alife_version(void) { return kVersion; }

uint64_t alife_derive_seed(uint64_t master_seed, uint64_t index) {
  return alife::derive_seed(master_seed, index);
}

alife_config* alife_config_create(void) { return new alife_config(); }

void alife_config_destroy(alife_config* config) { delete config; }

alife_status alife_config_load_file(alife_config* config, const char* path, char* err,
                                    size_t err_len) {
  if (!config || !path) return null_argument(err, err_len, "null argument to alife_config_load_file");
  return guarded(err, err_len, [&] {
    alife::ConfigValues values = alife::read_config_file(path);
    for (auto& kv : values) config->file_values.push_back(std::move(kv));
  });
}

alife_status alife_config_set(alife_config* config, const char* key, const char* value,
                              char* err, size_t err_len) {
  if (!config || !key || !value) return null_argument(err, err_len, "null argument to alife_config_set");
  return guarded(err, err_len, [&] {
    if (!alife::is_known_config_key(key))
      throw alife::ConfigError("unknown key '" + std::string(key) + "'");
    config->overrides.emplace_back(key, value);
  });
}

alife_status alife_config_validate(const alife_config* config, char* err, size_t err_len) {
  if (!config) return null_argument(err, err_len, "null argument to alife_config_validate");
  return guarded(err, err_len, [&] { build(*config); });
}

alife_status alife_sim_create(const alife_config* config, alife_sim** out_sim, char* err,
                              size_t err_len) {
  if (!config || !out_sim) return null_argument(err, err_len, "null argument to alife_sim_create");
  *out_sim = nullptr;
  return guarded(err, err_len, [&] {
    *out_sim = new alife_sim{alife::Simulation(build(*config))};
  });
}

alife_status alife_sim_from_snapshot(const char* snapshot_path, alife_sim** out_sim,
                                     char* err, size_t err_len) {
  if (!snapshot_path || !out_sim)
    return null_argument(err, err_len, "null argument to alife_sim_from_snapshot");
  *out_sim = nullptr;
  return guarded(err, err_len, [&] {
    *out_sim = new alife_sim{
        alife::simulation_from_snapshot(alife::load_snapshot(snapshot_path))};
  });
}

void alife_sim_destroy(alife_sim* sim) { delete sim; }

alife_status alife_sim_step(alife_sim* sim, alife_step_stats* out_stats, char* err,
                            size_t err_len) {
  if (!sim) return null_argument(err, err_len, "null argument to alife_sim_step");
  return guarded(err, err_len, [&] {
    const alife::StepRecord rec = sim->sim.step();
    if (!out_stats) return;
    out_stats->iteration = rec.iteration;
    out_stats->population = rec.population;
    out_stats->births = rec.births;
    out_stats->deaths = rec.deaths;
    out_stats->grass_cells = rec.grass_cells;
    for (int a = 0; a < alife::kActionCount; ++a)
      out_stats->action_counts[a] = rec.action_counts[a];
    out_stats->total_energy = rec.total_energy;
    out_stats->gains_from_eating = rec.gains_from_eating;
    out_stats->costs_paid = rec.costs_paid;
    out_stats->energy_lost_to_deaths = rec.energy_lost_to_deaths;
    out_stats->energy_to_newborns = rec.energy_to_newborns;
  });
}

uint64_t alife_sim_iteration(const alife_sim* sim) {
  return sim ? sim->sim.iteration() : 0;
}

uint64_t alife_sim_population(const alife_sim* sim) {
  return sim ? sim->sim.population() : 0;
}

alife_status alife_sim_save_snapshot(const alife_sim* sim, const char* path, char* err,
                                     size_t err_len) {
  if (!sim || !path) return null_argument(err, err_len, "null argument to alife_sim_save_snapshot");
  return guarded(err, err_len, [&] { alife::save_snapshot(sim->sim, path); });
}

alife_status alife_run_scenario(const alife_config* config, const char* out_dir,
                                alife_run_summary* out_summary, char* err,
                                size_t err_len) {
  if (!config) return null_argument(err, err_len, "null argument to alife_run_scenario");
  return guarded(err, err_len, [&] {
    alife::RunConfig cfg = build(*config);
    if (out_dir && *out_dir) cfg.output_directory = out_dir;
    const alife::RunOutcome outcome = alife::run_scenario(cfg, cfg.output_directory);
    if (out_summary) *out_summary = to_summary(outcome);
  });
}

alife_status alife_resume_scenario(const char* snapshot_path, const char* out_dir,
                                   uint64_t max_iterations_override,
                                   alife_run_summary* out_summary, char* err,
                                   size_t err_len) {
  if (!snapshot_path || !out_dir || !*out_dir)
    return null_argument(err, err_len, "null argument to alife_resume_scenario");
  return guarded(err, err_len, [&] {
    const alife::RunOutcome outcome =
        alife::resume_scenario(snapshot_path, out_dir, max_iterations_override);
    if (out_summary) *out_summary = to_summary(outcome);
  });
}

alife_status alife_sweep(const alife_config* base_config,
                         const double* grass_probabilities, size_t n_grass_probabilities,
                         const char* motivation_modes, const uint64_t* seeds,
                         size_t n_seeds, unsigned jobs, const char* summary_csv_path,
                         char* err, size_t err_len) {
  if (!base_config || !motivation_modes || !summary_csv_path ||
      (n_grass_probabilities > 0 && !grass_probabilities) || (n_seeds > 0 && !seeds))
    return null_argument(err, err_len, "null argument to alife_sweep");
  return guarded(err, err_len, [&] {
    const alife::RunConfig base = build(*base_config);
    std::vector<alife::MotivationMode> modes;
    const std::string mode_spec = motivation_modes;
    if (mode_spec == "on") {
      modes = {alife::MotivationMode::kEnabled};
    } else if (mode_spec == "off") {
      modes = {alife::MotivationMode::kSuppressed};
    } else if (mode_spec == "both") {
      modes = {alife::MotivationMode::kEnabled, alife::MotivationMode::kSuppressed};
    } else {
      throw alife::ConfigError("motivation modes must be 'on', 'off', or 'both', got '" +
                               mode_spec + "'");
    }
    const std::vector<alife::SweepRow> rows = alife::sweep(
        base, {grass_probabilities, n_grass_probabilities}, modes, {seeds, n_seeds},
        jobs == 0 ? 1 : jobs);
    alife::write_summary_csv(summary_csv_path, rows);
  });
}

alife_status alife_probe_snapshot(const char* snapshot_path, const char* out_dir,
                                  char* summary, size_t summary_len, char* err,
                                  size_t err_len) {
  if (!snapshot_path || !out_dir)
    return null_argument(err, err_len, "null argument to alife_probe_snapshot");
  return guarded(err, err_len, [&] {
    const alife::ProbeReport report = alife::probe_snapshot_file(snapshot_path, out_dir);
    if (summary && summary_len > 0)
      copy_message(summary, summary_len, report.summary_text.c_str());
  });
}

}  // extern "C"
