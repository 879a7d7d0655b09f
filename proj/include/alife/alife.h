/* C interface to the alife simulation library.
 *
 * All entry points are thread-compatible: distinct handles may be used from
 * distinct threads, a single handle must not be shared without external
 * locking. Functions that can fail return an alife_status and, when err is
 * non-NULL, copy a NUL-terminated description (truncated to err_len) into it.
 */
#ifndef ALIFE_H_
#define ALIFE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ALIFE_API __declspec(dllexport)
#else
#define ALIFE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum alife_status {
  ALIFE_OK = 0,
  ALIFE_ERROR_CONFIG = 1,   /* bad key, value, or parameter combination */
  ALIFE_ERROR_IO = 2,       /* missing/unreadable/unwritable or corrupt files */
  ALIFE_ERROR_INTERNAL = 3, /* null arguments, unexpected failures */
} alife_status;

/* Staged configuration: key/value assignments applied over the built-in
 * defaults. Resolution and validation happen when a simulation or scenario
 * is created (or on alife_config_validate); every violation is reported in
 * one message. */
typedef struct alife_config alife_config;

/* A running simulation. */
typedef struct alife_sim alife_sim;

ALIFE_API const char* alife_version(void);

/* Mixes a master seed and a run index into an independent per-run seed.
 * Sweeps use index = replicate number for every parameter combination, so
 * replicate r is paired across combinations. */
ALIFE_API uint64_t alife_derive_seed(uint64_t master_seed, uint64_t index);

ALIFE_API alife_config* alife_config_create(void);
ALIFE_API void alife_config_destroy(alife_config* config);

/* Reads `key = value` lines ('#' comments). Collects every malformed line
 * and unknown key into one error. */
ALIFE_API alife_status alife_config_load_file(alife_config* config, const char* path,
                                              char* err, size_t err_len);

/* Stages one assignment; the key must be known. Later assignments win. */
ALIFE_API alife_status alife_config_set(alife_config* config, const char* key,
                                        const char* value, char* err, size_t err_len);

/* Resolves defaults and checks every parameter; reports all violations. */
ALIFE_API alife_status alife_config_validate(const alife_config* config, char* err,
                                             size_t err_len);

ALIFE_API alife_status alife_sim_create(const alife_config* config, alife_sim** out_sim,
                                        char* err, size_t err_len);
ALIFE_API alife_status alife_sim_from_snapshot(const char* snapshot_path,
                                               alife_sim** out_sim, char* err,
                                               size_t err_len);
ALIFE_API void alife_sim_destroy(alife_sim* sim);

/* Per-iteration bookkeeping. population and total_energy describe the start
 * of the iteration; the other fields describe what happened during it. */
typedef struct alife_step_stats {
  uint64_t iteration;
  uint64_t population;
  uint64_t births;
  uint64_t deaths;
  uint64_t grass_cells;
  uint64_t action_counts[7]; /* rest, move_left, move_right, jump, eat,
                                mate_left, mate_right */
  double total_energy;
  double gains_from_eating;
  double costs_paid;
  double energy_lost_to_deaths;
  double energy_to_newborns;
} alife_step_stats;

/* Advances one iteration. Stepping an extinct world is legal (grass keeps
 * growing); callers normally stop when population reaches zero. */
ALIFE_API alife_status alife_sim_step(alife_sim* sim, alife_step_stats* out_stats,
                                      char* err, size_t err_len);
ALIFE_API uint64_t alife_sim_iteration(const alife_sim* sim);
ALIFE_API uint64_t alife_sim_population(const alife_sim* sim);
ALIFE_API alife_status alife_sim_save_snapshot(const alife_sim* sim, const char* path,
                                               char* err, size_t err_len);

typedef struct alife_run_summary {
  int32_t survived; /* 1 if the population outlived the run */
  uint64_t final_population;
  int64_t extinction_iteration; /* -1 when survived */
  uint64_t iterations_completed;
} alife_run_summary;

/* Full scenario: runs to max_iterations or extinction, writing
 * timeseries.csv, weights.csv, snapshots, and manifest.txt into out_dir
 * (NULL or empty: the configured output_dir). */
ALIFE_API alife_status alife_run_scenario(const alife_config* config, const char* out_dir,
                                          alife_run_summary* out_summary, char* err,
                                          size_t err_len);

/* Continues a snapshotted run; max_iterations_override = 0 keeps the stored
 * horizon. Output covers only the resumed stretch. */
ALIFE_API alife_status alife_resume_scenario(const char* snapshot_path,
                                             const char* out_dir,
                                             uint64_t max_iterations_override,
                                             alife_run_summary* out_summary, char* err,
                                             size_t err_len);

/* Cartesian sweep over grass probabilities x motivation modes x seeds on top
 * of the base config; writes one summary CSV row per run in grid order (seed
 * axis innermost). motivation_modes is "on", "off", or "both". jobs > 1 runs
 * simulations on worker threads; results are identical to jobs = 1. Per-run
 * failures are recorded in the row and do not abort the sweep. */
ALIFE_API alife_status alife_sweep(const alife_config* base_config,
                                   const double* grass_probabilities,
                                   size_t n_grass_probabilities,
                                   const char* motivation_modes, const uint64_t* seeds,
                                   size_t n_seeds, unsigned jobs,
                                   const char* summary_csv_path, char* err,
                                   size_t err_len);

/* Probes every agent in a snapshot; writes probe.csv and probe_summary.txt
 * into out_dir and, when summary is non-NULL, copies the summary text
 * (truncated to summary_len) into it. */
ALIFE_API alife_status alife_probe_snapshot(const char* snapshot_path,
                                            const char* out_dir, char* summary,
                                            size_t summary_len, char* err,
                                            size_t err_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ALIFE_H_ */
