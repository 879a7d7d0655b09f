// Command-line front end. Talks to the simulation library exclusively through
// the public C interface; numeric flags are passed through as strings so that
// every value is validated by the same config machinery with the same
// messages.
#include <alife/alife.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

namespace {

struct ConfigHandle {
  alife_config* ptr = alife_config_create();
  ~ConfigHandle() { alife_config_destroy(ptr); }
  ConfigHandle() = default;
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int report_error(alife_status status, const char* err) {
  std::fprintf(stderr, "error: %s\n", *err ? err : "unspecified failure");
  return static_cast<int>(status);
}

void print_summary(const alife_run_summary& summary, const std::string& out_dir) {
  if (summary.survived) {
    std::printf("outcome: survived; final population %llu after %llu iterations\n",
                static_cast<unsigned long long>(summary.final_population),
                static_cast<unsigned long long>(summary.iterations_completed));
  } else {
    std::printf("outcome: extinct at iteration %lld\n",
                static_cast<long long>(summary.extinction_iteration));
  }
  std::printf("wrote %s\n", out_dir.c_str());
}

struct RunOptions {
  std::string config_file, out_dir = "out", resume_path;
  std::string seed, pg, motivation, iterations, snapshot_every;
  bool out_given = false;
};

int build_config(ConfigHandle& config, const std::string& config_file,
                 const std::vector<std::pair<const char*, const std::string*>>& overrides) {
  char err[2048] = "";
  if (!config_file.empty()) {
    const alife_status st =
        alife_config_load_file(config.ptr, config_file.c_str(), err, sizeof err);
    if (st != ALIFE_OK) return report_error(st, err);
  }
  for (const auto& [key, value] : overrides) {
    if (value->empty()) continue;
    const alife_status st = alife_config_set(config.ptr, key, value->c_str(), err, sizeof err);
    if (st != ALIFE_OK) return report_error(st, err);
  }
  return 0;
}

int do_run(const RunOptions& opt) {
  char err[2048] = "";
  alife_run_summary summary;

  if (!opt.resume_path.empty()) {
    if (!opt.config_file.empty() || !opt.seed.empty() || !opt.pg.empty() ||
        !opt.motivation.empty() || !opt.snapshot_every.empty()) {
      std::fprintf(stderr, "error: --resume combines only with --out and --iterations\n");
      return 1;
    }
    uint64_t override_iterations = 0;
    if (!opt.iterations.empty()) {
      const char* end = opt.iterations.data() + opt.iterations.size();
      const auto res =
          std::from_chars(opt.iterations.data(), end, override_iterations);
      if (res.ec != std::errc() || res.ptr != end) {
        std::fprintf(stderr, "error: --iterations: not a non-negative integer: '%s'\n",
                     opt.iterations.c_str());
        return 1;
      }
    }
    const alife_status st =
        alife_resume_scenario(opt.resume_path.c_str(), opt.out_dir.c_str(),
                              override_iterations, &summary, err, sizeof err);
    if (st != ALIFE_OK) return report_error(st, err);
    print_summary(summary, opt.out_dir);
    return 0;
  }

  ConfigHandle config;
  const int rc = build_config(config, opt.config_file,
                              {{"seed", &opt.seed},
                               {"grass_probability", &opt.pg},
                               {"motivation", &opt.motivation},
                               {"max_iterations", &opt.iterations},
                               {"snapshot_interval", &opt.snapshot_every}});
  if (rc != 0) return rc;

  const alife_status st = alife_run_scenario(
      config.ptr, opt.out_given ? opt.out_dir.c_str() : "", &summary, err, sizeof err);
  if (st != ALIFE_OK) return report_error(st, err);
  print_summary(summary, opt.out_dir);
  return 0;
}

struct SweepOptions {
  std::string config_file, out_dir = "out";
  std::string iterations;
  std::vector<double> pgs;
  std::string motivation = "both";
  uint64_t master_seed = 1;
  uint64_t replicates = 10;
  unsigned jobs = 0;
};

int do_sweep(const SweepOptions& opt) {
  char err[2048] = "";
  ConfigHandle config;
  const int rc = build_config(config, opt.config_file, {{"max_iterations", &opt.iterations}});
  if (rc != 0) return rc;

  std::vector<double> pgs = opt.pgs;
  if (pgs.empty()) pgs = {0.0005, 0.005, 0.05};
  std::vector<uint64_t> seeds(opt.replicates);
  for (uint64_t r = 0; r < opt.replicates; ++r)
    seeds[r] = alife_derive_seed(opt.master_seed, r);
  const unsigned jobs =
      opt.jobs > 0 ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());

  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create %s: %s\n", opt.out_dir.c_str(),
                 ec.message().c_str());
    return 2;
  }
  const std::string summary_path = opt.out_dir + "/summary.csv";
  const alife_status st =
      alife_sweep(config.ptr, pgs.data(), pgs.size(), opt.motivation.c_str(),
                  seeds.data(), seeds.size(), jobs, summary_path.c_str(), err, sizeof err);
  if (st != ALIFE_OK) return report_error(st, err);
  std::printf("ran %zu simulations; wrote %s\n",
              pgs.size() * (opt.motivation == "both" ? 2 : 1) * seeds.size(),
              summary_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolving neural-controller agents on a one-dimensional ring world"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "run one simulation scenario");
  run_cmd->add_option("--config", run_opt.config_file, "config file (key = value lines)");
  run_cmd->add_option("--seed", run_opt.seed, "random seed");
  CLI::Option* out_opt =
      run_cmd->add_option("--out", run_opt.out_dir, "output directory (default: out)");
  run_cmd->add_option("--pg", run_opt.pg, "grass growth probability per cell");
  run_cmd->add_option("--motivation", run_opt.motivation,
                      "motivational inputs: on or off");
  run_cmd->add_option("--iterations", run_opt.iterations, "iteration budget");
  run_cmd->add_option("--snapshot-every", run_opt.snapshot_every,
                      "periodic snapshot interval (iterations)");
  run_cmd->add_option("--resume", run_opt.resume_path, "continue from a snapshot file");

  SweepOptions sweep_opt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "grid of runs over grass probability and motivation");
  sweep_cmd->add_option("--config", sweep_opt.config_file, "base config file");
  sweep_cmd->add_option("--out", sweep_opt.out_dir, "output directory (default: out)");
  sweep_cmd->add_option("--pg", sweep_opt.pgs,
                        "grass probabilities (default: 0.0005 0.005 0.05)");
  sweep_cmd->add_option("--motivation", sweep_opt.motivation, "on, off, or both");
  sweep_cmd->add_option("--seed", sweep_opt.master_seed,
                        "master seed; per-run seeds are derived from it");
  sweep_cmd->add_option("--seeds", sweep_opt.replicates, "replicates per combination");
  sweep_cmd->add_option("--iterations", sweep_opt.iterations, "iteration budget per run");
  sweep_cmd->add_option("--jobs", sweep_opt.jobs, "parallel runs (default: hardware)");

  std::string probe_snapshot, probe_out = "out";
  CLI::App* probe_cmd =
      app.add_subcommand("probe", "classify the behavior of every agent in a snapshot");
  probe_cmd->add_option("snapshot", probe_snapshot, "snapshot file")->required();
  probe_cmd->add_option("--out", probe_out, "output directory (default: out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (run_cmd->parsed()) {
    run_opt.out_given = out_opt->count() > 0;
    return do_run(run_opt);
  }
  if (sweep_cmd->parsed()) return do_sweep(sweep_opt);
  if (probe_cmd->parsed()) {
    char err[2048] = "";
    std::string summary(8192, '\0');
    const alife_status st = alife_probe_snapshot(probe_snapshot.c_str(), probe_out.c_str(),
                                                 summary.data(), summary.size(), err,
                                                 sizeof err);
    if (st != ALIFE_OK) return report_error(st, err);
    std::printf("%s", summary.c_str());
    return 0;
  }
  return 1;
}
