// Whole-system acceptance checks. The regime checks (1-4) run the default
// experiment grid -- three grass probabilities x both motivation modes x ten
// paired seeds, 50,000 iterations each -- and assert the population-level
// outcomes the model is expected to show. The remaining checks pin the
// instinct truth table, energy conservation, bitwise determinism, the
// statistical contracts of the genetic operators, and the impossibility of
// motivation gating with zeroed motivation weights. Each check prints exactly
// one "ACCEPTANCE <n> <PASS|FAIL> ..." line so the verdicts are greppable
// from the test log.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis/behavior.hpp"
#include "core/evolution.hpp"
#include "core/params.hpp"
#include "core/rng.hpp"
#include "engine/simulation.hpp"
#include "harness/scenario.hpp"

namespace fs = std::filesystem;
using namespace alife;

namespace {

constexpr double kGrassGrid[3] = {0.0005, 0.005, 0.05};  // scarce, intermediate, rich
constexpr uint64_t kMasterSeed = 1;
constexpr int kSeedCount = 10;
constexpr uint64_t kGridIterations = 50000;

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("ACCEPTANCE %d %s %s -- %s\n", index, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  std::fflush(stdout);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "alife_acceptance_tmp") {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct CellResult {
  bool survived = false;
  uint64_t final_n = 0;
  std::optional<PopulationClassification> classes;
};

// cells[grass][mode][seed]; mode 0 = motivated, 1 = suppressed. The same
// derived seed is used for both modes of a pair, so per-seed comparisons are
// matched.
struct Grid {
  CellResult cells[3][2][kSeedCount];
};

CellResult run_cell(double pg, MotivationMode mode, uint64_t seed) {
  RunConfig cfg;
  cfg.world.grass_probability = pg;
  cfg.world.motivation_mode = mode;
  cfg.seed = seed;
  cfg.max_iterations = kGridIterations;
  Simulation sim(cfg);
  while (sim.iteration() < cfg.max_iterations && sim.population() > 0) sim.step();
  CellResult result;
  result.survived = sim.population() > 0;
  result.final_n = sim.population();
  result.classes = population_classification(sim.world().agents());
  return result;
}

const Grid& grid() {
  static const Grid g = [] {
    std::fprintf(stderr,
                 "acceptance: running the 60-simulation experiment grid "
                 "(3 grass levels x 2 modes x 10 seeds, 50k iterations each; "
                 "takes a few minutes)...\n");
    Grid built;
    for (int p = 0; p < 3; ++p) {
      for (int m = 0; m < 2; ++m) {
        const MotivationMode mode =
            m == 0 ? MotivationMode::kEnabled : MotivationMode::kSuppressed;
        for (int s = 0; s < kSeedCount; ++s)
          built.cells[p][m][s] =
              run_cell(kGrassGrid[p], mode, derive_seed(kMasterSeed, uint64_t(s)));
      }
    }
    return built;
  }();
  return g;
}

int survivors(const Grid& g, int pg_index, int mode_index) {
  int count = 0;
  for (int s = 0; s < kSeedCount; ++s)
    count += g.cells[pg_index][mode_index][s].survived ? 1 : 0;
  return count;
}

double median_final_n(const Grid& g, int pg_index, int mode_index) {
  std::vector<double> values;
  for (int s = 0; s < kSeedCount; ++s)
    values.push_back(double(g.cells[pg_index][mode_index][s].final_n));
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// One-sided sign test: P[Bin(n, 1/2) >= k]. n = 0 gives 1 (no evidence).
double sign_test_tail(int n, int k) {
  if (n == 0) return 1.0;
  std::vector<double> binom(size_t(n) + 1, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row <= n; ++row)
    for (int j = row; j > 0; --j) binom[size_t(j)] += binom[size_t(j) - 1];
  double tail = 0.0;
  for (int j = std::max(k, 0); j <= n; ++j) tail += binom[size_t(j)];
  return tail / std::pow(2.0, n);
}

// Reference priority rules for the founder controller, enumerated over the
// 32 binary patterns of (food_left, food_here, food_right, agent_left,
// agent_right) = bits 0..4.
Action founder_oracle(int pattern) {
  const bool fl = pattern & 1, fh = pattern & 2, fr = pattern & 4;
  const bool al = pattern & 8, ar = pattern & 16;
  if (fh) return Action::kEat;
  if (fl) return Action::kMoveLeft;  // left wins a two-sided food tie
  if (fr) return Action::kMoveRight;
  if (al && ar) return Action::kJump;
  if (al) return Action::kMateLeft;
  if (ar) return Action::kMateRight;
  return Action::kRest;
}

}  // namespace

TEST_CASE("acceptance 1: scarce food extinguishes both modes") {
  const Grid& g = grid();
  const int on_extinct = kSeedCount - survivors(g, 0, 0);
  const int off_extinct = kSeedCount - survivors(g, 0, 1);
  const bool pass = on_extinct >= 8 && off_extinct >= 8;
  const std::string detail =
      fmt("motivated %d/10 extinct, suppressed %d/10 extinct before %llu iterations "
          "(need >= 8/10 each)",
          on_extinct, off_extinct, (unsigned long long)kGridIterations);
  report(1, "scarce-food extinction", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 2: intermediate food separates the modes") {
  const Grid& g = grid();
  const int on_survived = survivors(g, 1, 0);
  const int off_survived = survivors(g, 1, 1);
  int discordant = 0, favorable = 0;
  for (int s = 0; s < kSeedCount; ++s) {
    const bool on = g.cells[1][0][s].survived;
    const bool off = g.cells[1][1][s].survived;
    if (on != off) {
      ++discordant;
      if (on && !off) ++favorable;
    }
  }
  const double p = sign_test_tail(discordant, favorable);
  const bool pass = p <= 0.1;
  const std::string detail =
      fmt("motivated %d/10 survived, suppressed %d/10 survived; %d discordant pairs, "
          "%d favoring motivation, one-sided sign test p=%.4g (need <= 0.1)",
          on_survived, off_survived, discordant, favorable, p);
  report(2, "intermediate-food separation", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 3: rich food lets both modes survive, motivated larger") {
  const Grid& g = grid();
  const int on_survived = survivors(g, 2, 0);
  const int off_survived = survivors(g, 2, 1);
  const double on_median = median_final_n(g, 2, 0);
  const double off_median = median_final_n(g, 2, 1);
  const bool pass = on_survived >= 8 && off_survived >= 8 && on_median > off_median;
  const std::string detail =
      fmt("motivated %d/10 survived (median final N %.1f), suppressed %d/10 survived "
          "(median final N %.1f); need >= 8/10 both and motivated median larger",
          on_survived, on_median, off_survived, off_median);
  report(3, "rich-food advantage", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 4: motivation-gated control dominates rich-food survivors") {
  const Grid& g = grid();
  int surviving_seeds = 0, gated_majority_seeds = 0;
  double gated_sum = 0.0, reflex_sum = 0.0, other_sum = 0.0, suppressed_sum = 0.0;
  for (int s = 0; s < kSeedCount; ++s) {
    const CellResult& cell = g.cells[2][0][s];
    if (!cell.survived || !cell.classes) continue;
    ++surviving_seeds;
    if (cell.classes->majority_label == SchemeLabel::kMotivationGated)
      ++gated_majority_seeds;
    gated_sum += cell.classes->fraction(SchemeLabel::kMotivationGated);
    reflex_sum += cell.classes->fraction(SchemeLabel::kReflexOnly);
    other_sum += cell.classes->fraction(SchemeLabel::kOther);
    suppressed_sum += cell.classes->mating_suppressed_fraction();
  }
  const double denom = surviving_seeds > 0 ? double(surviving_seeds) : 1.0;
  const bool pass =
      surviving_seeds > 0 && 2 * gated_majority_seeds >= surviving_seeds;
  const std::string detail = fmt(
      "motivation_gated majority in %d of %d surviving motivated seeds (need >= half); "
      "mean final-population fractions: motivation_gated %.3f, reflex_only %.3f, "
      "other %.3f, mating_suppressed_when_hungry %.3f",
      gated_majority_seeds, surviving_seeds, gated_sum / denom, reflex_sum / denom,
      other_sum / denom, suppressed_sum / denom);
  report(4, "gated-control emergence", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 5: founder controller matches its priority rules exactly") {
  const BehaviorTable table = probe_agent(instinct_genome());
  int mismatches = 0;
  for (int pattern = 0; pattern < BehaviorTable::kPatternCount; ++pattern) {
    const Action want = founder_oracle(pattern);
    for (bool hungry : {false, true})
      for (bool mateable : {false, true})
        if (table.at(pattern, hungry, mateable) != want) ++mismatches;
  }
  const bool pass = mismatches == 0;
  const std::string detail =
      fmt("%d mismatches over 32 sensor patterns x 4 motivation corners (need 0)",
          mismatches);
  report(5, "founder truth table", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 6: the energy ledger balances over a 1000-iteration run") {
  RunConfig cfg;
  cfg.seed = derive_seed(kMasterSeed, 0);
  cfg.max_iterations = 1000;
  const double r = cfg.physiology.base_energy_unit;
  Simulation sim(cfg);
  double max_step_error = 0.0, total_error = 0.0;
  uint64_t births = 0, deaths = 0, steps = 0;
  while (sim.iteration() < cfg.max_iterations && sim.population() > 0) {
    const StepRecord rec = sim.step();
    const double after = sim.world().total_energy();
    const double predicted = rec.total_energy + rec.gains_from_eating - rec.costs_paid -
                             rec.energy_lost_to_deaths;
    const double error = std::fabs(after - predicted);
    max_step_error = std::max(max_step_error, error);
    total_error += error;
    births += rec.births;
    deaths += rec.deaths;
    ++steps;
  }
  const bool active = births > 0 && deaths > 0;
  const bool pass =
      steps == 1000 && active && max_step_error <= 1e-6 * r && total_error <= 1e-3 * r;
  const std::string detail =
      fmt("%llu steps, %llu births, %llu deaths; max per-step imbalance %.3g "
          "(limit %.0e), cumulative %.3g (limit %.0e)",
          (unsigned long long)steps, (unsigned long long)births,
          (unsigned long long)deaths, max_step_error, 1e-6 * r, total_error, 1e-3 * r);
  report(6, "energy conservation", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 7: runs are bitwise deterministic and resumable") {
  TempDir dir;
  RunConfig cfg;
  cfg.seed = derive_seed(kMasterSeed, 3);
  cfg.max_iterations = 1000;
  run_scenario(cfg, dir.path / "first");
  run_scenario(cfg, dir.path / "second");
  const std::string ts_first = slurp(dir.path / "first" / "timeseries.csv");
  const bool repeat_identical =
      !ts_first.empty() && ts_first == slurp(dir.path / "second" / "timeseries.csv");

  RunConfig half = cfg;
  half.max_iterations = 500;
  run_scenario(half, dir.path / "half");
  resume_scenario(dir.path / "half" / "snapshot_final.txt", dir.path / "resumed",
                  cfg.max_iterations);
  const bool snapshots_equal = slurp(dir.path / "first" / "snapshot_final.txt") ==
                               slurp(dir.path / "resumed" / "snapshot_final.txt");
  std::string resumed_ts = slurp(dir.path / "resumed" / "timeseries.csv");
  resumed_ts.erase(0, resumed_ts.find('\n') + 1);  // drop the repeated header
  const bool halves_concatenate =
      slurp(dir.path / "half" / "timeseries.csv") + resumed_ts == ts_first;

  const bool pass = repeat_identical && snapshots_equal && halves_concatenate;
  const std::string detail =
      fmt("repeat timeseries identical: %s; split-run final snapshot identical: %s; "
          "timeseries halves concatenate: %s",
          repeat_identical ? "yes" : "no", snapshots_equal ? "yes" : "no",
          halves_concatenate ? "yes" : "no");
  report(7, "determinism and resume", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 8: genetic operators and motivations obey their contracts") {
  constexpr int kTrials = 100000;
  Rng rng(20240817);

  int provenance_violations = 0;
  Genome parent_a, parent_b;
  for (int trial = 0; trial < kTrials; ++trial) {
    for (int i = 0; i < kGenomeLength; ++i) {
      parent_a.weights[i] = rng.uniform_double() * 2.0 - 1.0;
      parent_b.weights[i] = parent_a.weights[i] + 1.0;  // always distinguishable
    }
    const Genome child = recombine(parent_a, parent_b, rng);
    for (int i = 0; i < kGenomeLength; ++i)
      if (child.weights[i] != parent_a.weights[i] &&
          child.weights[i] != parent_b.weights[i])
        ++provenance_violations;
  }

  constexpr double kIntensity = 0.05;
  const Genome zero{};
  int bound_violations = 0;
  double delta_sum = 0.0;
  uint64_t bins[10] = {};
  for (int trial = 0; trial < kTrials; ++trial) {
    const Genome mutant = mutate(zero, kIntensity, rng);
    for (int i = 0; i < kGenomeLength; ++i) {
      const double delta = mutant.weights[i];
      if (std::fabs(delta) > kIntensity) ++bound_violations;
      delta_sum += delta;
      const double unit = (delta / kIntensity + 1.0) / 2.0;  // maps to [0, 1)
      bins[std::min(int(unit * 10.0), 9)]++;
    }
  }
  const double samples = double(kTrials) * kGenomeLength;
  const double mean = delta_sum / samples;
  // 5 standard errors for a uniform on [-0.05, 0.05] at 6.3e6 samples.
  const double mean_limit = 5.0 * (kIntensity / std::sqrt(3.0)) / std::sqrt(samples);
  double chi_square = 0.0;
  for (uint64_t bin : bins) {
    const double expected = samples / 10.0;
    chi_square += (double(bin) - expected) * (double(bin) - expected) / expected;
  }
  const double chi_limit = 27.877;  // 9 degrees of freedom, alpha = 0.001

  int clamp_violations = 0;
  PhysiologyParams phys;
  for (int trial = 0; trial < kTrials; ++trial) {
    const double energy = rng.uniform_double() * 10.0 * phys.optimal_energy;
    const Motivations m = compute_motivations(energy, phys);
    if (m.food < 0.0 || m.food > 1.0 || m.mate < 0.0 || m.mate > 1.0)
      ++clamp_violations;
  }
  for (double energy : {0.0, phys.reproduction_energy, phys.optimal_energy,
                        10.0 * phys.optimal_energy}) {
    const Motivations m = compute_motivations(energy, phys);
    if (m.food < 0.0 || m.food > 1.0 || m.mate < 0.0 || m.mate > 1.0)
      ++clamp_violations;
  }

  const bool pass = provenance_violations == 0 && bound_violations == 0 &&
                    std::fabs(mean) <= mean_limit && chi_square < chi_limit &&
                    clamp_violations == 0;
  const std::string detail =
      fmt("100k trials: crossover provenance violations %d, mutation bound violations "
          "%d, |mean delta| %.2e (limit %.2e), chi-square %.2f (limit %.3f), "
          "motivation clamp violations %d",
          provenance_violations, bound_violations, std::fabs(mean), mean_limit,
          chi_square, chi_limit, clamp_violations);
  report(8, "operator properties", pass, detail);
  CHECK_MESSAGE(pass, detail);
}

TEST_CASE("acceptance 9: zeroed motivation weights make gating impossible") {
  Rng rng(424242);
  int mismatches = 0;
  for (int g = 0; g < 100; ++g) {
    Genome genome;
    for (int a = 0; a < kActionCount; ++a)
      for (int s = 0; s < kSensorCount; ++s)
        genome.weights[a * kSensorCount + s] =
            s < 5 ? rng.uniform_double() * 4.0 - 2.0 : 0.0;
    const BehaviorTable table = probe_agent(genome);
    for (int pattern = 0; pattern < BehaviorTable::kPatternCount; ++pattern) {
      const Action base = table.at(pattern, false, false);
      for (bool hungry : {false, true})
        for (bool mateable : {false, true})
          if (table.at(pattern, hungry, mateable) != base) ++mismatches;
    }
  }
  const bool pass = mismatches == 0;
  const std::string detail = fmt(
      "100 random controllers with zeroed motivation columns: %d corner mismatches "
      "over 3200 probe rows (need 0)",
      mismatches);
  report(9, "gating requires motivation weights", pass, detail);
  CHECK_MESSAGE(pass, detail);
}
