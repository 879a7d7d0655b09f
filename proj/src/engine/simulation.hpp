#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/run_config.hpp"
#include "core/rng.hpp"
#include "core/world.hpp"

namespace alife {

// Per-iteration bookkeeping. population and total_energy describe the world
// at the start of the iteration (before any grass growth or actions); the
// remaining fields describe what happened during it. The fields satisfy
//   total_energy(t+1) - total_energy(t)
//     = gains_from_eating - costs_paid - energy_lost_to_deaths
// where energy_lost_to_deaths is the summed (non-positive) residual energy of
// the agents removed this iteration. Energy handed to newborns moves between
// agents and cancels out of the identity, but is reported for analysis.
struct StepRecord {
  uint64_t iteration = 0;
  uint64_t population = 0;
  uint64_t births = 0;
  uint64_t deaths = 0;
  uint64_t grass_cells = 0;  // counted right after grass growth
  std::array<uint64_t, kActionCount> action_counts{};
  double total_energy = 0.0;
  double gains_from_eating = 0.0;
  double costs_paid = 0.0;
  double energy_lost_to_deaths = 0.0;
  double energy_to_newborns = 0.0;
};

// Grass dynamics: every live patch ages by one iteration and expires after
// grass_lifetime of them; then every grass-free cell sprouts a fresh patch
// with probability grass_probability. One uniform draw per grass-free cell,
// in cell order.
void grass_update(World& world, Rng& rng);

// Runs every live controller against one frozen snapshot of the world, so
// within an iteration no agent observes another agent's simultaneous choice.
// actions[id] belongs to world.agent(id).
std::vector<Action> choose_actions(const World& world);

// Applies one iteration's chosen actions. Phases, in order:
//   1. every agent pays its action cost, succeed or fail;
//   2. eaters on a grass cell gain eat_gain and consume the patch;
//   3. movers and jumpers relocate in a random order (one shuffle; jump
//      direction is drawn when the jumper is processed); a move into an
//      occupied cell fails in place;
//   4. mating pairs (left agent chose mate-right, right neighbor chose
//      mate-left) are tried in a random order; a child appears in a free cell
//      flanking the pair (random pick if both flanks are free), each parent
//      transfers child_transfer_total/2 to it; with no free flank nothing
//      happens beyond the already-paid cost;
//   5. every agent with energy <= 0 is removed (parents after transfers;
//      newborns only if the endowment was zero).
// Requires actions.size() == world.population().
StepRecord resolve_actions(World& world, const std::vector<Action>& actions,
                           const EvolutionParams& evolution, Rng& rng,
                           uint64_t iteration);

class Simulation {
 public:
  // Fresh world: initial_population copies of the instinct genome at energy
  // optimal_energy, placed uniformly on distinct cells.
  explicit Simulation(const RunConfig& config);

  // Resumption from serialized state (see snapshot.hpp).
  Simulation(const RunConfig& config, World world, Rng rng, uint64_t iteration);

  StepRecord step();

  const RunConfig& config() const { return config_; }
  const World& world() const { return world_; }
  World& world() { return world_; }
  const Rng& rng() const { return rng_; }
  uint64_t iteration() const { return iteration_; }
  size_t population() const { return world_.population(); }

 private:
  RunConfig config_;
  World world_;
  Rng rng_;
  uint64_t iteration_ = 0;
};

// Steps a fresh simulation until max_iterations or extinction, collecting the
// per-iteration records.
std::vector<StepRecord> run(const RunConfig& config);

}  // namespace alife
