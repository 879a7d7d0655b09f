#include "engine/simulation.hpp"

#include <numeric>
#include <stdexcept>

#include "core/evolution.hpp"
#include "core/network.hpp"

namespace alife {

void grass_update(World& world, Rng& rng) {
  const int32_t n = world.n_cells();
  for (int32_t c = 0; c < n; ++c) {
    int32_t g = world.grass_remaining(c);
    if (g > 0) world.set_grass(c, g - 1);
  }
  const double pg = world.world_params().grass_probability;
  const int32_t lifetime = world.physiology().grass_lifetime;
  for (int32_t c = 0; c < n; ++c) {
    if (!world.has_grass(c) && rng.uniform_double() < pg)
      world.set_grass(c, lifetime);
  }
}

std::vector<Action> choose_actions(const World& world) {
  std::vector<Action> actions(world.population());
  for (size_t id = 0; id < actions.size(); ++id)
    actions[id] = select_action(forward(world.agent(id).genome, sense(world, id)));
  return actions;
}

StepRecord resolve_actions(World& world, const std::vector<Action>& actions,
                           const EvolutionParams& evolution, Rng& rng,
                           uint64_t iteration) {
  if (actions.size() != world.population())
    throw std::logic_error("action list does not match the live population");
  const PhysiologyParams& phys = world.physiology();

  StepRecord rec;
  rec.iteration = iteration;
  rec.population = actions.size();
  rec.grass_cells = world.grass_cell_count();
  rec.total_energy = world.total_energy();

  // Phase 1: costs. Paid by everyone, whether or not the action succeeds.
  for (size_t id = 0; id < actions.size(); ++id) {
    ++rec.action_counts[action_index(actions[id])];
    const double cost = action_cost(actions[id], phys);
    world.agent(id).energy -= cost;
    rec.costs_paid += cost;
  }

  // Phase 2: eating. An eater on a live patch consumes it whole.
  for (size_t id = 0; id < actions.size(); ++id) {
    if (actions[id] != Action::kEat) continue;
    const int32_t cell = world.agent(id).position;
    if (world.has_grass(cell)) {
      world.set_grass(cell, 0);
      world.agent(id).energy += phys.eat_gain;
      rec.gains_from_eating += phys.eat_gain;
    }
  }

  // Phase 3: movement. All movers and jumpers relocate in one randomized
  // order so nobody gets systematic right-of-way; a blocked step is lost.
  std::vector<uint32_t> movers;
  for (size_t id = 0; id < actions.size(); ++id) {
    Action a = actions[id];
    if (a == Action::kMoveLeft || a == Action::kMoveRight || a == Action::kJump)
      movers.push_back(static_cast<uint32_t>(id));
  }
  rng.shuffle(movers);
  for (uint32_t id : movers) {
    const Agent& a = world.agent(id);
    int32_t target;
    if (actions[id] == Action::kMoveLeft) {
      target = world.ring_cell(a.position, -1);
    } else if (actions[id] == Action::kMoveRight) {
      target = world.ring_cell(a.position, +1);
    } else {
      const int32_t dir = rng.uniform_index(2) == 0 ? -1 : +1;
      target = world.ring_cell(a.position, dir * phys.jump_distance);
    }
    if (world.occupant(target) < 0) world.move_agent(id, target);
  }

  // Phase 4: mating. A pair forms when adjacent agents chose each other
  // (left one mate-right, right one mate-left). Pairs are collected before
  // any birth, then tried in a randomized order; earlier births can fill a
  // later pair's flanks.
  struct MatingPair {
    uint32_t left_id, right_id;
    int32_t left_cell;
  };
  std::vector<MatingPair> pairs;
  for (int32_t c = 0; c < world.n_cells(); ++c) {
    const int32_t li = world.occupant(c);
    if (li < 0 || actions[li] != Action::kMateRight) continue;
    const int32_t ri = world.occupant(world.ring_cell(c, +1));
    if (ri < 0 || actions[ri] != Action::kMateLeft) continue;
    pairs.push_back({static_cast<uint32_t>(li), static_cast<uint32_t>(ri), c});
  }
  rng.shuffle(pairs);
  for (const MatingPair& p : pairs) {
    const int32_t left_flank = world.ring_cell(p.left_cell, -1);
    const int32_t right_flank = world.ring_cell(p.left_cell, +2);
    // On very small rings the two flanks are the same cell.
    const bool left_free = world.occupant(left_flank) < 0;
    const bool right_free = right_flank != left_flank && world.occupant(right_flank) < 0;
    int32_t child_cell;
    if (left_free && right_free) {
      child_cell = rng.uniform_index(2) == 0 ? left_flank : right_flank;
    } else if (left_free) {
      child_cell = left_flank;
    } else if (right_free) {
      child_cell = right_flank;
    } else {
      continue;  // nowhere to put a child; the mating costs are still paid
    }
    const Genome child = offspring_genome(world.agent(p.left_id).genome,
                                          world.agent(p.right_id).genome,
                                          evolution, rng);
    const double half = phys.child_transfer_total / 2.0;
    world.agent(p.left_id).energy -= half;
    world.agent(p.right_id).energy -= half;
    world.add_agent(child_cell, phys.child_transfer_total, child);
    ++rec.births;
    rec.energy_to_newborns += phys.child_transfer_total;
  }

  // Phase 5: deaths. Parents are judged after their transfers, so a birth can
  // kill a parent this same iteration; a newborn dies here only when the
  // endowment is zero.
  const World::RemovedDead dead = world.remove_dead();
  rec.deaths = dead.count;
  rec.energy_lost_to_deaths = dead.residual_energy;
  return rec;
}

Simulation::Simulation(const RunConfig& config)
    : config_(config), world_(config.world, config.physiology), rng_(config.seed) {
  const Genome founder = instinct_genome();
  const int32_t n = config.world.n_cells;
  std::vector<int32_t> cells(static_cast<size_t>(n));
  std::iota(cells.begin(), cells.end(), 0);
  // Partial Fisher-Yates: the first initial_population entries become a
  // uniform sample of distinct cells.
  for (int32_t i = 0; i < config.evolution.initial_population; ++i) {
    const size_t j = i + rng_.uniform_index(static_cast<uint64_t>(n - i));
    std::swap(cells[i], cells[j]);
    world_.add_agent(cells[i], config.physiology.optimal_energy, founder);
  }
}

Simulation::Simulation(const RunConfig& config, World world, Rng rng, uint64_t iteration)
    : config_(config), world_(std::move(world)), rng_(rng), iteration_(iteration) {}

StepRecord Simulation::step() {
  grass_update(world_, rng_);
  const std::vector<Action> actions = choose_actions(world_);
  StepRecord rec = resolve_actions(world_, actions, config_.evolution, rng_, iteration_);
  ++iteration_;
  return rec;
}

std::vector<StepRecord> run(const RunConfig& config) {
  Simulation sim(config);
  std::vector<StepRecord> records;
  for (uint64_t t = 0; t < config.max_iterations && sim.population() > 0; ++t)
    records.push_back(sim.step());
  return records;
}

}  // namespace alife
