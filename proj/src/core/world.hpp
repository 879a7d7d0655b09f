#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/genome.hpp"
#include "core/params.hpp"

namespace alife {

struct Agent {
  int32_t position = 0;
  double energy = 0.0;  // R; the agent is removed once this drops to 0 or below
  Genome genome;
};

// Ring of cells holding at most one agent and at most one grass patch each.
// Agents live in a dense vector; their index is the agent id used everywhere
// within one iteration. Removal compacts the vector and renumbers, so ids are
// only stable between calls to remove_dead().
class World {
 public:
  World(const WorldParams& world_params, const PhysiologyParams& phys);

  const WorldParams& world_params() const { return world_params_; }
  const PhysiologyParams& physiology() const { return phys_; }
  int32_t n_cells() const { return world_params_.n_cells; }

  // Position arithmetic on the ring; delta may be negative.
  int32_t ring_cell(int32_t cell, int32_t delta) const {
    int32_t n = world_params_.n_cells;
    return ((cell + delta) % n + n) % n;
  }

  int32_t occupant(int32_t cell) const { return occupant_[cell]; }  // -1 = empty
  bool has_grass(int32_t cell) const { return grass_[cell] > 0; }
  int32_t grass_remaining(int32_t cell) const { return grass_[cell]; }
  void set_grass(int32_t cell, int32_t remaining);  // 0 clears the patch
  uint64_t grass_cell_count() const { return grass_count_; }

  size_t population() const { return agents_.size(); }
  Agent& agent(size_t id) { return agents_[id]; }
  const Agent& agent(size_t id) const { return agents_[id]; }
  std::span<const Agent> agents() const { return agents_; }

  // Places a new agent; throws std::invalid_argument if the cell is out of
  // range or already occupied. Returns the new agent id.
  int32_t add_agent(int32_t cell, double energy, const Genome& genome);

  void move_agent(size_t id, int32_t to_cell);

  struct RemovedDead {
    uint64_t count = 0;
    double residual_energy = 0.0;  // summed R of the removed agents (<= 0 each)
  };
  // Removes every agent with energy <= 0, keeping survivor order, and rebuilds
  // the occupancy index.
  RemovedDead remove_dead();

  double total_energy() const;

 private:
  WorldParams world_params_;
  PhysiologyParams phys_;
  std::vector<int32_t> occupant_;
  std::vector<int32_t> grass_;
  std::vector<Agent> agents_;
  uint64_t grass_count_ = 0;
};

// Controller input for one agent, read from the current world state. Food and
// neighbor flags are binary; the last four components carry motivations and
// are forced to zero when motivation_mode is kSuppressed.
SensoryVector sense(const World& world, size_t agent_id);

}  // namespace alife
