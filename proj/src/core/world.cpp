#include "core/world.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace alife {

World::World(const WorldParams& world_params, const PhysiologyParams& phys)
    : world_params_(world_params),
      phys_(phys),
      occupant_(static_cast<size_t>(world_params.n_cells), -1),
      grass_(static_cast<size_t>(world_params.n_cells), 0) {}

void World::set_grass(int32_t cell, int32_t remaining) {
  int32_t& slot = grass_[cell];
  if (slot > 0 && remaining == 0) --grass_count_;
  if (slot == 0 && remaining > 0) ++grass_count_;
  slot = remaining;
}

int32_t World::add_agent(int32_t cell, double energy, const Genome& genome) {
  if (cell < 0 || cell >= world_params_.n_cells)
    throw std::invalid_argument("agent cell " + std::to_string(cell) + " out of range");
  if (occupant_[cell] != -1)
    throw std::invalid_argument("cell " + std::to_string(cell) + " already occupied");
  int32_t id = static_cast<int32_t>(agents_.size());
  agents_.push_back(Agent{cell, energy, genome});
  occupant_[cell] = id;
  return id;
}

void World::move_agent(size_t id, int32_t to_cell) {
  Agent& a = agents_[id];
  occupant_[a.position] = -1;
  occupant_[to_cell] = static_cast<int32_t>(id);
  a.position = to_cell;
}

World::RemovedDead World::remove_dead() {
  RemovedDead result;
  size_t write = 0;
  for (size_t read = 0; read < agents_.size(); ++read) {
    if (agents_[read].energy > 0) {
      if (write != read) agents_[write] = std::move(agents_[read]);
      ++write;
    } else {
      ++result.count;
      result.residual_energy += agents_[read].energy;
    }
  }
  if (result.count == 0) return result;
  agents_.resize(write);
  std::fill(occupant_.begin(), occupant_.end(), -1);
  for (size_t id = 0; id < agents_.size(); ++id)
    occupant_[agents_[id].position] = static_cast<int32_t>(id);
  return result;
}

double World::total_energy() const {
  double sum = 0.0;
  for (const Agent& a : agents_) sum += a.energy;
  return sum;
}

SensoryVector sense(const World& world, size_t agent_id) {
  const Agent& self = world.agent(agent_id);
  const int32_t left = world.ring_cell(self.position, -1);
  const int32_t right = world.ring_cell(self.position, +1);
  const int32_t left_id = world.occupant(left);
  const int32_t right_id = world.occupant(right);

  SensoryVector x{};
  x[kSenseFoodLeft] = world.has_grass(left) ? 1.0 : 0.0;
  x[kSenseFoodHere] = world.has_grass(self.position) ? 1.0 : 0.0;
  x[kSenseFoodRight] = world.has_grass(right) ? 1.0 : 0.0;
  x[kSenseAgentLeft] = left_id >= 0 ? 1.0 : 0.0;
  x[kSenseAgentRight] = right_id >= 0 ? 1.0 : 0.0;

  if (world.world_params().motivation_mode == MotivationMode::kEnabled) {
    const PhysiologyParams& phys = world.physiology();
    if (left_id >= 0)
      x[kSenseNeighborMateLeft] = compute_motivations(world.agent(left_id).energy, phys).mate;
    if (right_id >= 0)
      x[kSenseNeighborMateRight] = compute_motivations(world.agent(right_id).energy, phys).mate;
    Motivations own = compute_motivations(self.energy, phys);
    x[kSenseMotivationFood] = own.food;
    x[kSenseMotivationMate] = own.mate;
  }
  return x;
}

}  // namespace alife
