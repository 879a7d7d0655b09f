#pragma once

#include <algorithm>
#include <cstdint>

#include "core/genome.hpp"

namespace alife {

// Whether the four motivation-derived sensory components (neighbor mating
// motivations and the agent's own M_E / M_R) are fed to the controllers or
// forced to zero. The suppressed mode is the purely reflexive control
// condition; everything else about the model is identical.
enum class MotivationMode { kEnabled, kSuppressed };

// Energy scale and per-action prices. All energies are multiples of the base
// unit r (the price of resting for one iteration).
struct PhysiologyParams {
  double base_energy_unit = 1.0;  // r
  double cost_rest = 1.0;
  double cost_eat = 2.0;
  double cost_move = 4.0;
  double cost_jump = 20.0;
  double cost_mate = 20.0;
  double child_transfer_total = 1000.0;  // newborn endowment, split between parents
  double optimal_energy = 10000.0;       // R0: hunger motivation vanishes here
  double reproduction_energy = 5000.0;   // R1: mating motivation saturates here
  double eat_gain = 200.0;               // energy in one grass patch
  int32_t grass_lifetime = 20;           // iterations an uneaten patch persists
  int32_t jump_distance = 5;             // cells covered by one jump
};

struct WorldParams {
  int32_t n_cells = 900;
  double grass_probability = 0.005;  // per free cell, per iteration
  MotivationMode motivation_mode = MotivationMode::kEnabled;
};

struct EvolutionParams {
  double mutation_intensity = 0.05;  // half-width of the additive uniform mutation
  int32_t initial_population = 200;
};

inline double action_cost(Action action, const PhysiologyParams& phys) {
  switch (action) {
    case Action::kRest: return phys.cost_rest;
    case Action::kMoveLeft:
    case Action::kMoveRight: return phys.cost_move;
    case Action::kJump: return phys.cost_jump;
    case Action::kEat: return phys.cost_eat;
    case Action::kMateLeft:
    case Action::kMateRight: return phys.cost_mate;
  }
  return phys.cost_rest;  // unreachable
}

struct Motivations {
  double food = 0.0;  // M_E
  double mate = 0.0;  // M_R
};

// M_E = max((R0 - R)/R0, 0), M_R = min(R/R1, 1). Both sit in [0, 1] for any
// non-negative energy.
inline Motivations compute_motivations(double energy, const PhysiologyParams& phys) {
  return {
      std::max((phys.optimal_energy - energy) / phys.optimal_energy, 0.0),
      std::min(energy / phys.reproduction_energy, 1.0),
  };
}

}  // namespace alife
