#pragma once

#include <array>
#include <cstdint>

namespace alife {

inline constexpr int kSensorCount = 9;
inline constexpr int kActionCount = 7;
inline constexpr int kGenomeLength = kSensorCount * kActionCount;  // 63

// Components of the controller input vector, in wire order.
enum Sensor : int {
  kSenseFoodLeft = 0,
  kSenseFoodHere = 1,
  kSenseFoodRight = 2,
  kSenseAgentLeft = 3,
  kSenseAgentRight = 4,
  kSenseNeighborMateLeft = 5,   // mating motivation of the left neighbor
  kSenseNeighborMateRight = 6,  // mating motivation of the right neighbor
  kSenseMotivationFood = 7,     // own hunger motivation M_E
  kSenseMotivationMate = 8,     // own mating motivation M_R
};

// Output neurons / actions, in wire order. Ties in the action selection are
// broken toward the lower index, so Rest is the default of an all-zero
// controller.
enum class Action : int {
  kRest = 0,
  kMoveLeft = 1,
  kMoveRight = 2,
  kJump = 3,
  kEat = 4,
  kMateLeft = 5,
  kMateRight = 6,
};

constexpr int action_index(Action a) { return static_cast<int>(a); }

constexpr const char* action_name(Action a) {
  switch (a) {
    case Action::kRest: return "rest";
    case Action::kMoveLeft: return "move_left";
    case Action::kMoveRight: return "move_right";
    case Action::kJump: return "jump";
    case Action::kEat: return "eat";
    case Action::kMateLeft: return "mate_left";
    case Action::kMateRight: return "mate_right";
  }
  return "?";
}

using SensoryVector = std::array<double, kSensorCount>;
using NetworkOutputs = std::array<double, kActionCount>;

// One gene per synapse of the one-layer controller, row-major by output
// neuron: weights[action * kSensorCount + sensor]. There are no bias genes.
struct Genome {
  std::array<double, kGenomeLength> weights{};

  double& at(Action action, int sensor) {
    return weights[action_index(action) * kSensorCount + sensor];
  }
  double at(Action action, int sensor) const {
    return weights[action_index(action) * kSensorCount + sensor];
  }

  bool operator==(const Genome&) const = default;
};

}  // namespace alife
