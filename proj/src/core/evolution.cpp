#include "core/evolution.hpp"

namespace alife {

Genome recombine(const Genome& parent_a, const Genome& parent_b, Rng& rng) {
  Genome child;
  for (int i = 0; i < kGenomeLength; ++i) {
    child.weights[i] =
        rng.uniform_index(2) == 0 ? parent_a.weights[i] : parent_b.weights[i];
  }
  return child;
}

Genome mutate(const Genome& genome, double mutation_intensity, Rng& rng) {
  Genome out = genome;
  for (int i = 0; i < kGenomeLength; ++i) {
    out.weights[i] += (2.0 * rng.uniform_double() - 1.0) * mutation_intensity;
  }
  return out;
}

Genome offspring_genome(const Genome& parent_a, const Genome& parent_b,
                        const EvolutionParams& params, Rng& rng) {
  return mutate(recombine(parent_a, parent_b, rng), params.mutation_intensity, rng);
}

Genome instinct_genome() {
  Genome g{};
  // Feeding beats walking, walking toward food beats everything except
  // feeding, and the strong negative food-here weights stop the walker from
  // stepping off a patch it could eat.
  g.at(Action::kEat, kSenseFoodHere) = 8.0;
  g.at(Action::kMoveLeft, kSenseFoodLeft) = 4.0;
  g.at(Action::kMoveLeft, kSenseFoodHere) = -8.0;
  g.at(Action::kMoveRight, kSenseFoodRight) = 4.0;
  g.at(Action::kMoveRight, kSenseFoodHere) = -8.0;
  // Crowded on both sides: jump (1.5 + 1.5 beats the 2 - 2 of either mate
  // neuron). A single neighbor: mate toward it (2 beats 1.5).
  g.at(Action::kJump, kSenseAgentLeft) = 1.5;
  g.at(Action::kJump, kSenseAgentRight) = 1.5;
  g.at(Action::kMateLeft, kSenseAgentLeft) = 2.0;
  g.at(Action::kMateLeft, kSenseAgentRight) = -2.0;
  g.at(Action::kMateRight, kSenseAgentRight) = 2.0;
  g.at(Action::kMateRight, kSenseAgentLeft) = -2.0;
  return g;
}

}  // namespace alife
