#include "core/network.hpp"

#include <cmath>

namespace alife {

NetworkOutputs forward(const Genome& genome, const SensoryVector& input) {
  NetworkOutputs out;
  for (int a = 0; a < kActionCount; ++a) {
    const double* w = genome.weights.data() + a * kSensorCount;
    double score = 0.0;
    for (int i = 0; i < kSensorCount; ++i) score += w[i] * input[i];
    out[a] = 1.0 / (1.0 + std::exp(-score));
  }
  return out;
}

Action select_action(const NetworkOutputs& outputs) {
  int best = 0;
  for (int a = 1; a < kActionCount; ++a)
    if (outputs[a] > outputs[best]) best = a;
  return static_cast<Action>(best);
}

}  // namespace alife
