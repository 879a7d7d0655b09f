#include "analysis/stats.hpp"

#include <cmath>

namespace alife {

std::optional<WeightStats> weight_stats(std::span<const Agent> population,
                                        uint64_t iteration) {
  if (population.empty()) return std::nullopt;
  WeightStats stats;
  stats.iteration = iteration;
  std::array<double, kGenomeLength> m2{};
  double count = 0.0;
  for (const Agent& agent : population) {
    count += 1.0;
    for (int g = 0; g < kGenomeLength; ++g) {
      const double w = agent.genome.weights[g];
      const double delta = w - stats.mean[g];
      stats.mean[g] += delta / count;
      m2[g] += delta * (w - stats.mean[g]);
    }
  }
  for (int g = 0; g < kGenomeLength; ++g)
    stats.stddev[g] = std::sqrt(m2[g] / count);
  return stats;
}

}  // namespace alife
