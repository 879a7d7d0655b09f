#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "core/world.hpp"

namespace alife {

// Per-gene mean and population standard deviation across a set of agents.
struct WeightStats {
  uint64_t iteration = 0;
  std::array<double, kGenomeLength> mean{};
  std::array<double, kGenomeLength> stddev{};
};

// Welford accumulation per gene; numerically stable for long-running
// populations whose weights drift far from zero. Empty input yields nullopt.
std::optional<WeightStats> weight_stats(std::span<const Agent> population,
                                        uint64_t iteration = 0);

}  // namespace alife
