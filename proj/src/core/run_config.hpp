#pragma once

#include <cstdint>
#include <string>

#include "core/params.hpp"

namespace alife {

// Everything that defines one simulation run, plus its output routing.
struct RunConfig {
  WorldParams world;
  PhysiologyParams physiology;
  EvolutionParams evolution;
  uint64_t max_iterations = 50000;
  uint64_t timeseries_interval = 1;  // iterations between timeseries rows
  uint64_t weights_interval = 100;   // iterations between weight-statistics samples
  uint64_t snapshot_interval = 0;    // 0 = write only the final snapshot
  uint64_t seed = 1;
  std::string output_directory = "out";
};

}  // namespace alife
