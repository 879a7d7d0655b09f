#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "engine/simulation.hpp"

namespace alife {

// Snapshots serialize the complete simulation state as versioned,
// line-oriented text:
//
//   alife_snapshot 1
//   config <key> <value>          (canonical order, output routing excluded)
//   iteration <t>
//   rng <mt19937_64 state tokens>
//   agents <count>
//   agent <index> <cell> <energy> <63 weights>
//   grass <count>
//   cell <index> <remaining>
//   end
//
// Agents appear in storage order and grass cells in ascending cell order;
// doubles use shortest round-trip formatting. Together with the serialized
// generator state this makes save -> load -> save byte-identical and lets a
// resumed run reproduce an uninterrupted one exactly.
std::string snapshot_text(const RunConfig& config, const World& world,
                          const Rng& rng, uint64_t iteration);

void save_snapshot(const Simulation& sim, const std::filesystem::path& path);

struct SnapshotData {
  RunConfig config;  // output_directory is not stored; callers route output
  uint64_t iteration;
  Rng rng;
  World world;
};

// Strict parse; any version mismatch, truncation, malformed record, or
// state-invariant violation (duplicate occupancy, non-positive energy,
// non-finite weights, bad grass cells) is an IoError naming the record.
SnapshotData load_snapshot(const std::filesystem::path& path);

Simulation simulation_from_snapshot(SnapshotData data);

}  // namespace alife
