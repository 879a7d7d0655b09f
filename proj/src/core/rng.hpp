#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace alife {

// Deterministic random source for the whole simulation.
//
// The raw engine is std::mt19937_64, whose output sequence is fixed by the
// standard. All distribution logic lives here instead of in the std
// distribution classes (their output is implementation specific), so a
// (config, seed) pair replays the same trajectory on any platform and the
// generator state can be serialized into snapshots and restored exactly.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection sampling keeps it unbiased; n == 1
  // consumes no randomness.
  uint64_t uniform_index(uint64_t n);

  // Fisher-Yates shuffle. Written out by hand because std::shuffle does not
  // pin its draw order; this one is part of the determinism contract.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // Exact engine state as whitespace-separated decimal tokens.
  std::string serialize() const;
  static Rng deserialize(const std::string& text);  // throws std::invalid_argument

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64-style mix of a master seed and a run index, used to hand every
// run in a sweep its own independent stream while keeping the replicate
// pairing across parameter combinations.
uint64_t derive_seed(uint64_t master_seed, uint64_t index);

}  // namespace alife
