#include "core/rng.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace alife {

uint64_t Rng::uniform_index(uint64_t n) {
  if (n <= 1) return 0;
  // Discard the low (2^64 mod n) values so the remainder is exact.
  const uint64_t threshold = (0 - n) % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % n;
}

std::string Rng::serialize() const {
  std::ostringstream os;
  os << engine_;
  return os.str();
}

Rng Rng::deserialize(const std::string& text) {
  Rng rng;
  std::istringstream is(text);
  is >> rng.engine_;
  if (is.fail()) throw std::invalid_argument("malformed rng state");
  return rng;
}

uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace alife
