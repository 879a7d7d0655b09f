#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace alife {

// Shortest decimal text that parses back to exactly the same double
// (std::to_chars round-trip guarantee). Used for every double written to
// CSV, snapshots, and manifests so identical runs produce identical bytes
// and snapshots restore exact state.
std::string format_double(double value);

// Strict full-string parses; nullopt on any trailing junk, overflow, or
// empty input.
std::optional<double> parse_double(std::string_view text);
std::optional<int64_t> parse_int(std::string_view text);
std::optional<uint64_t> parse_uint(std::string_view text);

}  // namespace alife
