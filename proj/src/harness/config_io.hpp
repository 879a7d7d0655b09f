#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/run_config.hpp"

namespace alife {

// Bad configuration input (unknown keys, malformed values, out-of-range
// parameters). The message lists every violation found, one per line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure (missing or unreadable/unwritable files, malformed
// snapshot contents).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw key/value assignments in application order (later entries win).
using ConfigValues = std::vector<std::pair<std::string, std::string>>;

bool is_known_config_key(std::string_view key);

// Reads `key = value` lines; '#' starts a comment, blank lines are skipped.
// Collects every malformed line and unknown key into one ConfigError.
ConfigValues read_config_file(const std::filesystem::path& path);

// Applies file values then overrides on top of the built-in defaults,
// resolves the derived defaults (costs and energy constants scale with
// base_energy_unit; reproduction_energy and eat_gain follow optimal_energy
// unless given explicitly), and validates. Throws ConfigError listing every
// violation at once.
RunConfig build_config(const ConfigValues& file_values, const ConfigValues& overrides);

// Range and consistency checks on an already-built config; empty when valid.
std::vector<std::string> validate_config(const RunConfig& config);

// Canonical key order used by config echoes in snapshots and manifests.
// include_output_dir distinguishes the manifest echo (routing included) from
// the snapshot echo (simulation state only).
ConfigValues config_echo(const RunConfig& config, bool include_output_dir);

std::string_view motivation_mode_name(MotivationMode mode);

}  // namespace alife
