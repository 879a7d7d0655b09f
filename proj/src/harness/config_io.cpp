#include "harness/config_io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "harness/text_format.hpp"

namespace alife {

namespace {

constexpr std::array<std::string_view, 23> kKnownKeys = {
    "n_cells",        "grass_probability",   "motivation",
    "base_energy_unit", "cost_rest",         "cost_eat",
    "cost_move",      "cost_jump",           "cost_mate",
    "child_transfer", "optimal_energy",      "reproduction_energy",
    "eat_gain",       "grass_lifetime",      "jump_distance",
    "mutation_intensity", "initial_population", "max_iterations",
    "seed",           "timeseries_interval", "weights_interval",
    "snapshot_interval", "output_dir",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void throw_all(const std::vector<std::string>& errors) {
  std::ostringstream os;
  os << "invalid configuration (" << errors.size()
     << (errors.size() == 1 ? " problem)" : " problems)");
  for (const std::string& e : errors) os << "\n  - " << e;
  throw ConfigError(os.str());
}

}  // namespace

bool is_known_config_key(std::string_view key) {
  for (std::string_view k : kKnownKeys)
    if (k == key) return true;
  return false;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  ConfigValues values;
  std::vector<std::string> errors;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view s = line;
    if (const size_t hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const size_t eq = s.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back("line " + std::to_string(line_no) + ": expected 'key = value'");
      continue;
    }
    const std::string_view key = trim(s.substr(0, eq));
    const std::string_view value = trim(s.substr(eq + 1));
    if (!is_known_config_key(key)) {
      errors.push_back("line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
      continue;
    }
    if (value.empty()) {
      errors.push_back("line " + std::to_string(line_no) + ": empty value for '" +
                       std::string(key) + "'");
      continue;
    }
    values.emplace_back(key, value);
  }
  if (in.bad()) throw IoError("read error on config file: " + path.string());
  if (!errors.empty()) throw_all(errors);
  return values;
}

RunConfig build_config(const ConfigValues& file_values, const ConfigValues& overrides) {
  std::map<std::string, std::string, std::less<>> merged;
  std::vector<std::string> errors;
  for (const auto& [key, value] : file_values) merged[key] = value;
  for (const auto& [key, value] : overrides) merged[key] = value;
  for (const auto& [key, value] : merged) {
    if (!is_known_config_key(key)) errors.push_back("unknown key '" + key + "'");
  }

  const auto lookup = [&](std::string_view key) -> const std::string* {
    const auto it = merged.find(key);
    return it == merged.end() ? nullptr : &it->second;
  };
  const auto get_double = [&](std::string_view key, double fallback) {
    const std::string* raw = lookup(key);
    if (!raw) return fallback;
    if (const auto v = parse_double(*raw)) return *v;
    errors.push_back(std::string(key) + ": not a number: '" + *raw + "'");
    return fallback;
  };
  const auto get_i32 = [&](std::string_view key, int32_t fallback) {
    const std::string* raw = lookup(key);
    if (!raw) return fallback;
    if (const auto v = parse_int(*raw); v && *v >= INT32_MIN && *v <= INT32_MAX)
      return static_cast<int32_t>(*v);
    errors.push_back(std::string(key) + ": not an integer: '" + *raw + "'");
    return fallback;
  };
  const auto get_u64 = [&](std::string_view key, uint64_t fallback) {
    const std::string* raw = lookup(key);
    if (!raw) return fallback;
    if (const auto v = parse_uint(*raw)) return *v;
    errors.push_back(std::string(key) + ": not a non-negative integer: '" + *raw + "'");
    return fallback;
  };

  RunConfig cfg;
  // Derived defaults: costs and energy constants scale with the base unit r,
  // and the two secondary energy constants follow optimal_energy, unless the
  // config pins them explicitly.
  const double r = get_double("base_energy_unit", 1.0);
  cfg.physiology.base_energy_unit = r;
  cfg.physiology.cost_rest = get_double("cost_rest", 1.0 * r);
  cfg.physiology.cost_eat = get_double("cost_eat", 2.0 * r);
  cfg.physiology.cost_move = get_double("cost_move", 4.0 * r);
  cfg.physiology.cost_jump = get_double("cost_jump", 20.0 * r);
  cfg.physiology.cost_mate = get_double("cost_mate", 20.0 * r);
  cfg.physiology.child_transfer_total = get_double("child_transfer", 1000.0 * r);
  cfg.physiology.optimal_energy = get_double("optimal_energy", 10000.0 * r);
  cfg.physiology.reproduction_energy =
      get_double("reproduction_energy", 0.5 * cfg.physiology.optimal_energy);
  cfg.physiology.eat_gain = get_double("eat_gain", 0.02 * cfg.physiology.optimal_energy);
  cfg.physiology.grass_lifetime = get_i32("grass_lifetime", 20);
  cfg.physiology.jump_distance = get_i32("jump_distance", 5);
  cfg.world.n_cells = get_i32("n_cells", 900);
  cfg.world.grass_probability = get_double("grass_probability", 0.005);
  if (const std::string* mode = lookup("motivation")) {
    if (*mode == "on") cfg.world.motivation_mode = MotivationMode::kEnabled;
    else if (*mode == "off") cfg.world.motivation_mode = MotivationMode::kSuppressed;
    else errors.push_back("motivation: expected 'on' or 'off', got '" + *mode + "'");
  }
  cfg.evolution.mutation_intensity = get_double("mutation_intensity", 0.05);
  cfg.evolution.initial_population = get_i32("initial_population", 200);
  cfg.max_iterations = get_u64("max_iterations", 50000);
  cfg.timeseries_interval = get_u64("timeseries_interval", 1);
  cfg.weights_interval = get_u64("weights_interval", 100);
  cfg.snapshot_interval = get_u64("snapshot_interval", 0);
  cfg.seed = get_u64("seed", 1);
  if (const std::string* out = lookup("output_dir")) cfg.output_directory = *out;

  for (const std::string& e : validate_config(cfg)) errors.push_back(e);
  if (!errors.empty()) throw_all(errors);
  return cfg;
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
  std::vector<std::string> errors;
  const auto require = [&](bool ok, const std::string& message) {
    if (!ok) errors.push_back(message);
  };
  const auto positive = [&](double v, std::string_view key) {
    require(std::isfinite(v) && v > 0,
            std::string(key) + " must be a positive number (got " + format_double(v) + ")");
  };

  require(cfg.world.n_cells >= 3, "n_cells must be >= 3 (got " +
                                      std::to_string(cfg.world.n_cells) + ")");
  require(std::isfinite(cfg.world.grass_probability) &&
              cfg.world.grass_probability >= 0.0 && cfg.world.grass_probability <= 1.0,
          "grass_probability must lie in [0, 1] (got " +
              format_double(cfg.world.grass_probability) + ")");
  positive(cfg.physiology.base_energy_unit, "base_energy_unit");
  positive(cfg.physiology.cost_rest, "cost_rest");
  positive(cfg.physiology.cost_eat, "cost_eat");
  positive(cfg.physiology.cost_move, "cost_move");
  positive(cfg.physiology.cost_jump, "cost_jump");
  positive(cfg.physiology.cost_mate, "cost_mate");
  require(std::isfinite(cfg.physiology.child_transfer_total) &&
              cfg.physiology.child_transfer_total >= 0.0,
          "child_transfer must be >= 0 (got " +
              format_double(cfg.physiology.child_transfer_total) + ")");
  positive(cfg.physiology.optimal_energy, "optimal_energy");
  positive(cfg.physiology.reproduction_energy, "reproduction_energy");
  if (cfg.physiology.reproduction_energy > 0 && cfg.physiology.optimal_energy > 0)
    require(cfg.physiology.reproduction_energy <= cfg.physiology.optimal_energy,
            "reproduction_energy must not exceed optimal_energy");
  positive(cfg.physiology.eat_gain, "eat_gain");
  require(cfg.physiology.grass_lifetime >= 1, "grass_lifetime must be >= 1 (got " +
                                                  std::to_string(cfg.physiology.grass_lifetime) + ")");
  require(cfg.physiology.jump_distance >= 1, "jump_distance must be >= 1 (got " +
                                                 std::to_string(cfg.physiology.jump_distance) + ")");
  require(std::isfinite(cfg.evolution.mutation_intensity) &&
              cfg.evolution.mutation_intensity >= 0.0,
          "mutation_intensity must be >= 0 (got " +
              format_double(cfg.evolution.mutation_intensity) + ")");
  require(cfg.evolution.initial_population >= 2,
          "initial_population must be >= 2 (got " +
              std::to_string(cfg.evolution.initial_population) + ")");
  if (cfg.world.n_cells >= 3)
    require(cfg.evolution.initial_population <= cfg.world.n_cells,
            "initial_population must not exceed n_cells (one agent per cell)");
  require(cfg.timeseries_interval >= 1, "timeseries_interval must be >= 1");
  require(cfg.weights_interval >= 1, "weights_interval must be >= 1");
  require(!cfg.output_directory.empty(), "output_dir must not be empty");
  return errors;
}

ConfigValues config_echo(const RunConfig& cfg, bool include_output_dir) {
  ConfigValues echo;
  const auto add = [&](std::string_view key, std::string value) {
    echo.emplace_back(std::string(key), std::move(value));
  };
  add("n_cells", std::to_string(cfg.world.n_cells));
  add("grass_probability", format_double(cfg.world.grass_probability));
  add("motivation", std::string(motivation_mode_name(cfg.world.motivation_mode)));
  add("base_energy_unit", format_double(cfg.physiology.base_energy_unit));
  add("cost_rest", format_double(cfg.physiology.cost_rest));
  add("cost_eat", format_double(cfg.physiology.cost_eat));
  add("cost_move", format_double(cfg.physiology.cost_move));
  add("cost_jump", format_double(cfg.physiology.cost_jump));
  add("cost_mate", format_double(cfg.physiology.cost_mate));
  add("child_transfer", format_double(cfg.physiology.child_transfer_total));
  add("optimal_energy", format_double(cfg.physiology.optimal_energy));
  add("reproduction_energy", format_double(cfg.physiology.reproduction_energy));
  add("eat_gain", format_double(cfg.physiology.eat_gain));
  add("grass_lifetime", std::to_string(cfg.physiology.grass_lifetime));
  add("jump_distance", std::to_string(cfg.physiology.jump_distance));
  add("mutation_intensity", format_double(cfg.evolution.mutation_intensity));
  add("initial_population", std::to_string(cfg.evolution.initial_population));
  add("max_iterations", std::to_string(cfg.max_iterations));
  add("seed", std::to_string(cfg.seed));
  add("timeseries_interval", std::to_string(cfg.timeseries_interval));
  add("weights_interval", std::to_string(cfg.weights_interval));
  add("snapshot_interval", std::to_string(cfg.snapshot_interval));
  if (include_output_dir) add("output_dir", cfg.output_directory);
  return echo;
}

std::string_view motivation_mode_name(MotivationMode mode) {
  return mode == MotivationMode::kEnabled ? "on" : "off";
}

}  // namespace alife
