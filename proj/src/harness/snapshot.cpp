#include "harness/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "harness/config_io.hpp"
#include "harness/text_format.hpp"

namespace alife {

namespace {

constexpr std::string_view kMagic = "alife_snapshot";
constexpr int kVersion = 1;

[[noreturn]] void corrupt(const std::string& detail) {
  throw IoError("corrupt snapshot: " + detail);
}

// Line reader that treats premature EOF as corruption.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(std::string_view what) {
    std::string line;
    if (!std::getline(in_, line)) corrupt("unexpected end of file, expected " + std::string(what));
    ++line_no_;
    return line;
  }
  bool at_eof() {
    return in_.peek() == std::char_traits<char>::eof();
  }
  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

std::string snapshot_text(const RunConfig& config, const World& world,
                          const Rng& rng, uint64_t iteration) {
  std::ostringstream os;
  os << kMagic << ' ' << kVersion << '\n';
  for (const auto& [key, value] : config_echo(config, /*include_output_dir=*/false))
    os << "config " << key << ' ' << value << '\n';
  os << "iteration " << iteration << '\n';
  os << "rng " << rng.serialize() << '\n';
  os << "agents " << world.population() << '\n';
  for (size_t id = 0; id < world.population(); ++id) {
    const Agent& a = world.agent(id);
    os << "agent " << id << ' ' << a.position << ' ' << format_double(a.energy);
    for (double w : a.genome.weights) os << ' ' << format_double(w);
    os << '\n';
  }
  os << "grass " << world.grass_cell_count() << '\n';
  for (int32_t c = 0; c < world.n_cells(); ++c) {
    if (world.has_grass(c))
      os << "cell " << c << ' ' << world.grass_remaining(c) << '\n';
  }
  os << "end\n";
  return os.str();
}

void save_snapshot(const Simulation& sim, const std::filesystem::path& path) {
  const std::string text =
      snapshot_text(sim.config(), sim.world(), sim.rng(), sim.iteration());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open snapshot for writing: " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write error on snapshot: " + path.string());
}

SnapshotData load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot: " + path.string());
  LineReader reader(in);

  {
    const auto header = split_tokens(reader.next("header"));
    if (header.size() != 2 || header[0] != kMagic)
      corrupt("missing '" + std::string(kMagic) + "' header");
    const auto version = parse_int(header[1]);
    if (!version || *version != kVersion)
      corrupt("unsupported snapshot version '" + header[1] + "'");
  }

  // Config block: every line until 'iteration'. The stored values are fully
  // resolved, so rebuilding through the normal validator reproduces the
  // original config exactly.
  ConfigValues values;
  std::string line = reader.next("config or iteration");
  while (true) {
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0] == "config") {
      if (tokens.size() != 3) corrupt("config line " + std::to_string(reader.line_no()) +
                                      " is not 'config <key> <value>'");
      values.emplace_back(tokens[1], tokens[2]);
      line = reader.next("config or iteration");
      continue;
    }
    break;
  }
  RunConfig config;
  try {
    config = build_config(values, {});
  } catch (const ConfigError& e) {
    corrupt(std::string("bad config block: ") + e.what());
  }

  uint64_t iteration = 0;
  {
    const auto tokens = split_tokens(line);
    if (tokens.size() != 2 || tokens[0] != "iteration") corrupt("expected 'iteration <t>'");
    const auto t = parse_uint(tokens[1]);
    if (!t) corrupt("bad iteration count '" + tokens[1] + "'");
    iteration = *t;
  }

  Rng rng;
  {
    const std::string rng_line = reader.next("rng state");
    if (rng_line.rfind("rng ", 0) != 0) corrupt("expected 'rng <state>'");
    try {
      rng = Rng::deserialize(rng_line.substr(4));
    } catch (const std::invalid_argument&) {
      corrupt("malformed rng state");
    }
  }

  World world(config.world, config.physiology);
  {
    const auto tokens = split_tokens(reader.next("agent count"));
    if (tokens.size() != 2 || tokens[0] != "agents") corrupt("expected 'agents <count>'");
    const auto count = parse_uint(tokens[1]);
    if (!count) corrupt("bad agent count '" + tokens[1] + "'");
    for (uint64_t i = 0; i < *count; ++i) {
      const std::string tag = "agent record " + std::to_string(i);
      const auto fields = split_tokens(reader.next(tag));
      if (fields.size() != size_t(4 + kGenomeLength) || fields[0] != "agent")
        corrupt(tag + ": expected 'agent <index> <cell> <energy> <" +
                std::to_string(kGenomeLength) + " weights>'");
      const auto index = parse_uint(fields[1]);
      if (!index || *index != i) corrupt(tag + ": index out of order");
      const auto cell = parse_int(fields[2]);
      if (!cell) corrupt(tag + ": bad cell '" + fields[2] + "'");
      const auto energy = parse_double(fields[3]);
      if (!energy || !std::isfinite(*energy) || *energy <= 0.0)
        corrupt(tag + ": energy must be a finite positive number");
      Genome genome;
      for (int g = 0; g < kGenomeLength; ++g) {
        const auto w = parse_double(fields[4 + g]);
        if (!w || !std::isfinite(*w))
          corrupt(tag + ": weight " + std::to_string(g) + " is not finite");
        genome.weights[g] = *w;
      }
      try {
        world.add_agent(static_cast<int32_t>(*cell), *energy, genome);
      } catch (const std::invalid_argument& e) {
        corrupt(tag + ": " + e.what());
      }
    }
  }
  {
    const auto tokens = split_tokens(reader.next("grass count"));
    if (tokens.size() != 2 || tokens[0] != "grass") corrupt("expected 'grass <count>'");
    const auto count = parse_uint(tokens[1]);
    if (!count) corrupt("bad grass count '" + tokens[1] + "'");
    for (uint64_t i = 0; i < *count; ++i) {
      const std::string tag = "grass record " + std::to_string(i);
      const auto fields = split_tokens(reader.next(tag));
      if (fields.size() != 3 || fields[0] != "cell")
        corrupt(tag + ": expected 'cell <index> <remaining>'");
      const auto cell = parse_int(fields[1]);
      const auto remaining = parse_int(fields[2]);
      if (!cell || *cell < 0 || *cell >= config.world.n_cells)
        corrupt(tag + ": cell out of range");
      if (!remaining || *remaining < 1 || *remaining > config.physiology.grass_lifetime)
        corrupt(tag + ": remaining lifetime out of range");
      if (world.has_grass(static_cast<int32_t>(*cell)))
        corrupt(tag + ": duplicate grass cell " + std::to_string(*cell));
      world.set_grass(static_cast<int32_t>(*cell), static_cast<int32_t>(*remaining));
    }
  }
  if (split_tokens(reader.next("'end'")) != std::vector<std::string>{"end"})
    corrupt("missing 'end' terminator");

  return SnapshotData{std::move(config), iteration, rng, std::move(world)};
}

Simulation simulation_from_snapshot(SnapshotData data) {
  return Simulation(data.config, std::move(data.world), data.rng, data.iteration);
}

}  // namespace alife
