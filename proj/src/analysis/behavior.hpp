#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "core/world.hpp"

namespace alife {

// Exhaustive behavioral fingerprint of one controller: the action it picks
// for every combination of the 32 binary sensor patterns (food left/here/
// right, agent left/right; bit k of the pattern is sensor k) and 4 motivation
// corners (M_E, M_R each 0 or 1). The probe input mirrors live sensing: the
// neighbor mating-motivation components carry the probed M_R value when the
// matching agent flag is set, and zero otherwise.
struct BehaviorTable {
  static constexpr int kPatternCount = 32;
  static constexpr int kCornerCount = 4;
  static constexpr int kRowCount = kPatternCount * kCornerCount;

  std::array<Action, kRowCount> actions{};

  static constexpr int corner_index(bool hungry, bool mateable) {
    return (hungry ? 1 : 0) + (mateable ? 2 : 0);
  }
  Action at(int pattern, bool hungry, bool mateable) const {
    return actions[pattern * kCornerCount + corner_index(hungry, mateable)];
  }
};

// The input vector fed to the controller for one probe row.
SensoryVector probe_input(int pattern, double motivation_food, double motivation_mate);

BehaviorTable probe_agent(const Genome& genome);

enum class SchemeLabel : int { kReflexOnly = 0, kMotivationGated = 1, kOther = 2 };
inline constexpr int kSchemeLabelCount = 3;

constexpr const char* scheme_label_name(SchemeLabel label) {
  switch (label) {
    case SchemeLabel::kReflexOnly: return "reflex_only";
    case SchemeLabel::kMotivationGated: return "motivation_gated";
    case SchemeLabel::kOther: return "other";
  }
  return "?";
}

// Rule flags evaluated on the two physically reachable motivation corners:
// hungry = (M_E 1, M_R 0) and sated = (M_E 0, M_R 1).
//   rule1: on the seven agent-free patterns with food in view, the hungry
//          corner eats food underfoot and walks toward visible food.
//   rule2: on the two food-free single-neighbor patterns, the sated corner
//          mates toward the neighbor.
//   rule3: with nothing in view, both corners rest.
// mating_suppressed_when_hungry: rule2 holds and the same neighbor patterns
// produce no mating action at the hungry corner.
//
// motivation_gated = rule1 && rule2 && rule3 && suppression.
// reflex_only = the three rules hold on all four corners and the classified
// rows pick the same action on every corner (behavior ignores motivations).
// Everything else is other.
struct SchemeClassification {
  SchemeLabel label = SchemeLabel::kOther;
  bool rule1_food_seeking = false;
  bool rule2_mating_on_neighbor = false;
  bool rule3_rest_on_empty = false;
  bool mating_suppressed_when_hungry = false;
};

SchemeClassification classify_scheme(const BehaviorTable& table);

struct PopulationClassification {
  uint64_t total = 0;
  std::array<uint64_t, kSchemeLabelCount> label_counts{};
  uint64_t mating_suppressed_count = 0;
  SchemeLabel majority_label = SchemeLabel::kOther;  // plurality; tie -> lower enum

  double fraction(SchemeLabel label) const {
    return total == 0 ? 0.0
                      : static_cast<double>(label_counts[static_cast<int>(label)]) /
                            static_cast<double>(total);
  }
  double mating_suppressed_fraction() const {
    return total == 0 ? 0.0
                      : static_cast<double>(mating_suppressed_count) /
                            static_cast<double>(total);
  }
};

// Probes and classifies every agent. Empty input yields nullopt.
std::optional<PopulationClassification> population_classification(
    std::span<const Agent> population);

}  // namespace alife
