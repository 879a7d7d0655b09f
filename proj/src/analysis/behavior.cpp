#include "analysis/behavior.hpp"

#include "core/network.hpp"

namespace alife {

namespace {

constexpr int kFoodLeftBit = 1 << kSenseFoodLeft;
constexpr int kFoodHereBit = 1 << kSenseFoodHere;
constexpr int kFoodRightBit = 1 << kSenseFoodRight;
constexpr int kAgentLeftBit = 1 << kSenseAgentLeft;
constexpr int kAgentRightBit = 1 << kSenseAgentRight;

bool rule1_holds(const BehaviorTable& table, bool hungry, bool mateable) {
  // Agent-free patterns with food somewhere in view.
  for (int pattern = 0; pattern < BehaviorTable::kPatternCount; ++pattern) {
    if (pattern & (kAgentLeftBit | kAgentRightBit)) continue;
    const bool left = pattern & kFoodLeftBit;
    const bool here = pattern & kFoodHereBit;
    const bool right = pattern & kFoodRightBit;
    if (!left && !here && !right) continue;
    const Action a = table.at(pattern, hungry, mateable);
    if (here) {
      if (a != Action::kEat) return false;
    } else if (left && right) {
      if (a != Action::kMoveLeft && a != Action::kMoveRight) return false;
    } else if (left) {
      if (a != Action::kMoveLeft) return false;
    } else {
      if (a != Action::kMoveRight) return false;
    }
  }
  return true;
}

bool rule2_holds(const BehaviorTable& table, bool hungry, bool mateable) {
  return table.at(kAgentLeftBit, hungry, mateable) == Action::kMateLeft &&
         table.at(kAgentRightBit, hungry, mateable) == Action::kMateRight;
}

bool rule3_holds(const BehaviorTable& table, bool hungry, bool mateable) {
  return table.at(0, hungry, mateable) == Action::kRest;
}

bool is_classified_pattern(int pattern) {
  const bool any_food = pattern & (kFoodLeftBit | kFoodHereBit | kFoodRightBit);
  const bool agent_left = pattern & kAgentLeftBit;
  const bool agent_right = pattern & kAgentRightBit;
  if (any_food && !agent_left && !agent_right) return true;          // rule1 rows
  if (!any_food && (agent_left != agent_right)) return true;         // rule2 rows
  return pattern == 0;                                               // rule3 row
}

}  // namespace

SensoryVector probe_input(int pattern, double motivation_food, double motivation_mate) {
  SensoryVector x{};
  x[kSenseFoodLeft] = (pattern & kFoodLeftBit) ? 1.0 : 0.0;
  x[kSenseFoodHere] = (pattern & kFoodHereBit) ? 1.0 : 0.0;
  x[kSenseFoodRight] = (pattern & kFoodRightBit) ? 1.0 : 0.0;
  x[kSenseAgentLeft] = (pattern & kAgentLeftBit) ? 1.0 : 0.0;
  x[kSenseAgentRight] = (pattern & kAgentRightBit) ? 1.0 : 0.0;
  x[kSenseNeighborMateLeft] = (pattern & kAgentLeftBit) ? motivation_mate : 0.0;
  x[kSenseNeighborMateRight] = (pattern & kAgentRightBit) ? motivation_mate : 0.0;
  x[kSenseMotivationFood] = motivation_food;
  x[kSenseMotivationMate] = motivation_mate;
  return x;
}

BehaviorTable probe_agent(const Genome& genome) {
  BehaviorTable table;
  for (int pattern = 0; pattern < BehaviorTable::kPatternCount; ++pattern) {
    for (int corner = 0; corner < BehaviorTable::kCornerCount; ++corner) {
      const double me = (corner & 1) ? 1.0 : 0.0;
      const double mr = (corner & 2) ? 1.0 : 0.0;
      table.actions[pattern * BehaviorTable::kCornerCount + corner] =
          select_action(forward(genome, probe_input(pattern, me, mr)));
    }
  }
  return table;
}

SchemeClassification classify_scheme(const BehaviorTable& table) {
  SchemeClassification result;
  // The two corners an agent can actually be in: hungry (low energy) and
  // sated (high energy).
  result.rule1_food_seeking = rule1_holds(table, /*hungry=*/true, /*mateable=*/false);
  result.rule2_mating_on_neighbor = rule2_holds(table, false, true);
  result.rule3_rest_on_empty = rule3_holds(table, true, false) && rule3_holds(table, false, true);

  const Action hungry_left = table.at(kAgentLeftBit, true, false);
  const Action hungry_right = table.at(kAgentRightBit, true, false);
  const bool no_mating_when_hungry =
      hungry_left != Action::kMateLeft && hungry_left != Action::kMateRight &&
      hungry_right != Action::kMateLeft && hungry_right != Action::kMateRight;
  result.mating_suppressed_when_hungry =
      result.rule2_mating_on_neighbor && no_mating_when_hungry;

  bool rules_everywhere = true;
  for (int corner = 0; corner < BehaviorTable::kCornerCount && rules_everywhere; ++corner) {
    const bool hungry = corner & 1;
    const bool mateable = corner & 2;
    rules_everywhere = rule1_holds(table, hungry, mateable) &&
                       rule2_holds(table, hungry, mateable) &&
                       rule3_holds(table, hungry, mateable);
  }
  bool corner_invariant = true;
  for (int pattern = 0; pattern < BehaviorTable::kPatternCount && corner_invariant; ++pattern) {
    if (!is_classified_pattern(pattern)) continue;
    const Action first = table.actions[pattern * BehaviorTable::kCornerCount];
    for (int corner = 1; corner < BehaviorTable::kCornerCount; ++corner) {
      if (table.actions[pattern * BehaviorTable::kCornerCount + corner] != first) {
        corner_invariant = false;
        break;
      }
    }
  }

  if (result.rule1_food_seeking && result.rule2_mating_on_neighbor &&
      result.rule3_rest_on_empty && result.mating_suppressed_when_hungry) {
    result.label = SchemeLabel::kMotivationGated;
  } else if (rules_everywhere && corner_invariant) {
    result.label = SchemeLabel::kReflexOnly;
  } else {
    result.label = SchemeLabel::kOther;
  }
  return result;
}

std::optional<PopulationClassification> population_classification(
    std::span<const Agent> population) {
  if (population.empty()) return std::nullopt;
  PopulationClassification result;
  result.total = population.size();
  for (const Agent& agent : population) {
    const SchemeClassification c = classify_scheme(probe_agent(agent.genome));
    ++result.label_counts[static_cast<int>(c.label)];
    if (c.mating_suppressed_when_hungry) ++result.mating_suppressed_count;
  }
  int best = 0;
  for (int label = 1; label < kSchemeLabelCount; ++label)
    if (result.label_counts[label] > result.label_counts[best]) best = label;
  result.majority_label = static_cast<SchemeLabel>(best);
  return result;
}

}  // namespace alife
