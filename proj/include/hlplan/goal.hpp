#pragma once

#include <optional>
#include <string_view>

#include "json.hpp"

#include "hlplan/types.hpp"

namespace hlplan {

// Required world-state changes. A task succeeds iff all of its goal
// conditions hold when the episode ends.
enum class GoalPredicate {
  ObjectInReceptacle,
  ObjectSliced,
  ObjectHeated,
  ObjectCooled,
  ObjectCleaned,
  ObjectToggledOn,
  TwoObjectsInReceptacle,
  ObjectExaminedUnderLamp,
};

std::string_view goal_predicate_name(GoalPredicate p);
std::optional<GoalPredicate> parse_goal_predicate(std::string_view token);
bool predicate_needs_receptacle(GoalPredicate p);

struct GoalCondition {
  GoalPredicate predicate{};
  ObjectClass object;
  std::optional<ObjectClass> receptacle;
  auto operator<=>(const GoalCondition&) const = default;
};

nlohmann::json goal_condition_to_json(const GoalCondition& gc);
// Throws std::runtime_error on unknown predicates/classes or missing
// parameters for the predicate's arity.
GoalCondition goal_condition_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab);

}  // namespace hlplan
