#include "hlplan/goal.hpp"

#include <stdexcept>

namespace hlplan {

std::string_view goal_predicate_name(GoalPredicate p) {
  switch (p) {
    case GoalPredicate::ObjectInReceptacle: return "ObjectInReceptacle";
    case GoalPredicate::ObjectSliced: return "ObjectSliced";
    case GoalPredicate::ObjectHeated: return "ObjectHeated";
    case GoalPredicate::ObjectCooled: return "ObjectCooled";
    case GoalPredicate::ObjectCleaned: return "ObjectCleaned";
    case GoalPredicate::ObjectToggledOn: return "ObjectToggledOn";
    case GoalPredicate::TwoObjectsInReceptacle: return "TwoObjectsInReceptacle";
    case GoalPredicate::ObjectExaminedUnderLamp: return "ObjectExaminedUnderLamp";
  }
  return "?";
}

std::optional<GoalPredicate> parse_goal_predicate(std::string_view token) {
  static const GoalPredicate all[] = {
      GoalPredicate::ObjectInReceptacle,     GoalPredicate::ObjectSliced,
      GoalPredicate::ObjectHeated,           GoalPredicate::ObjectCooled,
      GoalPredicate::ObjectCleaned,          GoalPredicate::ObjectToggledOn,
      GoalPredicate::TwoObjectsInReceptacle, GoalPredicate::ObjectExaminedUnderLamp,
  };
  const std::string key = to_lower(trim(token));
  for (GoalPredicate p : all) {
    if (key == to_lower(goal_predicate_name(p))) return p;
  }
  return std::nullopt;
}

bool predicate_needs_receptacle(GoalPredicate p) {
  return p == GoalPredicate::ObjectInReceptacle ||
         p == GoalPredicate::TwoObjectsInReceptacle;
}

nlohmann::json goal_condition_to_json(const GoalCondition& gc) {
  nlohmann::json j;
  j["predicate"] = std::string(goal_predicate_name(gc.predicate));
  j["object"] = gc.object.name();
  if (gc.receptacle) {
    j["receptacle"] = gc.receptacle->name();
  }
  return j;
}

GoalCondition goal_condition_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab) {
  if (!j.is_object()) throw std::runtime_error("goal condition must be an object");
  const auto predicate = parse_goal_predicate(j.at("predicate").get<std::string>());
  if (!predicate) {
    throw std::runtime_error("unknown goal predicate: " + j.at("predicate").get<std::string>());
  }
  const auto object = vocab.resolve(j.at("object").get<std::string>());
  if (!object) {
    throw std::runtime_error("unknown object class: " + j.at("object").get<std::string>());
  }
  GoalCondition gc{*predicate, *object, std::nullopt};
  if (j.contains("receptacle") && !j.at("receptacle").is_null()) {
    const auto recep = vocab.resolve(j.at("receptacle").get<std::string>());
    if (!recep) {
      throw std::runtime_error("unknown receptacle class: " +
                               j.at("receptacle").get<std::string>());
    }
    gc.receptacle = *recep;
  }
  if (predicate_needs_receptacle(gc.predicate) && !gc.receptacle) {
    throw std::runtime_error(std::string(goal_predicate_name(gc.predicate)) +
                             " requires a receptacle");
  }
  return gc;
}

}  // namespace hlplan
