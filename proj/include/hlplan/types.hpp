#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlplan {

// The eight high-level actions: one navigation action plus seven object
// interactions. A subgoal pairs one of these with an object class.
enum class HighLevelAction {
  Navigation,
  PickupObject,
  PutObject,
  OpenObject,
  CloseObject,
  ToggleOnObject,
  ToggleOffObject,
  SliceObject,
};

inline constexpr std::size_t kHighLevelActionCount = 8;

const std::array<HighLevelAction, kHighLevelActionCount>& all_actions();
std::string_view action_name(HighLevelAction a);
// Case-insensitive; only the eight canonical names parse.
std::optional<HighLevelAction> parse_action(std::string_view token);

enum class TaskType {
  PickAndPlace,
  StackAndPlace,
  PlaceTwo,
  Examine,
  HeatAndPlace,
  CoolAndPlace,
  CleanAndPlace,
};

inline constexpr std::size_t kTaskTypeCount = 7;

const std::array<TaskType, kTaskTypeCount>& all_task_types();
std::string_view task_type_name(TaskType t);
std::optional<TaskType> parse_task_type(std::string_view token);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Canonical CamelCase object class name, e.g. "GarbageCan".
class ObjectClass {
 public:
  ObjectClass() = default;
  explicit ObjectClass(std::string canonical) : name_(std::move(canonical)) {}
  const std::string& name() const { return name_; }
  bool empty() const { return name_.empty(); }
  auto operator<=>(const ObjectClass&) const = default;

 private:
  std::string name_;
};

struct ObjectTraits {
  bool pickupable = false;
  bool openable = false;
  bool toggleable = false;
  bool sliceable = false;
  bool receptacle = false;
};

// Registry of known object classes for one scene vocabulary. Canonical
// names are unique; lookup is case-insensitive and whitespace-trimmed.
class ObjectVocabulary {
 public:
  void add(std::string canonical, ObjectTraits traits = {});
  std::optional<ObjectClass> resolve(std::string_view token) const;
  bool contains(const ObjectClass& c) const;
  const ObjectTraits& traits(const ObjectClass& c) const;
  std::vector<ObjectClass> classes() const;  // sorted by canonical name
  std::size_t size() const { return canonical_.size(); }

 private:
  std::map<std::string, ObjectTraits> canonical_;
  std::map<std::string, std::string> by_lower_;
};

// Object classes used by the bundled scenes, datasets, and tests.
ObjectVocabulary household_vocabulary();

// True for DeskLamp, FloorLamp, Lamp: the classes that satisfy the
// examined-under-lamp goal predicate when toggled on.
bool is_lamp_class(const ObjectClass& c);

struct Subgoal {
  HighLevelAction action{};
  ObjectClass object;
  auto operator<=>(const Subgoal&) const = default;
};

// Ordered subgoal sequence. Empty only as the completed-so-far prefix at
// the start of an episode.
using HighLevelPlan = std::vector<Subgoal>;

struct Instruction {
  std::string goal;
  std::optional<std::vector<std::string>> steps;
  auto operator<=>(const Instruction&) const = default;
};

// Step-by-step instructions joined with ". ".
std::string steps_text(const Instruction& instr);
// Text used for retrieval embeddings: the goal, plus the joined steps when
// the run is configured to use them.
std::string instruction_text(const Instruction& instr, bool use_steps);

}  // namespace hlplan
