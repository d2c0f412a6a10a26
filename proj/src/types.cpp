#include "hlplan/types.hpp"

#include <cctype>
#include <stdexcept>

namespace hlplan {

const std::array<HighLevelAction, kHighLevelActionCount>& all_actions() {
  static const std::array<HighLevelAction, kHighLevelActionCount> actions = {
      HighLevelAction::Navigation,      HighLevelAction::PickupObject,
      HighLevelAction::PutObject,       HighLevelAction::OpenObject,
      HighLevelAction::CloseObject,     HighLevelAction::ToggleOnObject,
      HighLevelAction::ToggleOffObject, HighLevelAction::SliceObject,
  };
  return actions;
}

std::string_view action_name(HighLevelAction a) {
  switch (a) {
    case HighLevelAction::Navigation: return "Navigation";
    case HighLevelAction::PickupObject: return "PickupObject";
    case HighLevelAction::PutObject: return "PutObject";
    case HighLevelAction::OpenObject: return "OpenObject";
    case HighLevelAction::CloseObject: return "CloseObject";
    case HighLevelAction::ToggleOnObject: return "ToggleOnObject";
    case HighLevelAction::ToggleOffObject: return "ToggleOffObject";
    case HighLevelAction::SliceObject: return "SliceObject";
  }
  return "?";
}

std::optional<HighLevelAction> parse_action(std::string_view token) {
  const std::string lower = to_lower(trim(token));
  for (HighLevelAction a : all_actions()) {
    if (lower == to_lower(action_name(a))) return a;
  }
  return std::nullopt;
}

const std::array<TaskType, kTaskTypeCount>& all_task_types() {
  static const std::array<TaskType, kTaskTypeCount> types = {
      TaskType::PickAndPlace, TaskType::StackAndPlace, TaskType::PlaceTwo,
      TaskType::Examine,      TaskType::HeatAndPlace,  TaskType::CoolAndPlace,
      TaskType::CleanAndPlace,
  };
  return types;
}

std::string_view task_type_name(TaskType t) {
  switch (t) {
    case TaskType::PickAndPlace: return "PickAndPlace";
    case TaskType::StackAndPlace: return "StackAndPlace";
    case TaskType::PlaceTwo: return "PlaceTwo";
    case TaskType::Examine: return "Examine";
    case TaskType::HeatAndPlace: return "HeatAndPlace";
    case TaskType::CoolAndPlace: return "CoolAndPlace";
    case TaskType::CleanAndPlace: return "CleanAndPlace";
  }
  return "?";
}

std::optional<TaskType> parse_task_type(std::string_view token) {
  const std::string lower = to_lower(trim(token));
  for (TaskType t : all_task_types()) {
    if (lower == to_lower(task_type_name(t))) return t;
  }
  return std::nullopt;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

void ObjectVocabulary::add(std::string canonical, ObjectTraits traits) {
  const std::string lower = to_lower(canonical);
  by_lower_[lower] = canonical;
  canonical_[std::move(canonical)] = traits;
}

std::optional<ObjectClass> ObjectVocabulary::resolve(std::string_view token) const {
  const std::string key = to_lower(trim(token));
  auto it = by_lower_.find(key);
  if (it == by_lower_.end()) return std::nullopt;
  return ObjectClass(it->second);
}

bool ObjectVocabulary::contains(const ObjectClass& c) const {
  return canonical_.count(c.name()) > 0;
}

const ObjectTraits& ObjectVocabulary::traits(const ObjectClass& c) const {
  auto it = canonical_.find(c.name());
  if (it == canonical_.end()) {
    throw std::out_of_range("unknown object class: " + c.name());
  }
  return it->second;
}

std::vector<ObjectClass> ObjectVocabulary::classes() const {
  std::vector<ObjectClass> out;
  out.reserve(canonical_.size());
  for (const auto& [name, traits] : canonical_) out.emplace_back(name);
  return out;
}

ObjectVocabulary household_vocabulary() {
  ObjectVocabulary v;
  const ObjectTraits food{.pickupable = true, .sliceable = true};
  const ObjectTraits item{.pickupable = true};
  const ObjectTraits open_recep{.receptacle = true};
  const ObjectTraits closed_recep{.openable = true, .receptacle = true};
  const ObjectTraits device{.toggleable = true};

  v.add("Apple", food);
  v.add("Bread", food);
  v.add("Lettuce", food);
  v.add("Potato", food);
  v.add("Tomato", food);

  v.add("Book", item);
  v.add("CellPhone", item);
  v.add("CreditCard", item);
  v.add("Cup", item);
  v.add("Egg", item);
  v.add("KeyChain", item);
  v.add("Knife", item);
  v.add("Mug", item);
  v.add("Pencil", item);
  v.add("Watch", item);

  v.add("Plate", ObjectTraits{.pickupable = true, .receptacle = true});

  v.add("CounterTop", open_recep);
  v.add("Desk", open_recep);
  v.add("DiningTable", open_recep);
  v.add("GarbageCan", open_recep);
  v.add("RecycleBin", open_recep);
  v.add("Shelf", open_recep);
  v.add("SideTable", open_recep);
  v.add("SinkBasin", open_recep);

  v.add("Box", closed_recep);
  v.add("Cabinet", closed_recep);
  v.add("Drawer", closed_recep);
  v.add("Fridge", closed_recep);
  v.add("Microwave", ObjectTraits{.openable = true, .toggleable = true, .receptacle = true});

  v.add("DeskLamp", device);
  v.add("Faucet", device);
  v.add("FloorLamp", device);
  v.add("Lamp", device);
  return v;
}

bool is_lamp_class(const ObjectClass& c) {
  const std::string& n = c.name();
  if (n == "Lamp") return true;
  static const std::string suffix = "Lamp";
  return n.size() > suffix.size() &&
         n.compare(n.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string steps_text(const Instruction& instr) {
  if (!instr.steps || instr.steps->empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < instr.steps->size(); ++i) {
    if (i > 0) out += ". ";
    out += (*instr.steps)[i];
  }
  return out;
}

std::string instruction_text(const Instruction& instr, bool use_steps) {
  if (!use_steps) return instr.goal;
  const std::string steps = steps_text(instr);
  if (steps.empty()) return instr.goal;
  return instr.goal + " " + steps;
}

}  // namespace hlplan
