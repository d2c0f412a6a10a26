#include "hlplan/dataset.hpp"

#include <fstream>
#include <set>

namespace hlplan {
namespace {

void require(bool cond, const std::string& cause) {
  if (!cond) throw std::runtime_error(cause);
}

bool single_line(const std::string& s) {
  return s.find('\n') == std::string::npos && s.find('\r') == std::string::npos;
}

}  // namespace

nlohmann::json task_to_json(const TaskInstance& task) {
  nlohmann::json j;
  j["id"] = task.id;
  j["task_type"] = std::string(task_type_name(task.task_type));
  j["goal"] = task.instruction.goal;
  if (task.instruction.steps) {
    j["steps"] = *task.instruction.steps;
  } else {
    j["steps"] = nullptr;
  }
  nlohmann::json plan = nlohmann::json::array();
  for (const Subgoal& g : task.gold_hlp) {
    plan.push_back({{"action", std::string(action_name(g.action))},
                    {"object", g.object.name()}});
  }
  j["gold_hlp"] = plan;
  j["scene_id"] = task.scene_id;
  nlohmann::json conditions = nlohmann::json::array();
  for (const GoalCondition& gc : task.goal_conditions) {
    conditions.push_back(goal_condition_to_json(gc));
  }
  j["goal_conditions"] = conditions;
  return j;
}

TaskInstance task_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab) {
  TaskInstance task;
  task.id = j.at("id").get<std::string>();
  require(!trim(task.id).empty(), "id must be non-empty");

  const std::string type_str = j.at("task_type").get<std::string>();
  const auto type = parse_task_type(type_str);
  require(type.has_value(), "UnknownTaskType: " + type_str);
  task.task_type = *type;

  task.instruction.goal = j.at("goal").get<std::string>();
  require(!trim(task.instruction.goal).empty(), "goal must be non-empty");
  require(single_line(task.instruction.goal), "goal must be a single line");

  if (j.contains("steps") && !j.at("steps").is_null()) {
    std::vector<std::string> steps = j.at("steps").get<std::vector<std::string>>();
    for (const std::string& s : steps) {
      require(single_line(s), "steps must be single lines");
    }
    task.instruction.steps = std::move(steps);
  }

  for (const nlohmann::json& sg : j.at("gold_hlp")) {
    const std::string action_str = sg.at("action").get<std::string>();
    const auto action = parse_action(action_str);
    require(action.has_value(), "unknown action: " + action_str);
    const std::string object_str = sg.at("object").get<std::string>();
    const auto object = vocab.resolve(object_str);
    require(object.has_value(), "unknown object: " + object_str);
    task.gold_hlp.push_back(Subgoal{*action, *object});
  }
  require(!task.gold_hlp.empty(), "gold_hlp must be non-empty");

  task.scene_id = j.at("scene_id").get<std::string>();
  require(!trim(task.scene_id).empty(), "scene_id must be non-empty");

  for (const nlohmann::json& gc : j.at("goal_conditions")) {
    task.goal_conditions.push_back(goal_condition_from_json(gc, vocab));
  }
  require(!task.goal_conditions.empty(), "goal_conditions must be non-empty");
  return task;
}

std::vector<TaskInstance> load_dataset(const std::filesystem::path& path,
                                       const ObjectVocabulary& vocab) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path.string());
  }
  std::vector<TaskInstance> tasks;
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      TaskInstance task = task_from_json(j, vocab);
      if (!seen_ids.insert(task.id).second) {
        throw std::runtime_error("duplicate id: " + task.id);
      }
      tasks.push_back(std::move(task));
    } catch (const MalformedRecord&) {
      throw;
    } catch (const std::exception& e) {
      throw MalformedRecord(line_no, e.what());
    }
  }
  return tasks;
}

void save_dataset(const std::filesystem::path& path, std::span<const TaskInstance> tasks) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write dataset file: " + path.string());
  }
  for (const TaskInstance& task : tasks) {
    out << task_to_json(task).dump() << '\n';
  }
}

}  // namespace hlplan
