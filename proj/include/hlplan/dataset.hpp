#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlplan/task.hpp"

namespace hlplan {

class MalformedRecord : public std::runtime_error {
 public:
  MalformedRecord(int line_no, const std::string& cause)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + cause),
        line_no(line_no),
        cause(cause) {}
  int line_no;
  std::string cause;
};

nlohmann::json task_to_json(const TaskInstance& task);
TaskInstance task_from_json(const nlohmann::json& j, const ObjectVocabulary& vocab);

// JSONL dataset, one record per line:
//   {"id", "task_type", "goal", "steps", "gold_hlp", "scene_id", "goal_conditions"}
// Record order is preserved. Throws MalformedRecord on the first invalid
// line (unknown task type/action/object, empty goal or plan, duplicate id).
std::vector<TaskInstance> load_dataset(const std::filesystem::path& path,
                                       const ObjectVocabulary& vocab);

void save_dataset(const std::filesystem::path& path, std::span<const TaskInstance> tasks);

}  // namespace hlplan
