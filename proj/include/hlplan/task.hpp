#pragma once

#include <string>
#include <vector>

#include "hlplan/goal.hpp"
#include "hlplan/types.hpp"

namespace hlplan {

// One paired (instruction, gold HLP) example with the scene and goal test
// needed to run it as an episode.
struct TaskInstance {
  std::string id;
  TaskType task_type{};
  Instruction instruction;
  HighLevelPlan gold_hlp;
  std::string scene_id;
  std::vector<GoalCondition> goal_conditions;
};

}  // namespace hlplan
