#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hlplan/lowlevel.hpp"
#include "hlplan/planner.hpp"
#include "hlplan/world.hpp"

namespace hlplan {

struct EpisodeConfig {
  int replan_interval = 20;  // n: steps without subgoal completion
  int max_steps = 300;
  int max_action_failures = 10;
  int max_replans = 10;
  bool dynamic = true;  // false: single plan at t=0, triggers disabled
  std::uint64_t seed = 0;
  int observation_radius = 3;
  double detection_noise = 0.0;
};

enum class EndReason {
  Completed,      // every subgoal done; goal test decides success
  PlanExhausted,  // the planner returned an empty continuation
  MaxSteps,
  MaxFailures,
  MaxReplans,
  PlannerFailure,
};

std::string_view end_reason_name(EndReason r);

struct TraceEvent {
  enum class Kind { Plan, Action, SubgoalDone, SubgoalFailed, Replan, Observe };
  Kind kind{};
  int t = 0;  // executed-step counter when the event was recorded
  int subgoal_index = -1;
  std::optional<PrimitiveAction> action;
  bool success = true;
  std::string detail;  // failure reason or re-plan trigger (ActionFailure | Interval)
  HighLevelPlan plan;  // Plan / Replan payload
  std::optional<Subgoal> subgoal;
  std::vector<std::string> new_classes;  // Observe delta
};

std::string_view trace_event_kind_name(TraceEvent::Kind kind);

struct EpisodeTrace {
  std::string task_id;
  TaskType task_type{};
  std::vector<TraceEvent> events;

  bool success = false;
  int gc_satisfied = 0;
  int gc_total = 0;
  HighLevelPlan executed_hlp;        // subgoals completed, in order
  HighLevelPlan full_predicted_hlp;  // completed prefix at last plan + that plan
  EndReason end_reason = EndReason::Completed;
  int steps = 0;
  int replans = 0;
  int failures = 0;
  std::optional<std::string> planner_error;
};

nlohmann::json trace_event_to_json(const TraceEvent& event);
nlohmann::json trace_summary_to_json(const EpisodeTrace& trace);
// JSONL: one event per line plus a final summary line; schema versioned.
void write_trace(std::ostream& out, const EpisodeTrace& trace);

// Grounded re-planning loop. Executes the current plan subgoal by subgoal;
// re-plans when the current subgoal fails (an action failure or a low-level
// give-up) or when `replan_interval` executed steps pass without completing
// a subgoal. The counter resets on subgoal completion and on re-plan. A
// trace is always returned, partial on faults.
EpisodeTrace run_episode(const TaskInstance& task, const Scene& scene, Planner& planner,
                         LowLevelPlanner& lowlevel, const EpisodeConfig& cfg);

}  // namespace hlplan
