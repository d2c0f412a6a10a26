#include "hlplan/controller.hpp"

#include <ostream>

#include "hlplan/parse.hpp"

namespace hlplan {
namespace {

std::optional<PrimitiveAction::Kind> interaction_primitive(HighLevelAction a) {
  switch (a) {
    case HighLevelAction::PickupObject: return PrimitiveAction::Kind::Pickup;
    case HighLevelAction::PutObject: return PrimitiveAction::Kind::Put;
    case HighLevelAction::OpenObject: return PrimitiveAction::Kind::Open;
    case HighLevelAction::CloseObject: return PrimitiveAction::Kind::Close;
    case HighLevelAction::ToggleOnObject: return PrimitiveAction::Kind::ToggleOn;
    case HighLevelAction::ToggleOffObject: return PrimitiveAction::Kind::ToggleOff;
    case HighLevelAction::SliceObject: return PrimitiveAction::Kind::Slice;
    case HighLevelAction::Navigation: return std::nullopt;
  }
  return std::nullopt;
}

nlohmann::json plan_to_json(const HighLevelPlan& plan) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Subgoal& g : plan) {
    arr.push_back({{"action", std::string(action_name(g.action))},
                   {"object", g.object.name()}});
  }
  return arr;
}

}  // namespace

std::string_view end_reason_name(EndReason r) {
  switch (r) {
    case EndReason::Completed: return "Completed";
    case EndReason::PlanExhausted: return "PlanExhausted";
    case EndReason::MaxSteps: return "MaxSteps";
    case EndReason::MaxFailures: return "MaxFailures";
    case EndReason::MaxReplans: return "MaxReplans";
    case EndReason::PlannerFailure: return "PlannerFailure";
  }
  return "?";
}

std::string_view trace_event_kind_name(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::Plan: return "plan";
    case TraceEvent::Kind::Action: return "action";
    case TraceEvent::Kind::SubgoalDone: return "subgoal_done";
    case TraceEvent::Kind::SubgoalFailed: return "subgoal_failed";
    case TraceEvent::Kind::Replan: return "replan";
    case TraceEvent::Kind::Observe: return "observe";
  }
  return "?";
}

nlohmann::json trace_event_to_json(const TraceEvent& event) {
  nlohmann::json j;
  j["type"] = std::string(trace_event_kind_name(event.kind));
  j["t"] = event.t;
  if (event.subgoal_index >= 0) j["k"] = event.subgoal_index;
  if (event.action) j["action"] = primitive_to_json(*event.action);
  if (event.kind == TraceEvent::Kind::Action) j["success"] = event.success;
  if (!event.detail.empty()) j["detail"] = event.detail;
  if (event.kind == TraceEvent::Kind::Plan || event.kind == TraceEvent::Kind::Replan) {
    j["plan"] = plan_to_json(event.plan);
  }
  if (event.subgoal) {
    j["subgoal"] = {{"action", std::string(action_name(event.subgoal->action))},
                    {"object", event.subgoal->object.name()}};
  }
  if (!event.new_classes.empty()) j["new_objects"] = event.new_classes;
  return j;
}

nlohmann::json trace_summary_to_json(const EpisodeTrace& trace) {
  nlohmann::json j;
  j["type"] = "summary";
  j["schema"] = 1;
  j["task_id"] = trace.task_id;
  j["task_type"] = std::string(task_type_name(trace.task_type));
  j["success"] = trace.success;
  j["gc_satisfied"] = trace.gc_satisfied;
  j["gc_total"] = trace.gc_total;
  j["executed_hlp"] = plan_to_json(trace.executed_hlp);
  j["full_predicted_hlp"] = plan_to_json(trace.full_predicted_hlp);
  j["end_reason"] = std::string(end_reason_name(trace.end_reason));
  j["steps"] = trace.steps;
  j["replans"] = trace.replans;
  j["failures"] = trace.failures;
  if (trace.planner_error) j["planner_error"] = *trace.planner_error;
  return j;
}

void write_trace(std::ostream& out, const EpisodeTrace& trace) {
  for (const TraceEvent& event : trace.events) {
    out << trace_event_to_json(event).dump() << '\n';
  }
  out << trace_summary_to_json(trace).dump() << '\n';
}

EpisodeTrace run_episode(const TaskInstance& task, const Scene& scene, Planner& planner,
                         LowLevelPlanner& lowlevel, const EpisodeConfig& cfg) {
  EpisodeTrace trace;
  trace.task_id = task.id;
  trace.task_type = task.task_type;

  WorldState world(scene, cfg.seed);
  const DetectionNoise noise{cfg.detection_noise};

  PlannerState pstate;
  pstate.instruction = task.instruction;
  pstate.episode_id = task.id;

  int steps = 0;
  int failures = 0;
  int replans = 0;
  int since_progress = 0;

  HighLevelPlan current;
  HighLevelPlan full_predicted;
  std::size_t k = 0;

  bool ended = false;
  EndReason end = EndReason::Completed;
  auto finish = [&](EndReason r) {
    end = r;
    ended = true;
  };

  auto agent_view = [&]() {
    AgentView view;
    view.pose = world.agent;
    view.inventory_id = world.inventory;
    if (world.inventory) {
      if (const ObjectInstance* held = world.find(*world.inventory)) {
        view.inventory_class = held->object_class;
      }
    }
    return view;
  };

  Observation obs;
  auto refresh_observation = [&]() {
    obs = observe(world, cfg.observation_radius, noise);
    std::vector<std::string> fresh;
    for (const VisibleObject& v : obs.objects) {
      if (pstate.observed.insert(v.object_class).second) {
        fresh.push_back(v.object_class.name());
      }
    }
    if (!fresh.empty()) {
      TraceEvent event;
      event.kind = TraceEvent::Kind::Observe;
      event.t = steps;
      event.new_classes = std::move(fresh);
      trace.events.push_back(std::move(event));
    }
  };

  auto plan_once = [&](bool initial, std::string_view reason) -> bool {
    pstate.t = steps;
    auto result = planner.plan(pstate);
    if (!result.ok()) {
      trace.planner_error = result.error().message;
      const bool empty_plan = result.error().parse_error &&
                              result.error().parse_error->kind == ParseError::Kind::EmptyPlan;
      finish(empty_plan ? EndReason::PlanExhausted : EndReason::PlannerFailure);
      return false;
    }
    current = std::move(result.value());
    k = 0;
    since_progress = 0;
    full_predicted = pstate.completed;
    full_predicted.insert(full_predicted.end(), current.begin(), current.end());
    TraceEvent event;
    event.kind = initial ? TraceEvent::Kind::Plan : TraceEvent::Kind::Replan;
    event.t = steps;
    event.detail = std::string(reason);
    event.plan = current;
    trace.events.push_back(std::move(event));
    return true;
  };

  auto request_replan = [&](std::string_view reason) -> bool {
    if (!cfg.dynamic) return true;  // static baseline never re-plans
    if (replans + 1 > cfg.max_replans) {
      finish(EndReason::MaxReplans);
      return false;
    }
    ++replans;
    return plan_once(false, reason);
  };

  refresh_observation();
  if (plan_once(true, "")) {
    while (!ended && k < current.size()) {
      if (steps >= cfg.max_steps) {
        finish(EndReason::MaxSteps);
        break;
      }
      const Subgoal& subgoal = current[k];
      const LowLevelDecision decision = lowlevel.next_action(subgoal, obs, agent_view());

      if (decision.kind == LowLevelDecision::Kind::Done) {
        pstate.completed.push_back(subgoal);
        TraceEvent event;
        event.kind = TraceEvent::Kind::SubgoalDone;
        event.t = steps;
        event.subgoal_index = static_cast<int>(k);
        event.subgoal = subgoal;
        trace.events.push_back(std::move(event));
        ++k;
        since_progress = 0;
        continue;
      }

      if (decision.kind == LowLevelDecision::Kind::Failed) {
        TraceEvent event;
        event.kind = TraceEvent::Kind::SubgoalFailed;
        event.t = steps;
        event.subgoal_index = static_cast<int>(k);
        event.subgoal = subgoal;
        event.detail = decision.reason;
        trace.events.push_back(std::move(event));
        ++failures;
        if (failures >= cfg.max_action_failures) {
          finish(EndReason::MaxFailures);
          break;
        }
        if (!request_replan("ActionFailure")) break;
        continue;
      }

      const ActionOutcome outcome = step(world, decision.action);
      ++steps;
      {
        TraceEvent event;
        event.kind = TraceEvent::Kind::Action;
        event.t = steps;
        event.subgoal_index = static_cast<int>(k);
        event.action = decision.action;
        event.success = outcome.success;
        if (!outcome.success) event.detail = std::string(fail_reason_name(outcome.reason));
        trace.events.push_back(std::move(event));
      }
      refresh_observation();

      if (!outcome.success) {
        ++failures;
        if (failures >= cfg.max_action_failures) {
          finish(EndReason::MaxFailures);
          break;
        }
        if (!request_replan("ActionFailure")) break;
        continue;
      }

      const auto expected = interaction_primitive(subgoal.action);
      if (expected && decision.action.kind == *expected) {
        pstate.completed.push_back(subgoal);
        TraceEvent event;
        event.kind = TraceEvent::Kind::SubgoalDone;
        event.t = steps;
        event.subgoal_index = static_cast<int>(k);
        event.subgoal = subgoal;
        trace.events.push_back(std::move(event));
        ++k;
        since_progress = 0;
        continue;
      }

      ++since_progress;
      if (cfg.dynamic && since_progress >= cfg.replan_interval) {
        if (!request_replan("Interval")) break;
        continue;
      }
    }
    if (!ended) finish(EndReason::Completed);
  }

  const GoalCheck gc = check_goal(world, task.goal_conditions);
  trace.success = gc.success;
  trace.gc_satisfied = gc.satisfied;
  trace.gc_total = gc.total;
  trace.executed_hlp = pstate.completed;
  trace.full_predicted_hlp = full_predicted;
  trace.end_reason = end;
  trace.steps = steps;
  trace.replans = replans;
  trace.failures = failures;
  return trace;
}

}  // namespace hlplan
