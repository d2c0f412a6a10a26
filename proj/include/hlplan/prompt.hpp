#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hlplan/task.hpp"

namespace hlplan {

enum class PlanningMode {
  Static,   // single plan at t=0; bias over the full object vocabulary
  Dynamic,  // grounded re-planning; bias over observed objects
};

enum class ExampleOrder {
  NearestLast,   // most similar example adjacent to the test block
  NearestFirst,
};

struct PromptConfig {
  bool use_steps = false;
  std::size_t k = 9;
  ExampleOrder example_order = ExampleOrder::NearestLast;
  PlanningMode mode = PlanningMode::Dynamic;
  double logit_bias_value = 0.1;
  double temperature = 0.0;
  std::string stop_sequence = "\n";
  int max_tokens = 128;
};

// Planner-visible episode state injected into the prompt: the completed
// subgoal prefix and the objects observed so far.
struct PlanningContext {
  Instruction instruction;
  HighLevelPlan completed;
  std::vector<ObjectClass> observed_objects;  // sorted, deduplicated
};

// Canonical sorted/deduplicated form for PlanningContext.observed_objects.
std::vector<ObjectClass> sorted_object_set(std::vector<ObjectClass> objects);

using TokenizerRef = std::function<std::vector<std::string>(const std::string&)>;

struct PromptSpec {
  std::string text;
  std::map<std::string, double> logit_bias;
  double temperature = 0.0;
  std::string stop = "\n";
};

// Renders the full prompt: task introduction with the allowed-action list,
// one block per in-context example (goal, optional steps, empty completed
// list, gold plan), then the test block in the same shape ending exactly
// with "Next plan:". In dynamic mode the test block carries the observed
// object list; in static mode that line is omitted. Byte-deterministic.
PromptSpec build_prompt(const PlanningContext& ctx, std::span<const TaskInstance> examples,
                        const PromptConfig& cfg);

// Keys are the tokens of the eight action names plus, in dynamic mode, the
// observed objects, or, in static mode, the whole vocabulary; every value
// is cfg.logit_bias_value.
std::map<std::string, double> build_logit_bias(const PlanningContext& ctx,
                                               const PromptConfig& cfg,
                                               const TokenizerRef& tokenizer,
                                               const ObjectVocabulary& vocab);

}  // namespace hlplan
