#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "hlplan/backend.hpp"
#include "hlplan/parse.hpp"
#include "hlplan/prompt.hpp"
#include "hlplan/retriever.hpp"

namespace hlplan {

struct PlannerError {
  enum class Kind { Parse, Backend };
  Kind kind{};
  std::string message;
  std::string raw_completion;  // for logging; empty on backend faults
  std::optional<ParseError> parse_error;
};

// Per-episode planner state. The completed prefix only grows by append and
// the observed set grows monotonically within an episode.
struct PlannerState {
  Instruction instruction;
  HighLevelPlan completed;
  std::set<ObjectClass> observed;
  std::string episode_id;
  int t = 0;
  int plan_calls = 0;
  int replan_count = 0;
};

// One structured record per completion call, appended to the plan log.
struct PlanCallRecord {
  std::string episode_id;
  int t = 0;
  std::string prompt_hash;
  std::string raw_completion;
  HighLevelPlan parsed_plan;
  double latency_ms = 0.0;
};

using PlanLogSink = std::function<void(const PlanCallRecord&)>;

// Orchestrates retriever -> prompt -> backend -> parser. plan() returns the
// continuation of state.completed; the episode's full HLP is the completed
// prefix plus the returned plan.
class Planner {
 public:
  Planner(std::shared_ptr<LLMBackend> backend, std::shared_ptr<ExampleRetriever> retriever,
          PromptConfig config, ObjectVocabulary vocab);

  Result<HighLevelPlan, PlannerError> plan(PlannerState& state);

  // Single from-scratch plan with no grounding line; the static baseline
  // and the offline HLP-accuracy evaluator.
  Result<HighLevelPlan, PlannerError> static_plan(const Instruction& instruction);

  void set_log_sink(PlanLogSink sink) { log_sink_ = std::move(sink); }
  const PromptConfig& config() const { return config_; }
  LLMBackend& backend() { return *backend_; }

 private:
  Result<HighLevelPlan, PlannerError> run_completion(const PlanningContext& ctx,
                                                     const PromptConfig& cfg,
                                                     PlannerState* state);

  std::shared_ptr<LLMBackend> backend_;
  std::shared_ptr<ExampleRetriever> retriever_;
  PromptConfig config_;
  ObjectVocabulary vocab_;
  PlanLogSink log_sink_;
};

}  // namespace hlplan
