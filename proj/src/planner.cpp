#include "hlplan/planner.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "hlplan/rng.hpp"

namespace hlplan {
namespace {

std::string hash_hex(const std::string& text) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
  return out.str();
}

}  // namespace

Planner::Planner(std::shared_ptr<LLMBackend> backend,
                 std::shared_ptr<ExampleRetriever> retriever, PromptConfig config,
                 ObjectVocabulary vocab)
    : backend_(std::move(backend)),
      retriever_(std::move(retriever)),
      config_(std::move(config)),
      vocab_(std::move(vocab)) {}

Result<HighLevelPlan, PlannerError> Planner::run_completion(const PlanningContext& ctx,
                                                            const PromptConfig& cfg,
                                                            PlannerState* state) {
  std::vector<TaskInstance> examples;
  const std::size_t k = std::min(cfg.k, retriever_->corpus_size());
  if (k > 0) {
    examples = retriever_->retrieve(ctx.instruction, k);
    if (cfg.example_order == ExampleOrder::NearestFirst) {
      std::reverse(examples.begin(), examples.end());
    }
  }

  PromptSpec spec = build_prompt(ctx, examples, cfg);
  spec.logit_bias = build_logit_bias(ctx, cfg, backend_->tokenizer(), vocab_);

  CompletionRequest req;
  req.prompt = spec.text;
  req.logit_bias = spec.logit_bias;
  req.temperature = spec.temperature;
  req.stop = spec.stop;
  req.max_tokens = cfg.max_tokens;

  // One retry on malformed output, then give up so episodes cannot loop on
  // a backend that never produces a parsable plan.
  PlannerError last_error;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::string completion;
    const auto start = std::chrono::steady_clock::now();
    try {
      completion = backend_->complete(req);
    } catch (const BackendError& e) {
      return PlannerError{PlannerError::Kind::Backend,
                          std::string(backend_error_kind_name(e.kind)) + ": " + e.what(),
                          "", std::nullopt};
    }
    double latency_ms = 0.0;
    if (!backend_->deterministic()) {
      latency_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    }

    auto parsed = parse_hlp(completion, vocab_);
    if (log_sink_) {
      PlanCallRecord record;
      record.episode_id = state ? state->episode_id : "";
      record.t = state ? state->t : 0;
      record.prompt_hash = hash_hex(req.prompt);
      record.raw_completion = completion;
      if (parsed.ok()) record.parsed_plan = parsed.value();
      record.latency_ms = latency_ms;
      log_sink_(record);
    }
    if (parsed.ok()) return std::move(parsed.value());
    last_error = PlannerError{PlannerError::Kind::Parse, parsed.error().message(),
                              completion, parsed.error()};
  }
  return last_error;
}

Result<HighLevelPlan, PlannerError> Planner::plan(PlannerState& state) {
  PlanningContext ctx;
  ctx.instruction = state.instruction;
  ctx.completed = state.completed;
  ctx.observed_objects =
      sorted_object_set({state.observed.begin(), state.observed.end()});

  auto result = run_completion(ctx, config_, &state);
  ++state.plan_calls;
  if (state.plan_calls > 1) ++state.replan_count;
  return result;
}

Result<HighLevelPlan, PlannerError> Planner::static_plan(const Instruction& instruction) {
  PromptConfig cfg = config_;
  cfg.mode = PlanningMode::Static;
  PlanningContext ctx;
  ctx.instruction = instruction;
  return run_completion(ctx, cfg, nullptr);
}

}  // namespace hlplan
