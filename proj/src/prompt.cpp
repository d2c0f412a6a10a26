#include "hlplan/prompt.hpp"

#include <algorithm>

#include "hlplan/parse.hpp"

namespace hlplan {
namespace {

constexpr std::string_view kTaskIntroduction =
    "Create a high-level plan for completing a household task using the "
    "allowed actions and visible objects.";

std::string allowed_actions_line() {
  std::string line = "Allowed actions are ";
  const auto& actions = all_actions();
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) line += ", ";
    line += action_name(actions[i]);
  }
  return line;
}

// Prompt lines must stay lines; instruction text is validated at dataset
// load but ad-hoc contexts may still carry newlines.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

void append_line(std::string& out, std::string_view line) {
  out += line;
  out += '\n';
}

void append_instruction_lines(std::string& out, const Instruction& instr,
                              const PromptConfig& cfg) {
  append_line(out, "Task description: " + one_line(instr.goal));
  if (cfg.use_steps) {
    const std::string steps = steps_text(instr);
    if (!steps.empty()) {
      append_line(out, "Step-by-step instructions: " + one_line(steps));
    }
  }
}

void append_completed_line(std::string& out, const HighLevelPlan& completed) {
  if (completed.empty()) {
    append_line(out, "Completed plans:");
  } else {
    append_line(out, "Completed plans: " + serialize_hlp(completed));
  }
}

std::string visible_objects_line(const std::vector<ObjectClass>& objects) {
  std::string line = "Visible objects are ";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (i > 0) line += ", ";
    line += to_lower(objects[i].name());
  }
  return line;
}

}  // namespace

std::vector<ObjectClass> sorted_object_set(std::vector<ObjectClass> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  return objects;
}

PromptSpec build_prompt(const PlanningContext& ctx, std::span<const TaskInstance> examples,
                        const PromptConfig& cfg) {
  std::string text;
  append_line(text, kTaskIntroduction);
  append_line(text, "");
  append_line(text, allowed_actions_line());
  append_line(text, "");

  for (const TaskInstance& example : examples) {
    append_instruction_lines(text, example.instruction, cfg);
    // Examples carry no mid-task annotations: empty completed prefix, full
    // gold plan as the next plan.
    append_completed_line(text, {});
    append_line(text, "Next plan: " + serialize_hlp(example.gold_hlp));
    append_line(text, "");
  }

  append_instruction_lines(text, ctx.instruction, cfg);
  append_completed_line(text, ctx.completed);
  if (cfg.mode == PlanningMode::Dynamic) {
    append_line(text, visible_objects_line(ctx.observed_objects));
  }
  text += "Next plan:";

  PromptSpec spec;
  spec.text = std::move(text);
  spec.temperature = cfg.temperature;
  spec.stop = cfg.stop_sequence;
  return spec;
}

std::map<std::string, double> build_logit_bias(const PlanningContext& ctx,
                                               const PromptConfig& cfg,
                                               const TokenizerRef& tokenizer,
                                               const ObjectVocabulary& vocab) {
  std::map<std::string, double> bias;
  auto add_tokens = [&](const std::string& text) {
    for (const std::string& token : tokenizer(text)) {
      bias[token] = cfg.logit_bias_value;
    }
  };
  for (HighLevelAction a : all_actions()) {
    add_tokens(std::string(action_name(a)));
  }
  if (cfg.mode == PlanningMode::Dynamic) {
    for (const ObjectClass& c : ctx.observed_objects) {
      add_tokens(c.name());
    }
  } else {
    for (const ObjectClass& c : vocab.classes()) {
      add_tokens(c.name());
    }
  }
  return bias;
}

}  // namespace hlplan
