#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hlplan/backend.hpp"
#include "hlplan/task.hpp"

namespace hlplan {

// Fields the scripted backend reads back out of the rendered prompt's test
// block (the block after the last blank line).
struct PromptFields {
  std::string goal;
  std::string completed_text;
  std::vector<std::string> observed;  // lowercase class names
  bool has_steps_line = false;
};

PromptFields parse_prompt_tail(const std::string& prompt);

// One scripted response. All present matchers must hold; rules are tried
// in insertion order and the first match wins.
struct ScriptedRule {
  std::optional<std::string> goal;       // exact match after trimming
  std::optional<std::string> completed;  // "*" any, otherwise exact text ("" = empty)
  std::vector<std::string> completed_includes;  // substrings of the completed text
  std::vector<std::string> completed_excludes;
  std::vector<std::string> observed_includes;  // class names, case-insensitive
  std::vector<std::string> observed_excludes;
  std::string respond;
};

// Deterministic stand-in for the completion API: an ordered rule table
// plus an optional oracle fallback that answers any known goal with the
// gold plan minus the completed prefix.
class ScriptedBackend : public LLMBackend {
 public:
  explicit ScriptedBackend(ObjectVocabulary vocab);

  void add_rule(ScriptedRule rule);
  void add_oracle_corpus(std::span<const TaskInstance> corpus);

  // Rules file: {"rules": [...], "oracle_corpus": "<dataset path>"?}; the
  // corpus path is resolved relative to the rules file.
  static ScriptedBackend from_json_file(const std::filesystem::path& path,
                                        const ObjectVocabulary& vocab);
  static ScriptedBackend oracle(std::span<const TaskInstance> corpus,
                                const ObjectVocabulary& vocab);

  std::string complete(const CompletionRequest& req) override;
  bool deterministic() const override { return true; }

 private:
  ObjectVocabulary vocab_;
  std::vector<ScriptedRule> rules_;
  std::map<std::string, HighLevelPlan> oracle_plans_;  // goal -> gold
};

}  // namespace hlplan
