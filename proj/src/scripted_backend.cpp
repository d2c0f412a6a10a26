#include "hlplan/scripted_backend.hpp"

#include <algorithm>
#include <fstream>

#include "hlplan/dataset.hpp"
#include "hlplan/parse.hpp"

namespace hlplan {
namespace {

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
    if (begin > text.size()) break;
  }
  return lines;
}

}  // namespace

PromptFields parse_prompt_tail(const std::string& prompt) {
  const std::vector<std::string> lines = split_lines(prompt);
  // The test block starts after the last blank line.
  std::size_t block_start = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) block_start = i + 1;
  }
  PromptFields fields;
  for (std::size_t i = block_start; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (starts_with(line, "Task description: ")) {
      fields.goal = trim(line.substr(std::string_view("Task description: ").size()));
    } else if (starts_with(line, "Step-by-step instructions:")) {
      fields.has_steps_line = true;
    } else if (starts_with(line, "Completed plans:")) {
      fields.completed_text = trim(line.substr(std::string_view("Completed plans:").size()));
    } else if (starts_with(line, "Visible objects are ")) {
      const std::string list = line.substr(std::string_view("Visible objects are ").size());
      std::size_t begin = 0;
      while (begin <= list.size()) {
        std::size_t end = list.find(',', begin);
        if (end == std::string::npos) end = list.size();
        const std::string name = to_lower(trim(list.substr(begin, end - begin)));
        if (!name.empty()) fields.observed.push_back(name);
        begin = end + 1;
        if (begin > list.size()) break;
      }
    }
  }
  return fields;
}

ScriptedBackend::ScriptedBackend(ObjectVocabulary vocab) : vocab_(std::move(vocab)) {}

void ScriptedBackend::add_rule(ScriptedRule rule) { rules_.push_back(std::move(rule)); }

void ScriptedBackend::add_oracle_corpus(std::span<const TaskInstance> corpus) {
  for (const TaskInstance& task : corpus) {
    oracle_plans_[trim(task.instruction.goal)] = task.gold_hlp;
  }
}

ScriptedBackend ScriptedBackend::from_json_file(const std::filesystem::path& path,
                                                const ObjectVocabulary& vocab) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open scripted rules file: " + path.string());
  }
  nlohmann::json j;
  in >> j;
  ScriptedBackend backend(vocab);
  if (j.contains("rules")) {
    for (const nlohmann::json& r : j.at("rules")) {
      ScriptedRule rule;
      if (r.contains("goal")) rule.goal = r.at("goal").get<std::string>();
      if (r.contains("completed")) rule.completed = r.at("completed").get<std::string>();
      auto read_list = [&](const char* key, std::vector<std::string>& out) {
        if (r.contains(key)) out = r.at(key).get<std::vector<std::string>>();
      };
      read_list("completed_includes", rule.completed_includes);
      read_list("completed_excludes", rule.completed_excludes);
      read_list("observed_includes", rule.observed_includes);
      read_list("observed_excludes", rule.observed_excludes);
      rule.respond = r.at("respond").get<std::string>();
      backend.add_rule(std::move(rule));
    }
  }
  if (j.contains("oracle_corpus") && !j.at("oracle_corpus").is_null()) {
    const std::filesystem::path corpus_path =
        path.parent_path() / j.at("oracle_corpus").get<std::string>();
    const std::vector<TaskInstance> corpus = load_dataset(corpus_path, vocab);
    backend.add_oracle_corpus(corpus);
  }
  return backend;
}

ScriptedBackend ScriptedBackend::oracle(std::span<const TaskInstance> corpus,
                                        const ObjectVocabulary& vocab) {
  ScriptedBackend backend(vocab);
  backend.add_oracle_corpus(corpus);
  return backend;
}

std::string ScriptedBackend::complete(const CompletionRequest& req) {
  const PromptFields fields = parse_prompt_tail(req.prompt);

  auto observed_has = [&](const std::string& name) {
    const std::string key = to_lower(trim(name));
    return std::find(fields.observed.begin(), fields.observed.end(), key) !=
           fields.observed.end();
  };

  for (const ScriptedRule& rule : rules_) {
    if (rule.goal && trim(*rule.goal) != fields.goal) continue;
    if (rule.completed && *rule.completed != "*" &&
        trim(*rule.completed) != fields.completed_text) {
      continue;
    }
    bool matched = true;
    for (const std::string& s : rule.completed_includes) {
      if (fields.completed_text.find(s) == std::string::npos) { matched = false; break; }
    }
    if (!matched) continue;
    for (const std::string& s : rule.completed_excludes) {
      if (fields.completed_text.find(s) != std::string::npos) { matched = false; break; }
    }
    if (!matched) continue;
    for (const std::string& s : rule.observed_includes) {
      if (!observed_has(s)) { matched = false; break; }
    }
    if (!matched) continue;
    for (const std::string& s : rule.observed_excludes) {
      if (observed_has(s)) { matched = false; break; }
    }
    if (!matched) continue;
    return truncate_at_stop(rule.respond, req.stop);
  }

  auto it = oracle_plans_.find(fields.goal);
  if (it != oracle_plans_.end()) {
    const HighLevelPlan& gold = it->second;
    HighLevelPlan completed;
    if (!fields.completed_text.empty()) {
      auto parsed = parse_hlp(fields.completed_text, vocab_);
      if (parsed.ok()) completed = std::move(parsed.value());
    }
    // Continuation of the completed prefix; a diverged prefix restarts the
    // gold plan from scratch.
    const bool is_prefix =
        completed.size() <= gold.size() &&
        std::equal(completed.begin(), completed.end(), gold.begin());
    HighLevelPlan rest;
    if (is_prefix) {
      rest.assign(gold.begin() + static_cast<std::ptrdiff_t>(completed.size()), gold.end());
    } else {
      rest = gold;
    }
    return serialize_hlp(rest);
  }

  throw BackendError(BackendErrorKind::NoRuleMatched,
                     "no scripted rule matched goal \"" + fields.goal + "\"");
}

}  // namespace hlplan
