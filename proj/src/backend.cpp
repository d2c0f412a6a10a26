#include "hlplan/backend.hpp"

#include <cctype>

namespace hlplan {

nlohmann::json completion_request_to_json(const CompletionRequest& req) {
  nlohmann::json j;
  j["prompt"] = req.prompt;
  j["logit_bias"] = req.logit_bias;
  j["temperature"] = req.temperature;
  j["stop"] = req.stop;
  j["max_tokens"] = req.max_tokens;
  return j;
}

std::string_view backend_error_kind_name(BackendErrorKind kind) {
  switch (kind) {
    case BackendErrorKind::Timeout: return "Timeout";
    case BackendErrorKind::RateLimited: return "RateLimited";
    case BackendErrorKind::AuthFailure: return "AuthFailure";
    case BackendErrorKind::NoRuleMatched: return "NoRuleMatched";
    case BackendErrorKind::CacheMiss: return "CacheMiss";
    case BackendErrorKind::Transport: return "Transport";
    case BackendErrorKind::BadResponse: return "BadResponse";
  }
  return "?";
}

TokenizerRef LLMBackend::tokenizer() const {
  return [](const std::string& text) { return whitespace_tokenize(text); };
}

std::vector<std::string> whitespace_tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(static_cast<char>(c));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string truncate_at_stop(std::string text, const std::string& stop) {
  if (stop.empty()) return text;
  const std::size_t pos = text.find(stop);
  if (pos != std::string::npos) text.resize(pos);
  return text;
}

}  // namespace hlplan
