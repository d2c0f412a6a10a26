#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlplan/prompt.hpp"

namespace hlplan {

struct CompletionRequest {
  std::string prompt;
  std::map<std::string, double> logit_bias;
  double temperature = 0.0;
  std::string stop = "\n";
  int max_tokens = 128;
};

nlohmann::json completion_request_to_json(const CompletionRequest& req);

enum class BackendErrorKind {
  Timeout,
  RateLimited,
  AuthFailure,
  NoRuleMatched,
  CacheMiss,
  Transport,
  BadResponse,
};

std::string_view backend_error_kind_name(BackendErrorKind kind);

class BackendError : public std::runtime_error {
 public:
  BackendError(BackendErrorKind kind, const std::string& message,
               std::string request_id = "")
      : std::runtime_error(message), kind(kind), request_id(std::move(request_id)) {}
  BackendErrorKind kind;
  std::string request_id;
};

// Uniform completion interface over the real HTTP API and the offline
// backends. Logit-bias keys are only meaningful under the active backend's
// own tokenizer, so the tokenizer lives here.
class LLMBackend {
 public:
  virtual ~LLMBackend() = default;
  // Raw continuation text, truncated at the stop sequence.
  virtual std::string complete(const CompletionRequest& req) = 0;
  virtual TokenizerRef tokenizer() const;
  virtual bool deterministic() const = 0;
  // 0 means unbounded; the episode harness queues requests beyond this.
  virtual std::size_t max_concurrency() const { return 0; }
};

std::vector<std::string> whitespace_tokenize(const std::string& text);

std::string truncate_at_stop(std::string text, const std::string& stop);

}  // namespace hlplan
