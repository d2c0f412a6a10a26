#pragma once

#include <chrono>
#include <string>

#include "hlplan/backend.hpp"

namespace hlplan {

struct HttpBackendConfig {
  std::string base_url;               // e.g. "http://localhost:8080"
  std::string path = "/v1/completions";
  std::string model;
  std::string api_key_env = "LLM_API_KEY";
  int max_attempts = 5;               // 1 initial try + retries with backoff
  std::chrono::milliseconds initial_backoff{250};
  std::chrono::milliseconds max_backoff{4000};
  std::chrono::seconds request_deadline{30};
};

// Completion-API client. The wire format follows the completions endpoint
// shape: {"model", "prompt", "temperature", "max_tokens", "stop",
// "logit_bias"} in, {"choices": [{"text": ...}], "id": ...} out. Logit-bias
// keys are token strings, so the serving side must accept string keys.
// Transient failures (connection errors, 408/429/5xx) retry with capped
// exponential backoff; errors carry the server request id when present.
class HttpBackend : public LLMBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string complete(const CompletionRequest& req) override;
  bool deterministic() const override { return false; }
  std::size_t max_concurrency() const override { return 4; }

 private:
  HttpBackendConfig config_;
  std::string api_key_;
};

}  // namespace hlplan
