#pragma once

#include <filesystem>
#include <memory>

#include "hlplan/backend.hpp"

namespace hlplan {

// Records real API responses to disk and replays them on later runs. In
// replay-only mode (no inner backend) a cache miss is an error. Cache files
// are named by a hash of the canonical request JSON.
class ReplayBackend : public LLMBackend {
 public:
  ReplayBackend(std::filesystem::path cache_dir,
                std::shared_ptr<LLMBackend> inner = nullptr);

  std::string complete(const CompletionRequest& req) override;
  TokenizerRef tokenizer() const override;
  bool deterministic() const override { return true; }

  static std::string request_key(const CompletionRequest& req);

 private:
  std::filesystem::path cache_dir_;
  std::shared_ptr<LLMBackend> inner_;
};

}  // namespace hlplan
