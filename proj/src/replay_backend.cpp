#include "hlplan/replay_backend.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hlplan/rng.hpp"

namespace hlplan {

ReplayBackend::ReplayBackend(std::filesystem::path cache_dir,
                             std::shared_ptr<LLMBackend> inner)
    : cache_dir_(std::move(cache_dir)), inner_(std::move(inner)) {
  std::filesystem::create_directories(cache_dir_);
}

std::string ReplayBackend::request_key(const CompletionRequest& req) {
  const std::string canonical = completion_request_to_json(req).dump();
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(canonical);
  return out.str();
}

std::string ReplayBackend::complete(const CompletionRequest& req) {
  const std::filesystem::path file = cache_dir_ / (request_key(req) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    return j.at("response").get<std::string>();
  }
  if (!inner_) {
    throw BackendError(BackendErrorKind::CacheMiss,
                       "no recorded response for request " + request_key(req));
  }
  const std::string response = inner_->complete(req);
  nlohmann::json j;
  j["request"] = completion_request_to_json(req);
  j["response"] = response;
  std::ofstream out(file);
  out << j.dump(2) << '\n';
  return response;
}

TokenizerRef ReplayBackend::tokenizer() const {
  return inner_ ? inner_->tokenizer() : LLMBackend::tokenizer();
}

}  // namespace hlplan
