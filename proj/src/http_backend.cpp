#include "hlplan/http_backend.hpp"

#include <cstdlib>
#include <thread>

#include "httplib.h"

namespace hlplan {
namespace {

bool retryable_status(int status) {
  return status == 408 || status == 429 || status >= 500;
}

std::string request_id_of(const httplib::Response& res) {
  auto it = res.headers.find("x-request-id");
  if (it != res.headers.end()) return it->second;
  try {
    const nlohmann::json j = nlohmann::json::parse(res.body);
    if (j.contains("id")) return j.at("id").get<std::string>();
  } catch (...) {
  }
  return "";
}

}  // namespace

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (const char* key = std::getenv(config_.api_key_env.c_str())) {
    api_key_ = key;
  }
}

std::string HttpBackend::complete(const CompletionRequest& req) {
  nlohmann::json body;
  if (!config_.model.empty()) body["model"] = config_.model;
  body["prompt"] = req.prompt;
  body["temperature"] = req.temperature;
  body["max_tokens"] = req.max_tokens;
  if (!req.stop.empty()) body["stop"] = nlohmann::json::array({req.stop});
  if (!req.logit_bias.empty()) body["logit_bias"] = req.logit_bias;
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  std::chrono::milliseconds backoff = config_.initial_backoff;
  std::string last_error = "request failed";
  std::string last_request_id;
  BackendErrorKind last_kind = BackendErrorKind::Transport;

  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(backoff * 2, config_.max_backoff);
    }
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.request_deadline.count(), 0);
    client.set_read_timeout(config_.request_deadline.count(), 0);
    client.set_write_timeout(config_.request_deadline.count(), 0);

    auto res = client.Post(config_.path, headers, payload, "application/json");
    if (!res) {
      const auto err = res.error();
      if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
          err == httplib::Error::Write) {
        last_kind = BackendErrorKind::Timeout;
        last_error = "request timed out";
      } else {
        last_kind = BackendErrorKind::Transport;
        last_error = "connection failed: " + httplib::to_string(err);
      }
      continue;
    }
    last_request_id = request_id_of(*res);
    if (res->status == 401 || res->status == 403) {
      throw BackendError(BackendErrorKind::AuthFailure,
                         "authentication failed (status " + std::to_string(res->status) + ")",
                         last_request_id);
    }
    if (retryable_status(res->status)) {
      last_kind = res->status == 429 ? BackendErrorKind::RateLimited
                                     : BackendErrorKind::Transport;
      last_error = "server returned status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw BackendError(BackendErrorKind::BadResponse,
                         "unexpected status " + std::to_string(res->status),
                         last_request_id);
    }
    try {
      const nlohmann::json j = nlohmann::json::parse(res->body);
      std::string text = j.at("choices").at(0).at("text").get<std::string>();
      return truncate_at_stop(std::move(text), req.stop);
    } catch (const nlohmann::json::exception& e) {
      throw BackendError(BackendErrorKind::BadResponse,
                         std::string("malformed completion response: ") + e.what(),
                         last_request_id);
    }
  }
  throw BackendError(last_kind, last_error + " after " +
                                    std::to_string(config_.max_attempts) + " attempts",
                     last_request_id);
}

}  // namespace hlplan
