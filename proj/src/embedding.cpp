#include "hlplan/embedding.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "httplib.h"
#include "json.hpp"

#include "hlplan/rng.hpp"
#include "hlplan/types.hpp"

namespace hlplan {

LexicalEmbeddingProvider::LexicalEmbeddingProvider(std::size_t dimension)
    : dimension_(dimension) {
  if (dimension_ == 0) throw std::invalid_argument("embedding dimension must be positive");
}

std::vector<std::string> LexicalEmbeddingProvider::tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty()) {
    const std::string whole = to_lower(trim(text));
    if (!whole.empty()) tokens.push_back(whole);
  }
  return tokens;
}

EmbeddingVector LexicalEmbeddingProvider::embed(const std::string& text) const {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ProviderFailure("cannot embed empty text");
  }
  EmbeddingVector v(dimension_, 0.0);
  for (const std::string& token : tokens) {
    v[fnv1a64(token) % dimension_] += 1.0;
  }
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  const double norm = std::sqrt(norm_sq);
  for (double& x : v) x /= norm;
  return v;
}

std::string LexicalEmbeddingProvider::identifier() const {
  return "lexical-fnv1a64-d" + std::to_string(dimension_) + "-v1";
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string endpoint, std::string auth_token,
                                             std::size_t dimension)
    : endpoint_(std::move(endpoint)), auth_token_(std::move(auth_token)),
      dimension_(dimension) {}

std::unique_ptr<HttpEmbeddingProvider> HttpEmbeddingProvider::from_env() {
  const char* endpoint = std::getenv("HLPLAN_EMBED_ENDPOINT");
  if (endpoint == nullptr || *endpoint == '\0') {
    throw ProviderFailure("HLPLAN_EMBED_ENDPOINT is not set");
  }
  const char* token = std::getenv("HLPLAN_EMBED_TOKEN");
  return std::make_unique<HttpEmbeddingProvider>(endpoint, token ? token : "");
}

EmbeddingVector HttpEmbeddingProvider::embed(const std::string& text) const {
  httplib::Client client(endpoint_);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  httplib::Headers headers;
  if (!auth_token_.empty()) {
    headers.emplace("Authorization", "Bearer " + auth_token_);
  }
  const nlohmann::json body{{"text", text}};
  auto res = client.Post("/embed", headers, body.dump(), "application/json");
  if (!res) {
    throw ProviderFailure("embedding service unreachable: " + endpoint_);
  }
  if (res->status != 200) {
    throw ProviderFailure("embedding service returned status " +
                          std::to_string(res->status));
  }
  try {
    const nlohmann::json j = nlohmann::json::parse(res->body);
    EmbeddingVector v = j.at("embedding").get<EmbeddingVector>();
    if (v.empty()) throw ProviderFailure("embedding service returned empty vector");
    if (dimension_ == 0) dimension_ = v.size();
    if (v.size() != dimension_) {
      throw ProviderFailure("embedding dimension mismatch");
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw ProviderFailure("non-finite embedding component");
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ProviderFailure(std::string("bad embedding service response: ") + e.what());
  }
}

std::string HttpEmbeddingProvider::identifier() const {
  return "http-" + endpoint_;
}

EmbeddingVector embed_text(const std::string& text, const EmbeddingProvider& provider) {
  if (trim(text).empty()) {
    throw ProviderFailure("cannot embed empty text");
  }
  return provider.embed(text);
}

double euclidean_distance(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("embedding dimensions differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::optional<EmbeddingCache> EmbeddingCache::load(const std::filesystem::path& path,
                                                   const std::string& provider_id) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    const nlohmann::json header = nlohmann::json::parse(line);
    if (header.at("provider").get<std::string>() != provider_id) {
      return std::nullopt;  // stale cache
    }
    EmbeddingCache cache;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      const nlohmann::json j = nlohmann::json::parse(line);
      cache.vectors_[j.at("id").get<std::string>()] = j.at("v").get<EmbeddingVector>();
    }
    return cache;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void EmbeddingCache::save(const std::filesystem::path& path,
                          const std::string& provider_id) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write embedding cache: " + path.string());
  }
  std::size_t dim = 0;
  if (!vectors_.empty()) dim = vectors_.begin()->second.size();
  out << nlohmann::json{{"provider", provider_id}, {"dimension", dim}}.dump() << '\n';
  for (const auto& [id, v] : vectors_) {
    out << nlohmann::json{{"id", id}, {"v", v}}.dump() << '\n';
  }
}

std::optional<EmbeddingVector> EmbeddingCache::get(const std::string& id) const {
  auto it = vectors_.find(id);
  if (it == vectors_.end()) return std::nullopt;
  return it->second;
}

void EmbeddingCache::put(const std::string& id, EmbeddingVector v) {
  vectors_[id] = std::move(v);
}

}  // namespace hlplan
