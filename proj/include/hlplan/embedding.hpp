#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlplan {

using EmbeddingVector = std::vector<double>;

class ProviderFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sentence embedding source. embed() must be deterministic for a fixed
// provider and text, and safe for concurrent calls.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual EmbeddingVector embed(const std::string& text) const = 0;
  virtual std::size_t dimension() const = 0;
  // Stable identity string; changing it invalidates cached corpus vectors.
  virtual std::string identifier() const = 0;
};

// Offline default: hashed token-count vector. Text is lowercased and split
// into alphanumeric runs; each token increments the coordinate at
// fnv1a64(token) % dimension; the result is L2-normalized. Text with no
// alphanumeric characters hashes as one whole-string token.
class LexicalEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit LexicalEmbeddingProvider(std::size_t dimension = 256);
  EmbeddingVector embed(const std::string& text) const override;
  std::size_t dimension() const override { return dimension_; }
  std::string identifier() const override;

  static std::vector<std::string> tokenize(const std::string& text);

 private:
  std::size_t dimension_;
};

// Drop-in external service: POST {"text": ...} to the endpoint, expects
// {"embedding": [...]}. Endpoint and optional bearer token come from the
// constructor or the HLPLAN_EMBED_ENDPOINT / HLPLAN_EMBED_TOKEN env vars.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::string endpoint, std::string auth_token = "",
                        std::size_t dimension = 0);
  static std::unique_ptr<HttpEmbeddingProvider> from_env();

  EmbeddingVector embed(const std::string& text) const override;
  std::size_t dimension() const override { return dimension_; }
  std::string identifier() const override;

 private:
  std::string endpoint_;
  std::string auth_token_;
  mutable std::size_t dimension_;
};

// Validated embed call: rejects empty text, wraps provider faults.
EmbeddingVector embed_text(const std::string& text, const EmbeddingProvider& provider);

double euclidean_distance(const EmbeddingVector& a, const EmbeddingVector& b);

// JSONL cache of id -> vector, invalidated when the provider identifier
// changes. First line is a header {"provider", "dimension"}.
class EmbeddingCache {
 public:
  static std::optional<EmbeddingCache> load(const std::filesystem::path& path,
                                            const std::string& provider_id);
  void save(const std::filesystem::path& path, const std::string& provider_id) const;

  std::optional<EmbeddingVector> get(const std::string& id) const;
  void put(const std::string& id, EmbeddingVector v);

 private:
  std::map<std::string, EmbeddingVector> vectors_;
};

}  // namespace hlplan
