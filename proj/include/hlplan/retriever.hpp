#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hlplan/embedding.hpp"
#include "hlplan/task.hpp"

namespace hlplan {

class EmptyCorpus : public std::runtime_error {
 public:
  EmptyCorpus() : std::runtime_error("retrieval corpus is empty") {}
};

// The k corpus items nearest to the query instruction by Euclidean distance
// between provider embeddings. Distance ties break by ascending id; the
// result is ordered by descending distance, most similar last, which is the
// in-context order used by the prompt builder.
std::vector<TaskInstance> knn_retrieve(const Instruction& query,
                                       std::span<const TaskInstance> corpus,
                                       std::size_t k, const EmbeddingProvider& provider,
                                       bool use_steps = false);

// In-context example source bound to a corpus; swapped out wholesale for
// the retrieval ablation.
class ExampleRetriever {
 public:
  virtual ~ExampleRetriever() = default;
  virtual std::vector<TaskInstance> retrieve(const Instruction& query, std::size_t k) = 0;
  virtual std::size_t corpus_size() const = 0;
};

class KnnRetriever : public ExampleRetriever {
 public:
  // Corpus embeddings are computed up front unless precomputed vectors
  // (aligned with the corpus) are supplied, e.g. from an EmbeddingCache.
  KnnRetriever(std::vector<TaskInstance> corpus, std::shared_ptr<const EmbeddingProvider> provider,
               bool use_steps = false,
               std::vector<EmbeddingVector> precomputed = {});

  std::vector<TaskInstance> retrieve(const Instruction& query, std::size_t k) override;
  std::size_t corpus_size() const override { return corpus_.size(); }

 private:
  std::vector<TaskInstance> corpus_;
  std::shared_ptr<const EmbeddingProvider> provider_;
  bool use_steps_;
  std::vector<EmbeddingVector> corpus_embeddings_;
};

// Uniform random examples, seeded; the kNN ablation baseline.
class RandomRetriever : public ExampleRetriever {
 public:
  RandomRetriever(std::vector<TaskInstance> corpus, std::uint64_t seed);

  std::vector<TaskInstance> retrieve(const Instruction& query, std::size_t k) override;
  std::size_t corpus_size() const override { return corpus_.size(); }

 private:
  std::vector<TaskInstance> corpus_;
  std::mt19937_64 gen_;
};

}  // namespace hlplan
